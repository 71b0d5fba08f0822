#include "zww/factor_analysis.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace zww {

namespace {

// Dedup key for factor contents; letters are non-negative, so they embed in
// char32_t and std::hash<std::u32string> does the rest.
std::u32string content_key(const std::vector<Letter>& a, std::int64_t pos0, std::int64_t len) {
  std::u32string key;
  key.reserve(static_cast<std::size_t>(len));
  for (std::int64_t t = pos0; t < pos0 + len; ++t)
    key.push_back(static_cast<char32_t>(a[static_cast<std::size_t>(t)]));
  return key;
}

bool halves_equal(const std::vector<Letter>& a, std::int64_t s0, std::int64_t p) {
  for (std::int64_t t = 0; t < p; ++t)
    if (a[static_cast<std::size_t>(s0 + t)] != a[static_cast<std::size_t>(s0 + p + t)]) return false;
  return true;
}

void sort_witnesses(CensusReport& r) {
  std::sort(r.witnesses.begin(), r.witnesses.end());
}

}  // namespace

std::int64_t count_letter(const Word& w, Letter n) {
  return std::count(w.begin(), w.end(), n);
}

CensusReport palindrome_census(const Word& w, bool with_witnesses) {
  const auto& a = w.letters();
  const std::int64_t n = w.size();
  CensusReport r;
  r.witnesses_collected = with_witnesses;
  std::unordered_set<std::u32string> seen;
  // Every palindromic occurrence is a symmetric shrink of the maximal
  // palindrome at its center, so walking centers enumerates each (start,
  // length) pair exactly once.
  for (std::int64_t center = 0; center < 2 * n - 1; ++center) {
    std::int64_t lo = center / 2;
    std::int64_t hi = center - lo;  // == lo for odd lengths, lo + 1 for even
    while (lo >= 0 && hi < n && a[static_cast<std::size_t>(lo)] == a[static_cast<std::size_t>(hi)]) {
      ++r.total;
      std::int64_t len = hi - lo + 1;
      if (seen.insert(content_key(a, lo, len)).second) ++r.distinct;
      if (with_witnesses) r.witnesses.push_back({lo + 1, len});
      --lo;
      ++hi;
    }
  }
  sort_witnesses(r);
  return r;
}

CensusReport square_census(const Word& w, bool with_witnesses) {
  const auto& a = w.letters();
  const std::int64_t n = w.size();
  CensusReport r;
  r.witnesses_collected = with_witnesses;
  std::unordered_set<std::u32string> seen;
  for (std::int64_t p = 1; 2 * p <= n; ++p) {
    for (std::int64_t s0 = 0; s0 + 2 * p <= n; ++s0) {
      if (!halves_equal(a, s0, p)) continue;
      ++r.total;
      if (seen.insert(content_key(a, s0, 2 * p)).second) ++r.distinct;
      if (with_witnesses) r.witnesses.push_back({s0 + 1, p});
    }
  }
  sort_witnesses(r);
  return r;
}

CensusReport straddling_square_census(const Word& w, std::int64_t boundary, bool with_witnesses) {
  const std::int64_t n = w.size();
  if (boundary < 1 || boundary >= n)
    throw std::out_of_range("straddling_square_census: boundary " + std::to_string(boundary) +
                            " outside [1, " + std::to_string(n - 1) + "]");
  const auto& a = w.letters();
  CensusReport r;
  r.witnesses_collected = with_witnesses;
  std::unordered_set<std::u32string> seen;
  // 1-based extent [s, s + 2p - 1] must cover boundary and boundary + 1.
  for (std::int64_t p = 1; 2 * p <= n; ++p) {
    std::int64_t s_min = std::max<std::int64_t>(1, boundary + 2 - 2 * p);
    for (std::int64_t s = s_min; s <= boundary && s + 2 * p - 1 <= n; ++s) {
      std::int64_t s0 = s - 1;
      if (!halves_equal(a, s0, p)) continue;
      ++r.total;
      if (seen.insert(content_key(a, s0, 2 * p)).second) ++r.distinct;
      if (with_witnesses) r.witnesses.push_back({s, p});
    }
  }
  sort_witnesses(r);
  return r;
}

std::vector<RunOccurrence> run_census(const Word& w) {
  const auto& a = w.letters();
  const std::int64_t n = w.size();
  std::vector<RunOccurrence> runs;
  for (std::int64_t s0 = 0; s0 < n; ++s0) {
    for (std::int64_t p = 1; s0 + 2 * p <= n; ++p) {
      // maximal right extension of the p-periodicity starting at s0
      std::int64_t e = s0 + p;
      while (e < n && a[static_cast<std::size_t>(e)] == a[static_cast<std::size_t>(e - p)]) ++e;
      std::int64_t len = e - s0;
      if (len < 2 * p) continue;
      // leftmost start only
      if (s0 > 0 && a[static_cast<std::size_t>(s0 - 1)] == a[static_cast<std::size_t>(s0 - 1 + p)])
        continue;
      // p must be the minimal period of the extent
      bool minimal = true;
      for (std::int64_t q = 1; q < p && minimal; ++q) {
        bool periodic = true;
        for (std::int64_t t = s0 + q; t < e; ++t) {
          if (a[static_cast<std::size_t>(t)] != a[static_cast<std::size_t>(t - q)]) {
            periodic = false;
            break;
          }
        }
        if (periodic) minimal = false;
      }
      if (!minimal) continue;
      runs.push_back({s0 + 1, len, p});
    }
  }
  std::sort(runs.begin(), runs.end(), [](const RunOccurrence& x, const RunOccurrence& y) {
    return std::pair(x.start, x.period) < std::pair(y.start, y.period);
  });
  return runs;
}

bool is_lyndon(const Word& w) {
  if (w.empty()) throw std::invalid_argument("is_lyndon: empty word");
  const auto& a = w.letters();
  const std::int64_t n = w.size();
  for (std::int64_t s = 1; s < n; ++s) {
    if (!std::lexicographical_compare(a.begin(), a.end(), a.begin() + s, a.end())) return false;
  }
  // The suffix test above already rules out powers; reject them explicitly
  // anyway so the primitivity requirement is visible in the contract.
  for (std::int64_t p = 1; 2 * p <= n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::int64_t t = p; t < n && periodic; ++t)
      periodic = a[static_cast<std::size_t>(t)] == a[static_cast<std::size_t>(t - p)];
    if (periodic) return false;
  }
  return true;
}

LyndonArray lyndon_array_bruteforce(const Word& w) {
  if (w.empty()) throw std::invalid_argument("lyndon_array_bruteforce: empty word");
  const auto& a = w.letters();
  const std::int64_t n = w.size();
  LyndonArray out;
  out.ell.resize(static_cast<std::size_t>(n));
  // The longest Lyndon factor starting at i is the first factor of the
  // Lyndon factorization of the suffix w[i..n]; one forward scan finds it.
  for (std::int64_t i = 0; i < n; ++i) {
    std::int64_t j = i + 1, k = i;
    while (j < n && a[static_cast<std::size_t>(k)] <= a[static_cast<std::size_t>(j)]) {
      if (a[static_cast<std::size_t>(k)] < a[static_cast<std::size_t>(j)])
        k = i;
      else
        ++k;
      ++j;
    }
    out.ell[static_cast<std::size_t>(i)] = i + (j - k);  // 1-based end position
  }
  return ell_to_lambda(std::move(out));
}

std::map<Letter, std::int64_t> lyndon_factor_census(const Word& w) {
  const auto& a = w.letters();
  const std::int64_t n = w.size();
  std::map<Letter, std::int64_t> by_letter;
  std::unordered_set<std::u32string> seen;
  // At each start, the prefix of length L is Lyndon exactly when the Duval
  // scan sits at a full period (k back at the anchor) after consuming L
  // letters; collecting those prefixes enumerates every Lyndon occurrence.
  for (std::int64_t i = 0; i < n; ++i) {
    std::u32string key;
    key.push_back(static_cast<char32_t>(a[static_cast<std::size_t>(i)]));
    if (seen.insert(key).second) ++by_letter[a[static_cast<std::size_t>(i)]];
    std::int64_t j = i + 1, k = i;
    while (j < n && a[static_cast<std::size_t>(k)] <= a[static_cast<std::size_t>(j)]) {
      if (a[static_cast<std::size_t>(k)] < a[static_cast<std::size_t>(j)])
        k = i;
      else
        ++k;
      ++j;
      key.push_back(static_cast<char32_t>(a[static_cast<std::size_t>(j - 1)]));
      if (k == i && seen.insert(key).second) ++by_letter[a[static_cast<std::size_t>(i)]];
    }
  }
  return by_letter;
}

std::int64_t lyndon_occurrence_count(const Word& w) {
  const auto& a = w.letters();
  const std::int64_t n = w.size();
  std::int64_t total = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    ++total;  // length-1 prefix
    std::int64_t j = i + 1, k = i;
    while (j < n && a[static_cast<std::size_t>(k)] <= a[static_cast<std::size_t>(j)]) {
      if (a[static_cast<std::size_t>(k)] < a[static_cast<std::size_t>(j)])
        k = i;
      else
        ++k;
      ++j;
      if (k == i) ++total;
    }
  }
  return total;
}

}  // namespace zww
