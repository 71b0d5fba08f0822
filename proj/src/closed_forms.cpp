#include "zww/closed_forms.hpp"

#include <array>
#include <limits>
#include <stdexcept>
#include <string>

#include "zww/factor_analysis.hpp"

namespace zww {

namespace {

using Int128 = __int128;

constexpr int kMaxLucasIndex = 90;  // L_91 exceeds 64 bits

constexpr auto kLucasTable = [] {
  std::array<std::int64_t, kMaxLucasIndex + 1> t{};
  t[1] = 1;
  t[2] = 3;
  for (int i = 3; i <= kMaxLucasIndex; ++i) t[i] = t[i - 1] + t[i - 2];
  return t;
}();

std::int64_t to_int64_checked(Int128 v, const char* what) {
  if (v > Int128(std::numeric_limits<std::int64_t>::max()) ||
      v < Int128(std::numeric_limits<std::int64_t>::min()))
    throw std::overflow_error(std::string(what) + ": result exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

}  // namespace

std::int64_t lucas(int i) {
  if (i < 1 || i > kMaxLucasIndex)
    throw std::out_of_range("lucas index " + std::to_string(i) + " outside [1, " +
                            std::to_string(kMaxLucasIndex) + "]");
  return kLucasTable[i];
}

std::int64_t binomial_checked(std::int64_t x, std::int64_t y) {
  if (y > x || x < 0 || y < 0) return 0;
  y = std::min(y, x - y);
  Int128 acc = 1;
  for (std::int64_t t = 1; t <= y; ++t) {
    // acc == C(x-y+t-1, t-1) <= 2^63 here, so the product fits 128 bits and
    // the division is exact. Partial binomials only grow, so checking each
    // step catches every overflowing result.
    acc = acc * (x - y + t) / t;
    if (acc > Int128(std::numeric_limits<std::int64_t>::max()))
      throw std::overflow_error("binomial_checked: C(" + std::to_string(x) + ", " +
                                std::to_string(y) + ") exceeds 64 bits");
  }
  return static_cast<std::int64_t>(acc);
}

std::int64_t letter_count(int i, Letter n) {
  if (i < 0 || n < 0) throw std::invalid_argument("letter_count: negative argument");
  std::int64_t half = n / 2;
  return binomial_checked(static_cast<std::int64_t>(i) - n + half, half);
}

std::int64_t total_palindromes(int i) {
  if (i < 0) throw std::invalid_argument("total_palindromes: negative index");
  constexpr std::int64_t base[] = {1, 2, 3, 6};
  if (i <= 3) return base[i];
  return fib(i + 3).value - 2 * fib(i - 2).value;
}

std::int64_t distinct_palindromes(int i) {
  if (i < 0) throw std::invalid_argument("distinct_palindromes: negative index");
  if (i <= 2) return i + 1;
  return (5LL * i) / 2 - 2;
}

std::vector<Word> PalindromeInventory::all() const {
  std::vector<Word> out;
  out.reserve(singles.size() + doubles.size() + triples.size());
  out.insert(out.end(), singles.begin(), singles.end());
  out.insert(out.end(), doubles.begin(), doubles.end());
  out.insert(out.end(), triples.begin(), triples.end());
  return out;
}

std::int64_t PalindromeInventory::count() const {
  return static_cast<std::int64_t>(singles.size() + doubles.size() + triples.size());
}

PalindromeInventory palindrome_inventory(int i) {
  if (i < 0) throw std::invalid_argument("palindrome_inventory: negative index");
  PalindromeInventory inv;
  for (Letter c = 0; c <= i; ++c) inv.singles.push_back(word_unchecked({c}));
  // (2j)(2j) first occurs in W_{2j+1}
  for (Letter j = 1; 2 * j + 1 <= i; ++j) inv.doubles.push_back(word_unchecked({2 * j, 2 * j}));
  // 2j (+) 232 and 2j (+) 323 first occur in W_{2j+4}
  for (Letter j = 0; 2 * j + 4 <= i; ++j) {
    inv.triples.push_back(word_unchecked({2 * j + 2, 2 * j + 3, 2 * j + 2}));
    inv.triples.push_back(word_unchecked({2 * j + 3, 2 * j + 2, 2 * j + 3}));
  }
  return inv;
}

std::int64_t distinct_square_count(int m) {
  if (m < 1) throw std::invalid_argument("distinct_square_count requires m >= 1");
  std::int64_t k = m - 1;
  return (k / 2) * ((k + 1) / 2);
}

SquareInventory new_squares(int k, std::int64_t max_length) {
  if (k < 0) throw std::invalid_argument("new_squares: negative index");
  SquareInventory inv;
  inv.distinct_count = distinct_square_count(k + 1);
  Word host = zww_word(k, max_length);
  for (int i = 1; i <= k / 2; ++i) {
    int j = k - 2 * i;
    std::int64_t period = fib(j + 2).value;
    Word block = host.sub(host.size() - period, period);
    std::vector<Letter> doubled;
    doubled.reserve(static_cast<std::size_t>(2 * period));
    doubled.insert(doubled.end(), block.begin(), block.end());
    doubled.insert(doubled.end(), block.begin(), block.end());
    inv.new_periods.push_back(period);
    inv.new_squares.push_back(word_unchecked(std::move(doubled)));
  }
  return inv;
}

std::int64_t total_squares(int i) {
  if (i < 1) throw std::invalid_argument("total_squares requires i >= 1");
  return fib(i).value - 1;
}

std::int64_t straddling_square_count(int i) {
  if (i < 2) throw std::invalid_argument("straddling_square_count requires i >= 2");
  return i < 3 ? 0 : 1;
}

std::int64_t lyndon_count(int n, Letter c) {
  if (n < 0 || c < 0) throw std::invalid_argument("lyndon_count: negative argument");
  if (c == 0) return fib(n + 2).value;
  if (c > n) return 0;
  if (c % 2 == 1) return fib(n + 3 - c).value - 1;
  if (c >= 4) return lyndon_count(n - (c - 2), 2);
  // c == 2, n >= 2: sum over the blocks X_j = 2 (+) W_j of W_n = 01 X_0 ... X_{n-2}.
  // Factors starting at X_j and ending past the X_{j-1}-length prefix number
  // sum_{i=j}^{n-2} f_{i+2} - f_{j+1}; of those, (n-2-j) f_{j+2} are bordered
  // and hence not Lyndon. The j = 0 term over-subtracts f_1 once; +1 repairs it.
  Int128 acc = 0;
  for (int j = 0; j <= n - 2; ++j) {
    Int128 span = 0;
    for (int i = j; i <= n - 2; ++i) span += fib(i + 2).value;
    acc += span - Int128(n - 2 - j) * fib(j + 2).value - fib(j + 1).value;
  }
  acc += 1;
  return to_int64_checked(acc, "lyndon_count");
}

bool is_zww_lyndon(int n, std::int64_t max_length) { return is_lyndon(zww_word(n, max_length)); }

std::int64_t letter_sum(int k) {
  if (k < 1 || k > kMaxWordIndex)
    throw std::out_of_range("letter_sum index " + std::to_string(k) + " outside [1, " +
                            std::to_string(kMaxWordIndex) + "]");
  Int128 numerator = Int128(2) * k * lucas(k + 1) - fib(k).value;
  if (numerator % 5 != 0)
    throw std::logic_error("letter_sum: 2k*L_{k+1} - f_k not divisible by 5 at k = " +
                           std::to_string(k));
  return to_int64_checked(numerator / 5, "letter_sum");
}

std::int64_t fib_word_distinct_squares(int n) {
  if (n < 3) throw std::invalid_argument("fib_word_distinct_squares requires n >= 3");
  return 2 * (fib(n).value - 1);
}

std::int64_t fib_word_total_squares(int n) {
  if (n < 3) throw std::invalid_argument("fib_word_total_squares requires n >= 3");
  Int128 fifths = Int128(4) * (n + 1) * fib(n + 2).value - Int128(2) * (n + 7) * fib(n + 1).value;
  if (fifths % 5 != 0)
    throw std::logic_error("fib_word_total_squares: fifths-term not divisible by 5 at n = " +
                           std::to_string(n));
  Int128 total = fifths / 5 - Int128(4) * fib(n).value + n + 2;
  return to_int64_checked(total, "fib_word_total_squares");
}

}  // namespace zww
