#include "zww/word_core.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>
#include <string>

namespace zww {

namespace {

constexpr Letter kMaxLetter = std::numeric_limits<Letter>::max();

constexpr auto kFibTable = [] {
  std::array<std::int64_t, kMaxFibIndex + 1> t{};
  t[1] = 1;
  t[2] = 1;
  for (int i = 3; i <= kMaxFibIndex; ++i) t[i] = t[i - 1] + t[i - 2];
  return t;
}();

void check_word_index(int k) {
  if (k < 0) throw std::invalid_argument("word index must be non-negative, got " + std::to_string(k));
  if (k > kMaxWordIndex)
    throw std::out_of_range("word index " + std::to_string(k) + " exceeds the hard ceiling " +
                            std::to_string(kMaxWordIndex));
}

std::int64_t checked_target_length(int k, std::int64_t max_length) {
  check_word_index(k);
  std::int64_t len = fib(k + 2).value;
  if (len > max_length)
    throw std::length_error("W_" + std::to_string(k) + " has length " + std::to_string(len) +
                            ", above the configured cap " + std::to_string(max_length));
  return len;
}

}  // namespace

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (Letter a : letters_)
    if (a < 0) throw std::invalid_argument("negative letter " + std::to_string(a));
}

Word Word::from_digits(std::string_view digits) {
  std::vector<Letter> letters;
  letters.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("from_digits: non-digit character");
    letters.push_back(c - '0');
  }
  return Word(Trusted{}, std::move(letters));
}

Word Word::sub(std::int64_t pos0, std::int64_t len) const {
  if (pos0 < 0 || len < 0 || pos0 + len > size()) throw std::out_of_range("factor out of bounds");
  auto first = letters_.begin() + pos0;
  return Word(Trusted{}, std::vector<Letter>(first, first + len));
}

bool Word::contains(const Word& needle) const {
  return std::search(letters_.begin(), letters_.end(), needle.letters_.begin(), needle.letters_.end()) !=
         letters_.end();
}

Word word_unchecked(std::vector<Letter> letters) { return Word(Word::Trusted{}, std::move(letters)); }

FibNumber fib(int i) {
  if (i < 1 || i > kMaxFibIndex)
    throw std::out_of_range("fib index " + std::to_string(i) + " outside [1, " +
                            std::to_string(kMaxFibIndex) + "]");
  return FibNumber{i, kFibTable[i]};
}

Word shift_add(Letter n, const Word& w) {
  if (n < 0) throw std::invalid_argument("shift_add: negative shift");
  std::vector<Letter> out;
  out.reserve(w.letters().size());
  for (Letter a : w) {
    if (a > kMaxLetter - n) throw std::overflow_error("shift_add: letter overflow");
    out.push_back(a + n);
  }
  return word_unchecked(std::move(out));
}

Word apply_phi(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.letters().size() * 2);
  for (Letter a : w) {
    if (a >= kMaxLetter - 1) throw std::overflow_error("apply_phi: letter overflow");
    if (a % 2 == 0) {
      out.push_back(a);
      out.push_back(a + 1);
    } else {
      out.push_back(a + 1);
    }
  }
  return word_unchecked(std::move(out));
}

Word zww_word(int k, std::int64_t max_length) {
  std::int64_t target = checked_target_length(k, max_length);
  std::vector<Letter> buf;
  buf.reserve(static_cast<std::size_t>(target));
  buf.push_back(0);
  if (k >= 1) buf.push_back(1);
  // W_{i-1} is a prefix of W_i, so each step appends a shifted copy of the
  // buffer's own leading prev_len letters.
  std::int64_t prev_len = 1;
  for (int i = 1; i < k; ++i) {
    std::int64_t cur_len = static_cast<std::int64_t>(buf.size());
    for (std::int64_t p = 0; p < prev_len; ++p) buf.push_back(buf[static_cast<std::size_t>(p)] + 2);
    prev_len = cur_len;
  }
  return word_unchecked(std::move(buf));
}

Word zww_by_morphism(int k, std::int64_t max_length) {
  checked_target_length(k, max_length);
  Word w = word_unchecked({0});
  for (int i = 0; i < k; ++i) w = apply_phi(w);
  return w;
}

Word fibonacci_word(int k, std::int64_t max_length) {
  std::int64_t target = checked_target_length(k, max_length);
  std::vector<Letter> buf;
  buf.reserve(static_cast<std::size_t>(target));
  buf.push_back(0);
  if (k >= 1) buf.push_back(1);
  std::int64_t prev_len = 1;
  for (int i = 1; i < k; ++i) {
    std::int64_t cur_len = static_cast<std::int64_t>(buf.size());
    for (std::int64_t p = 0; p < prev_len; ++p) buf.push_back(buf[static_cast<std::size_t>(p)]);
    prev_len = cur_len;
  }
  return word_unchecked(std::move(buf));
}

Word reduce_mod2(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.letters().size());
  for (Letter a : w) out.push_back(a % 2);
  return word_unchecked(std::move(out));
}

Word Factorization::reassemble() const {
  std::vector<Letter> out;
  std::int64_t total = 0;
  for (const Word& b : blocks) total += b.size();
  out.reserve(static_cast<std::size_t>(total));
  for (const Word& b : blocks) out.insert(out.end(), b.begin(), b.end());
  return word_unchecked(std::move(out));
}

Factorization prefix_factorization(int k, std::int64_t max_length) {
  if (k < 2) throw std::invalid_argument("prefix_factorization requires k >= 2");
  checked_target_length(k, max_length);
  Factorization f{FactorizationKind::kPrefix, {}};
  f.blocks.push_back(Word::from_digits("01"));
  for (int i = 0; i <= k - 2; ++i) f.blocks.push_back(shift_add(2, zww_word(i, max_length)));
  return f;
}

Factorization parity_factorization(int k, std::int64_t max_length) {
  if (k < 1) throw std::invalid_argument("parity_factorization requires k >= 1");
  checked_target_length(k, max_length);
  Factorization f{FactorizationKind::kParity, {}};
  int m = (k + 1) / 2;
  for (int j = m; j >= 1; --j) {
    int inner = (k % 2 == 1) ? 2 * j - 2 : 2 * j - 1;
    f.blocks.push_back(shift_add(2 * (m - j), zww_word(inner, max_length)));
  }
  f.blocks.push_back(word_unchecked({k}));
  return f;
}

Word suffix_block(int k, int j, std::int64_t max_length) {
  if (j < 0 || j > k) throw std::out_of_range("suffix_block: need 0 <= j <= k");
  std::int64_t host_len = checked_target_length(k, max_length);
  std::int64_t block_len = fib(j + 2).value;
  return zww_word(k, max_length).sub(host_len - block_len, block_len);
}

Factorization suffix_factorization(int k, std::int64_t max_length) {
  if (k < 0) throw std::invalid_argument("suffix_factorization requires k >= 0");
  checked_target_length(k + 1, max_length);  // the result factorizes W_{k+1}
  Word host = zww_word(k, max_length);
  Factorization f{FactorizationKind::kSuffix, {}};
  for (int j = k; j >= 0; j -= 2) {
    std::int64_t block_len = fib(j + 2).value;
    f.blocks.push_back(host.sub(host.size() - block_len, block_len));
  }
  f.blocks.push_back(word_unchecked({k + 1}));
  return f;
}

}  // namespace zww
