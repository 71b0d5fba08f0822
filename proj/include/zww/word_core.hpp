#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace zww {

/// A letter of the infinite alphabet {0, 1, 2, ...}.
using Letter = std::int32_t;

/// Finite word over non-negative integer letters.
///
/// Immutable value type; the universal carrier for the words W_k, the
/// binary Fibonacci words F_k, and arbitrary factors of either.
/// Positions are 0-based in this API; all serialized output and all
/// occurrence records use 1-based positions.
class Word {
 public:
  Word() = default;
  /// Validates that every letter is >= 0 (throws std::invalid_argument).
  explicit Word(std::vector<Letter> letters);

  /// Fixture helper: "01223" -> word 0 1 2 2 3. Digits only.
  static Word from_digits(std::string_view digits);

  std::int64_t size() const noexcept { return static_cast<std::int64_t>(letters_.size()); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::int64_t pos0) const { return letters_[static_cast<std::size_t>(pos0)]; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  /// Copy of the factor of `len` letters starting at 0-based `pos0`.
  Word sub(std::int64_t pos0, std::int64_t len) const;

  /// Naive substring search.
  bool contains(const Word& needle) const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  struct Trusted {};
  Word(Trusted, std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::vector<Letter> letters_;

  friend Word word_unchecked(std::vector<Letter> letters);
};

/// Internal factory that skips the non-negativity scan; for callers that
/// construct letters arithmetically from already-validated input.
Word word_unchecked(std::vector<Letter> letters);

/// Fibonacci number in the convention f_1 = f_2 = 1, f_{i+2} = f_i + f_{i+1}.
/// f_0 is deliberately undefined; index 0 is an error, not 0.
struct FibNumber {
  int index;
  std::int64_t value;
};

inline constexpr int kMaxFibIndex = 92;  // f_93 exceeds 64 bits

/// Throws std::out_of_range unless 1 <= i <= 92.
FibNumber fib(int i);

/// Word-length cap defaults: zww_word(k) has length f_{k+2}, so the default
/// admits k <= 40; overrides may raise the cap, but k > 86 is always
/// rejected.
inline constexpr std::int64_t kDefaultMaxWordLength = 267'914'296;  // f_42
inline constexpr int kMaxWordIndex = 86;

/// n (+) w: adds n to every letter. Guards 32-bit letter overflow.
Word shift_add(Letter n, const Word& w);

/// The word morphism: even letter 2i -> (2i)(2i+1), odd letter 2i+1 -> (2i+2).
Word apply_phi(const Word& w);

/// W_k, built by the recurrence W_{i+1} = W_i . 2 (+) W_{i-1} with
/// W_0 = 0, W_1 = 01. Length f_{k+2}. Throws std::length_error when the
/// result would exceed max_length.
Word zww_word(int k, std::int64_t max_length = kDefaultMaxWordLength);

/// W_k as phi^k(0); slower cross-check path for zww_word().
Word zww_by_morphism(int k, std::int64_t max_length = kDefaultMaxWordLength);

/// Binary Fibonacci word F_k = psi^k(0) with psi(0) = 01, psi(1) = 0,
/// built by the recurrence F_{i+2} = F_{i+1} . F_i. Length f_{k+2}.
Word fibonacci_word(int k, std::int64_t max_length = kDefaultMaxWordLength);

/// Letterwise reduction mod 2; maps W_k onto F_k.
Word reduce_mod2(const Word& w);

enum class FactorizationKind { kPrefix, kParity, kSuffix };

/// An ordered block decomposition of some W_k; blocks concatenate back to
/// the word exactly.
struct Factorization {
  FactorizationKind kind;
  std::vector<Word> blocks;

  Word reassemble() const;
};

/// W_k = 01 . (2 (+) W_0) . (2 (+) W_1) ... (2 (+) W_{k-2}); requires k >= 2.
Factorization prefix_factorization(int k, std::int64_t max_length = kDefaultMaxWordLength);

/// W_{2m-1} = [2(m-j) (+) W_{2j-2} for j = m..1] . (2m-1), and
/// W_{2m}   = [2(m-j) (+) W_{2j-1} for j = m..1] . (2m); requires k >= 1.
Factorization parity_factorization(int k, std::int64_t max_length = kDefaultMaxWordLength);

/// S_{k,j}: the suffix of W_k of length f_{j+2}, for 0 <= j <= k.
/// When j and k have the same parity, S_{k,j} = (k-j) (+) W_j.
Word suffix_block(int k, int j, std::int64_t max_length = kDefaultMaxWordLength);

/// W_{k+1} = S_{k,k} . S_{k,k-2} . ... . S_{k,k-2*floor(k/2)} . (k+1).
Factorization suffix_factorization(int k, std::int64_t max_length = kDefaultMaxWordLength);

}  // namespace zww
