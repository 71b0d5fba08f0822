#pragma once

#include <cstdint>
#include <vector>

#include "zww/word_core.hpp"

namespace zww {

// Exact evaluators for the counting formulas on W_k and F_k. Each function
// here has a brute-force counterpart in factor_analysis; the two are held
// equal by the verification suite.

/// Lucas numbers: L_1 = 1, L_2 = 3, L_{i+2} = L_i + L_{i+1}.
/// Throws std::out_of_range unless 1 <= i <= 90.
std::int64_t lucas(int i);

/// C(x, y), exact; 0 when y > x, x < 0 or y < 0. 128-bit intermediates,
/// throws std::overflow_error instead of wrapping.
std::int64_t binomial_checked(std::int64_t x, std::int64_t y);

/// N(i, n): occurrences of letter n in W_i, as C(i - n + floor(n/2), floor(n/2)).
std::int64_t letter_count(int i, Letter n);

/// Total palindromic occurrences in W_i: 1, 2, 3, 6 for i = 0..3, then
/// f_{i+3} - 2 f_{i-2}.
std::int64_t total_palindromes(int i);

/// Distinct palindromic factors of W_i: i + 1 for i <= 2, floor(5i/2) - 2
/// for i >= 3.
std::int64_t distinct_palindromes(int i);

/// The complete distinct-palindrome set of W_i: the single letters 0..i, the
/// doubles (2j)(2j), and the triples 2j (+) 232 and 2j (+) 323 present by
/// index i.
struct PalindromeInventory {
  std::vector<Word> singles;
  std::vector<Word> doubles;
  std::vector<Word> triples;

  std::vector<Word> all() const;
  std::int64_t count() const;
};

PalindromeInventory palindrome_inventory(int i);

/// Distinct squares in W_m: floor((m-1)/2) * ceil((m-1)/2).
std::int64_t distinct_square_count(int m);

/// The squares W_{k+1} introduces over W_k: the doubled suffix blocks
/// S_{k,k-2i} for i = 1..floor(k/2), of periods f_k, f_{k-2}, ...
struct SquareInventory {
  std::vector<std::int64_t> new_periods;
  std::vector<Word> new_squares;
  std::int64_t distinct_count;  // cumulative distinct squares in W_{k+1}
};

SquareInventory new_squares(int k, std::int64_t max_length = kDefaultMaxWordLength);

/// Total square occurrences in W_i: f_i - 1, for i >= 1.
std::int64_t total_squares(int i);

/// Squares of W_i crossing the boundary |W_{i-1}|: 0 for i < 3, 1 for i >= 3
/// (the unique witness is (2 (+) W_{i-3})^2 starting at f_i + 1). i >= 2.
std::int64_t straddling_square_count(int i);

/// Distinct Lyndon factors of W_n beginning with letter c:
///   c = 0:           f_{n+2}
///   c odd:           f_{n+3-c} - 1 for n >= c, else 0
///   c = 2:           nested Fibonacci sum + 1 (see the implementation)
///   c even, c >= 4:  value at (n - (c - 2), 2) for n >= c, else 0.
std::int64_t lyndon_count(int n, Letter c);

/// W_n is a Lyndon word; evaluated, not assumed.
bool is_zww_lyndon(int n, std::int64_t max_length = kDefaultMaxWordLength);

/// Sum of the letters of W_k, evaluated exactly as (2k L_{k+1} - f_k) / 5.
/// The division must be exact; a remainder signals a transcription bug and
/// throws std::logic_error. 1 <= k <= 86.
std::int64_t letter_sum(int k);

/// Distinct squares in the binary Fibonacci word F_n: 2 (f_n - 1).
/// Matches the census for n >= 4 only; n = 3 is outside the contract
/// (formula 2, census 1).
std::int64_t fib_word_distinct_squares(int n);

/// Total square occurrences in F_n:
/// (4(n+1) f_{n+2} - 2(n+7) f_{n+1}) / 5 - 4 f_n + n + 2, with an exactness
/// check on the division. Valid for n >= 3.
std::int64_t fib_word_total_squares(int n);

}  // namespace zww
