#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "zww/lyndon_array.hpp"
#include "zww/word_core.hpp"

namespace zww {

// Definition-level factor censuses. Everything here scans the word directly
// from the definitions, in O(n^2)-ish time with early-exit comparisons; these
// are the oracles the closed-form evaluators are verified against, so they
// stay deliberately simple.

/// Occurrence of a factor: 1-based start position and length.
struct FactorOccurrence {
  std::int64_t start;
  std::int64_t length;
};

/// Occurrence of a square: 1-based start position and half-length (period).
struct SquareOccurrence {
  std::int64_t start;
  std::int64_t period;
};

/// Maximal periodic factor with length >= 2 * (minimal) period, extendable in
/// neither direction. 1-based start.
struct RunOccurrence {
  std::int64_t start;
  std::int64_t length;
  std::int64_t period;
};

/// Distinct/total counts plus optional occurrence witnesses.
/// Witness rows are [start, length] for palindromes and [start, period] for
/// squares, sorted ascending; both use 1-based starts.
struct CensusReport {
  std::int64_t distinct = 0;
  std::int64_t total = 0;
  bool witnesses_collected = false;
  std::vector<std::array<std::int64_t, 2>> witnesses;
};

/// |w|_n: occurrences of the letter n.
std::int64_t count_letter(const Word& w, Letter n);

/// All palindromic occurrences (single letters included) and the distinct
/// palindromic factors among them.
CensusReport palindrome_census(const Word& w, bool with_witnesses = false);

/// All square occurrences (start, period pairs with equal halves, no
/// primitivity requirement on the half) and the distinct square factors.
CensusReport square_census(const Word& w, bool with_witnesses = false);

/// Squares whose extent covers both positions `boundary` and `boundary + 1`
/// (1-based). Requires 1 <= boundary < |w|.
CensusReport straddling_square_census(const Word& w, std::int64_t boundary,
                                      bool with_witnesses = false);

/// Every run, reported once at the leftmost start of the maximal extension of
/// its minimal-period periodicity; sorted by (start, period).
std::vector<RunOccurrence> run_census(const Word& w);

/// Lyndon test: strictly smaller than every proper suffix, plus an explicit
/// primitivity rejection. Throws std::invalid_argument on the empty word.
bool is_lyndon(const Word& w);

/// Lyndon array by independent per-position scan: ell[i]/lambda[i] describe
/// the longest Lyndon factor starting at each position.
LyndonArray lyndon_array_bruteforce(const Word& w);

/// Number of DISTINCT Lyndon factors of w beginning with each letter.
/// Letters that head no Lyndon factor are absent from the map.
std::map<Letter, std::int64_t> lyndon_factor_census(const Word& w);

/// Number of (start, length) occurrence pairs that are Lyndon factors.
std::int64_t lyndon_occurrence_count(const Word& w);

}  // namespace zww
