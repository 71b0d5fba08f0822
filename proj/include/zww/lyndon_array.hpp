#pragma once

#include <cstdint>
#include <vector>

#include "zww/word_core.hpp"

namespace zww {

/// Per-position longest-Lyndon-factor data for a host word of length n.
/// ell[i] is the 1-based end position of the longest Lyndon factor starting
/// at 1-based position i+1; lambda[i] = ell[i] - i is its length.
struct LyndonArray {
  std::vector<std::int64_t> ell;
  std::vector<std::int64_t> lambda;
};

/// Fills lambda from ell via lambda[i] = ell[i] - i + 1 (1-based positions).
LyndonArray ell_to_lambda(LyndonArray a);

struct AlgorithmLaResult {
  Word word;        // W_k; empty when materialize_word is false
  LyndonArray arr;  // its Lyndon array
  std::int64_t inner_iterations;
};

/// Builds W_k together with its Lyndon array in one linear pass.
///
/// Each growth step W_j = W_{j-1} . 2 (+) W_{j-2} copies the array entries of
/// the source prefix positions, shifted; a block-leading 2 always starts a
/// Lyndon factor that reaches the end of W_k, and a source entry that reached
/// the end of W_{j-1} maps to the end of W_j. Beyond the two output buffers
/// the pass keeps a constant number of integer registers.
///
/// inner_iterations counts interior-loop executions; it equals f_{k+2} - 2
/// for k >= 2 and 0 for k <= 1.
AlgorithmLaResult algorithm_la(int k, bool materialize_word = true,
                               std::int64_t max_length = kDefaultMaxWordLength);

/// Same pass writing into caller-owned storage (resized to f_{k+2}; every slot
/// is overwritten). `word` may be null to skip the bracketed W assignments.
/// Suits repeated timing runs, which would otherwise measure the allocator.
/// Returns the inner iteration count.
std::int64_t algorithm_la_into(int k, std::vector<Letter>* word, std::vector<std::int64_t>& ell,
                               std::int64_t max_length = kDefaultMaxWordLength);

/// Structural self-test: true iff every position i >= 2 (1-based) of W_k that
/// carries letter 2 has ell[i] equal to |W_k|. Requires k >= 2.
bool letter_two_extends_to_end(int k, std::int64_t max_length = kDefaultMaxWordLength);

}  // namespace zww
