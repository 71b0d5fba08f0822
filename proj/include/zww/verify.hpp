#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace zww {

// Runs the counting identities against the brute-force censuses and reports
// one outcome per identity. A fault-injection hook perturbs a named formula's
// output so the harness itself can be shown to catch a wrong constant.

struct Counterexample {
  std::vector<std::int64_t> params;
  std::string expected;
  std::string actual;
};

struct VerificationOutcome {
  std::string id;
  std::int64_t range_lo = 0;
  std::int64_t range_hi = 0;
  bool pass = false;
  std::optional<Counterexample> counterexample;
  std::string note;
};

struct VerifyOptions {
  int max_letter_count_index = 18;
  int max_palindrome_index = 16;
  int max_square_index = 15;    // distinct/total/straddling; new-squares uses max-1
  int max_run_index = 14;
  int max_lyndon_count_index = 12;
  int max_lyndon_word_index = 14;
  int max_lyndon_array_index = 16;
  int max_letter_sum_index = 30;
  int max_fib_table_index = 12;

  // When non-empty, the named formula's value is shifted by mutate_delta
  // before comparison.
  std::string mutate_formula;
  std::int64_t mutate_delta = -1;
};

/// Selector groups accepted by run_verification (and the CLI).
const std::vector<std::string>& verification_selectors();

/// Formula names accepted by VerifyOptions::mutate_formula.
const std::vector<std::string>& mutable_formulas();

/// Runs the checks selected by `selector` ("all" or one group) in a fixed
/// order. Throws std::invalid_argument for unknown selectors or formulas.
std::vector<VerificationOutcome> run_verification(const std::string& selector,
                                                  const VerifyOptions& opt = {});

/// Applies per-group range overrides: max_k < 0 leaves defaults untouched.
VerifyOptions with_max_index(const std::string& selector, int max_k, VerifyOptions opt = {});

std::string outcome_table(const std::vector<VerificationOutcome>& outcomes);
std::string outcomes_to_json_text(const std::vector<VerificationOutcome>& outcomes);

}  // namespace zww
