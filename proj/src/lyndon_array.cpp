#include "zww/lyndon_array.hpp"

#include <stdexcept>
#include <string>

namespace zww {

LyndonArray ell_to_lambda(LyndonArray a) {
  a.lambda.resize(a.ell.size());
  for (std::size_t i = 0; i < a.ell.size(); ++i)
    a.lambda[i] = a.ell[i] - static_cast<std::int64_t>(i + 1) + 1;
  return a;
}

std::int64_t algorithm_la_into(int k, std::vector<Letter>* word, std::vector<std::int64_t>& ell,
                               std::int64_t max_length) {
  if (k < 0) throw std::invalid_argument("algorithm_la: negative index");
  if (k > kMaxWordIndex)
    throw std::out_of_range("algorithm_la: index above " + std::to_string(kMaxWordIndex));
  const std::int64_t wk = fib(k + 2).value;
  if (wk > max_length)
    throw std::length_error("algorithm_la: W_" + std::to_string(k) + " exceeds the length cap");

  ell.resize(static_cast<std::size_t>(wk));
  if (word) word->resize(static_cast<std::size_t>(wk));
  if (k == 0) {
    // the two-position initialization below presumes k >= 1
    if (word) (*word)[0] = 0;
    ell[0] = 1;
    return 0;
  }

  if (word) {
    (*word)[0] = 0;
    (*word)[1] = 1;
  }
  ell[0] = wk;
  ell[1] = wk;

  std::int64_t iterations = 0;
  std::int64_t len_prev = 2;       // |W_{j-1}|
  std::int64_t len_prev_prev = 1;  // |W_{j-2}|
  for (int j = 2; j <= k; ++j) {
    const std::int64_t len = len_prev + len_prev_prev;    // |W_j|
    for (std::int64_t i = len_prev + 1; i <= len; ++i) {  // 1-based position
      ++iterations;
      const std::size_t dst = static_cast<std::size_t>(i - 1);
      const std::size_t src = static_cast<std::size_t>(i - 1 - len_prev);
      if (word) (*word)[dst] = (*word)[src] + 2;
      if (i == len_prev + 1)
        ell[dst] = wk;  // block-leading 2: Lyndon to the very end
      else if (ell[src] == wk)
        ell[dst] = len;  // source reached the end of its word; stop at |W_j|
      else
        ell[dst] = ell[src] + len_prev;
    }
    len_prev_prev = len_prev;
    len_prev = len;
  }
  return iterations;
}

AlgorithmLaResult algorithm_la(int k, bool materialize_word, std::int64_t max_length) {
  AlgorithmLaResult res;
  std::vector<Letter> word;
  std::vector<std::int64_t> ell;
  res.inner_iterations =
      algorithm_la_into(k, materialize_word ? &word : nullptr, ell, max_length);
  if (materialize_word) res.word = word_unchecked(std::move(word));
  res.arr = ell_to_lambda(LyndonArray{std::move(ell), {}});
  return res;
}

bool letter_two_extends_to_end(int k, std::int64_t max_length) {
  if (k < 2) throw std::invalid_argument("letter_two_extends_to_end requires k >= 2");
  AlgorithmLaResult res = algorithm_la(k, /*materialize_word=*/true, max_length);
  const std::int64_t n = res.word.size();
  for (std::int64_t i = 2; i <= n; ++i) {  // 1-based
    if (res.word[i - 1] == 2 && res.arr.ell[static_cast<std::size_t>(i - 1)] != n) return false;
  }
  return true;
}

}  // namespace zww
