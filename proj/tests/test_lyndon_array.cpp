#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "zww/factor_analysis.hpp"
#include "zww/lyndon_array.hpp"
#include "zww/word_core.hpp"

using namespace zww;

TEST_CASE("ell_to_lambda") {
  LyndonArray a = ell_to_lambda(LyndonArray{{2, 2}, {}});
  CHECK(a.lambda == std::vector<std::int64_t>{2, 1});
  LyndonArray ex1 = ell_to_lambda(LyndonArray{{2, 2, 7, 5, 5, 7, 7, 10, 10, 10}, {}});
  CHECK(ex1.lambda == std::vector<std::int64_t>{2, 1, 5, 2, 1, 2, 1, 3, 2, 1});
  LyndonArray w4 = ell_to_lambda(LyndonArray{{8, 8, 8, 8, 5, 8, 8, 8}, {}});
  CHECK(w4.lambda == std::vector<std::int64_t>{8, 7, 6, 5, 1, 3, 2, 1});
}

TEST_CASE("algorithm LA base cases") {
  AlgorithmLaResult k0 = algorithm_la(0);
  CHECK(k0.word == Word::from_digits("0"));
  CHECK(k0.arr.ell == std::vector<std::int64_t>{1});
  CHECK(k0.inner_iterations == 0);

  AlgorithmLaResult k1 = algorithm_la(1);
  CHECK(k1.word == Word::from_digits("01"));
  CHECK(k1.arr.ell == std::vector<std::int64_t>{2, 2});
  CHECK(k1.inner_iterations == 0);
}

TEST_CASE("algorithm LA fixtures") {
  CHECK(algorithm_la(4).arr.ell == std::vector<std::int64_t>{8, 8, 8, 8, 5, 8, 8, 8});
  CHECK(algorithm_la(5).arr.ell ==
        std::vector<std::int64_t>{13, 13, 13, 13, 5, 13, 8, 8, 13, 13, 13, 13, 13});
}

TEST_CASE("algorithm LA equals the per-position scan and rebuilds W_k") {
  for (int k = 0; k <= 13; ++k) {
    AlgorithmLaResult res = algorithm_la(k);
    Word w = zww_word(k);
    CHECK(res.word == w);
    LyndonArray brute = lyndon_array_bruteforce(w);
    CHECK(res.arr.ell == brute.ell);
    CHECK(res.arr.lambda == brute.lambda);
  }
}

TEST_CASE("algorithm LA interior-loop count is exactly f_{k+2} - 2") {
  for (int k = 2; k <= 20; ++k) CHECK(algorithm_la(k).inner_iterations == fib(k + 2).value - 2);
}

TEST_CASE("word materialization can be skipped") {
  AlgorithmLaResult thin = algorithm_la(9, /*materialize_word=*/false);
  CHECK(thin.word.empty());
  CHECK(thin.arr.ell == algorithm_la(9).arr.ell);
}

TEST_CASE("algorithm LA guards") {
  CHECK_THROWS_AS(algorithm_la(-1), std::invalid_argument);
  CHECK_THROWS_AS(algorithm_la(87), std::out_of_range);
  CHECK_THROWS_AS(algorithm_la(12, true, 10), std::length_error);
}

TEST_CASE("letter-2 positions carry full-extent Lyndon factors") {
  for (int k = 2; k <= 13; ++k) CHECK(letter_two_extends_to_end(k));
  CHECK_THROWS_AS(letter_two_extends_to_end(1), std::invalid_argument);
}

TEST_CASE("each appended block holds letter 2 exactly once, at its head") {
  for (int k = 2; k <= 13; ++k) {
    Word w = zww_word(k);
    std::int64_t block_start = fib(k + 1).value;  // 0-based start of 2 (+) W_{k-2}
    CHECK(w[block_start] == 2);
    for (std::int64_t i = block_start + 1; i < w.size(); ++i) CHECK(w[i] != 2);
  }
}

TEST_CASE("lambda is stable on positions that end strictly inside the previous word") {
  for (int k = 1; k <= 13; ++k) {
    LyndonArray prev = algorithm_la(k - 1).arr;
    LyndonArray cur = algorithm_la(k).arr;
    std::int64_t prev_len = fib(k + 1).value;
    for (std::int64_t i = 0; i < prev_len; ++i) {
      if (prev.ell[static_cast<std::size_t>(i)] < prev_len)  // end-reaching positions may grow
        CHECK(cur.lambda[static_cast<std::size_t>(i)] == prev.lambda[static_cast<std::size_t>(i)]);
    }
  }
}
