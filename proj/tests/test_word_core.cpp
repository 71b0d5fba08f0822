#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "zww/word_core.hpp"

using namespace zww;

namespace {

std::vector<Word> blocks_from_digits(std::initializer_list<const char*> parts) {
  std::vector<Word> out;
  for (const char* p : parts) out.push_back(Word::from_digits(p));
  return out;
}

}  // namespace

TEST_CASE("fib follows the f_1 = f_2 = 1 convention") {
  CHECK(fib(1).value == 1);
  CHECK(fib(2).value == 1);
  CHECK(fib(7).value == 13);
  CHECK(fib(42).value == 267914296);
  CHECK(fib(92).value == 7540113804746346429LL);
  CHECK(fib(10).index == 10);
  CHECK_THROWS_AS(fib(0), std::out_of_range);
  CHECK_THROWS_AS(fib(-3), std::out_of_range);
  CHECK_THROWS_AS(fib(93), std::out_of_range);
}

TEST_CASE("word construction validates letters") {
  CHECK_THROWS_AS(Word({0, -1, 2}), std::invalid_argument);
  Word w = Word::from_digits("01223");
  CHECK(w.size() == 5);
  CHECK(w[4] == 3);
  CHECK_THROWS_AS(Word::from_digits("01x"), std::invalid_argument);
  CHECK(Word{}.empty());
}

TEST_CASE("shift_add") {
  CHECK(shift_add(2, Word::from_digits("01223")) == Word::from_digits("23445"));
  Word w = Word::from_digits("0410");
  CHECK(shift_add(0, w) == w);
  CHECK(shift_add(4, Word::from_digits("0")) == Word::from_digits("4"));
  CHECK_THROWS_AS(shift_add(-1, w), std::invalid_argument);
  CHECK_THROWS_AS(shift_add(1, Word({2147483647})), std::overflow_error);
}

TEST_CASE("zww_word matches the small-index table") {
  CHECK(zww_word(0) == Word::from_digits("0"));
  CHECK(zww_word(1) == Word::from_digits("01"));
  CHECK(zww_word(2) == Word::from_digits("012"));
  CHECK(zww_word(3) == Word::from_digits("01223"));
  CHECK(zww_word(4) == Word::from_digits("01223234"));
  CHECK(zww_word(5) == Word::from_digits("0122323423445"));
}

TEST_CASE("zww_word length and letter structure") {
  for (int k = 0; k <= 14; ++k) {
    Word w = zww_word(k);
    CHECK(w.size() == fib(k + 2).value);
    CHECK(w[0] == 0);
    CHECK(w[w.size() - 1] == k);
    std::int64_t zeros = 0, tops = 0;
    Letter max_letter = 0;
    for (Letter a : w) {
      zeros += a == 0;
      tops += a == k;
      max_letter = std::max(max_letter, a);
    }
    CHECK(zeros == 1);
    CHECK(tops == 1);
    CHECK(max_letter == k);
  }
}

TEST_CASE("zww_word is a prefix of its successor and obeys the recurrence") {
  for (int k = 1; k <= 14; ++k) {
    Word cur = zww_word(k);
    Word next = zww_word(k + 1);
    CHECK(next.sub(0, cur.size()) == cur);
    Factorization glue{FactorizationKind::kPrefix, {cur, shift_add(2, zww_word(k - 1))}};
    CHECK(glue.reassemble() == next);
  }
}

TEST_CASE("zww_word caps") {
  CHECK_THROWS_AS(zww_word(-1), std::invalid_argument);
  CHECK_THROWS_AS(zww_word(41), std::length_error);             // default cap
  CHECK_THROWS_AS(zww_word(10, 50), std::length_error);         // custom cap
  CHECK_THROWS_AS(zww_word(87, 1LL << 62), std::out_of_range);  // hard ceiling
  CHECK_NOTHROW(zww_word(10, fib(12).value));
}

TEST_CASE("apply_phi") {
  CHECK(apply_phi(Word::from_digits("0")) == Word::from_digits("01"));
  CHECK(apply_phi(Word::from_digits("01")) == Word::from_digits("012"));
  CHECK(apply_phi(Word{}) == Word{});
  CHECK(apply_phi(Word::from_digits("1")) == Word::from_digits("2"));
  CHECK_THROWS_AS(apply_phi(Word({2147483646})), std::overflow_error);
}

TEST_CASE("morphism generator agrees with the recurrence generator") {
  CHECK(zww_by_morphism(0) == Word::from_digits("0"));
  CHECK(zww_by_morphism(3) == Word::from_digits("01223"));
  CHECK(zww_by_morphism(5) == Word::from_digits("0122323423445"));
  for (int k = 0; k <= 16; ++k) CHECK(zww_by_morphism(k) == zww_word(k));
}

TEST_CASE("fibonacci_word table and laws") {
  CHECK(fibonacci_word(0) == Word::from_digits("0"));
  CHECK(fibonacci_word(3) == Word::from_digits("01001"));
  CHECK(fibonacci_word(5) == Word::from_digits("0100101001001"));
  for (int k = 0; k <= 16; ++k) CHECK(fibonacci_word(k).size() == fib(k + 2).value);
  // F_{i+2} = F_{i+1} . F_i
  for (int k = 0; k <= 14; ++k) {
    Factorization glue{FactorizationKind::kPrefix, {fibonacci_word(k + 1), fibonacci_word(k)}};
    CHECK(glue.reassemble() == fibonacci_word(k + 2));
  }
}

TEST_CASE("fibonacci_word equals the psi-morphism fixed point") {
  // psi(0) = 01, psi(1) = 0, iterated from 0
  for (int k = 0; k <= 12; ++k) {
    std::vector<Letter> cur{0};
    for (int step = 0; step < k; ++step) {
      std::vector<Letter> next;
      for (Letter a : cur) {
        if (a == 0) {
          next.push_back(0);
          next.push_back(1);
        } else {
          next.push_back(0);
        }
      }
      cur = std::move(next);
    }
    CHECK(Word(cur) == fibonacci_word(k));
  }
}

TEST_CASE("reduce_mod2 projects the ZWW word onto the Fibonacci word") {
  CHECK(reduce_mod2(Word::from_digits("01223")) == Word::from_digits("01001"));
  CHECK(reduce_mod2(Word::from_digits("0")) == Word::from_digits("0"));
  CHECK(reduce_mod2(Word::from_digits("0122323423445")) == fibonacci_word(5));
  for (int k = 0; k <= 16; ++k) CHECK(reduce_mod2(zww_word(k)) == fibonacci_word(k));
}

TEST_CASE("prefix factorization") {
  CHECK(prefix_factorization(5).blocks == blocks_from_digits({"01", "2", "23", "234", "23445"}));
  CHECK(prefix_factorization(2).blocks == blocks_from_digits({"01", "2"}));
  CHECK(prefix_factorization(4).blocks == blocks_from_digits({"01", "2", "23", "234"}));
  CHECK(prefix_factorization(4).reassemble() == Word::from_digits("01223234"));
  CHECK_THROWS_AS(prefix_factorization(1), std::invalid_argument);
  for (int k = 2; k <= 14; ++k) CHECK(prefix_factorization(k).reassemble() == zww_word(k));
}

TEST_CASE("parity factorization") {
  CHECK(parity_factorization(5).blocks == blocks_from_digits({"01223234", "234", "4", "5"}));
  CHECK(parity_factorization(1).blocks == blocks_from_digits({"0", "1"}));
  CHECK(parity_factorization(4).blocks == blocks_from_digits({"01223", "23", "4"}));
  CHECK(parity_factorization(4).reassemble() == Word::from_digits("01223234"));
  CHECK_THROWS_AS(parity_factorization(0), std::invalid_argument);
  for (int k = 1; k <= 14; ++k) CHECK(parity_factorization(k).reassemble() == zww_word(k));
}

TEST_CASE("suffix blocks") {
  CHECK(suffix_block(5, 3) == Word::from_digits("23445"));
  CHECK(suffix_block(5, 3) == shift_add(2, zww_word(3)));
  CHECK(suffix_block(4, 0) == Word::from_digits("4"));
  for (int k = 0; k <= 10; ++k) CHECK(suffix_block(k, k) == zww_word(k));
  CHECK_THROWS_AS(suffix_block(4, 5), std::out_of_range);
  CHECK_THROWS_AS(suffix_block(4, -1), std::out_of_range);
  // S_{k,j+2} is a suffix of S_{k,j}; same-parity blocks are shifted words
  for (int k = 2; k <= 10; ++k) {
    for (int j = 0; j + 2 <= k; ++j) {
      Word big = suffix_block(k, j + 2);
      Word small = suffix_block(k, j);
      CHECK(big.sub(big.size() - small.size(), small.size()) == small);
    }
    for (int j = k % 2; j <= k; j += 2)
      CHECK(suffix_block(k, j) == shift_add(k - j, zww_word(j)));
  }
}

TEST_CASE("suffix factorization") {
  CHECK(suffix_factorization(4).blocks == blocks_from_digits({"01223234", "234", "4", "5"}));
  CHECK(suffix_factorization(0).blocks == blocks_from_digits({"0", "1"}));
  CHECK(suffix_factorization(3).blocks == blocks_from_digits({"01223", "23", "4"}));
  for (int k = 0; k <= 14; ++k) CHECK(suffix_factorization(k).reassemble() == zww_word(k + 1));
}

TEST_CASE("word sub and contains") {
  Word w = Word::from_digits("0122323423445");
  CHECK(w.sub(5, 3) == Word::from_digits("234"));
  CHECK_THROWS_AS(w.sub(10, 99), std::out_of_range);
  CHECK(w.contains(Word::from_digits("2323")));
  CHECK_FALSE(w.contains(Word::from_digits("55")));
  CHECK(w.contains(Word{}));
}
