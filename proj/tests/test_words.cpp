#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "twobridge/words.hpp"

using namespace twobridge;

namespace {
Word W(const char* s) { return Word::parse(s); }
} // namespace

TEST_SUITE("words") {
  TEST_CASE("parse and print") {
    CHECK(W("abAB").to_string() == "abAB");
    CHECK(W("1").empty());
    CHECK(W("").empty());
    CHECK(Word().to_string().empty());
    CHECK_THROWS_AS(W("abc"), std::invalid_argument);
    CHECK(inverse(W("abAb")) == W("BaBA"));
  }

  TEST_CASE("free reduction") {
    CHECK(free_reduce(W("abBa")) == W("aa"));
    CHECK(free_reduce(Word()).empty());
    CHECK(free_reduce(W("abAaBA")).empty());
    CHECK(is_reduced(W("abab")));
    CHECK_FALSE(is_reduced(W("abBa")));
    CHECK(is_cyclically_reduced(W("abAB")));
    CHECK_FALSE(is_cyclically_reduced(W("abA")));
    Word c;
    CHECK(cyclic_reduce(W("abaBA"), &c) == W("a"));
    CHECK(c == W("ab"));
    CHECK(c * W("a") * inverse(c) == W("abaBA"));
  }

  TEST_CASE("free reduction agrees with a stack reduction") {
    std::mt19937 rng(7);
    for (int i = 0; i < 500; ++i) {
      const Word w = oracle::random_word(rng, 1 + i % 30);
      const Word v = oracle::random_word(rng, 1 + i % 17);
      CHECK(free_reduce(w).to_string() == oracle::reduce_text(w.to_string()));
      CHECK((w * v) * inverse(v) == free_reduce(w));
      CHECK((w * inverse(w)).empty());
    }
  }

  TEST_CASE("upper words of known slopes") {
    CHECK(upper_word(Fraction(2, 5)) == W("abaBAbabAB"));
    CHECK(upper_word(Fraction(1, 5)) == W("ababaBABAB"));
    CHECK(upper_word(Fraction(2, 7)) == W("ababABAbabaBAB"));
    CHECK(s_sequence(upper_word(Fraction(2, 7))) == Seq{4, 3, 4, 3});
    CHECK(upper_word(Fraction(1)).size() == 2);
    CHECK(upper_word(Fraction(0)).size() == 2);
    CHECK_THROWS_AS(upper_word(Fraction(-1, 3)), std::invalid_argument);
  }

  TEST_CASE("upper words follow the sign formula") {
    for (const Fraction& s : oracle::proper_slopes(2, 40)) {
      const auto q = static_cast<std::int64_t>(s.num()), p = static_cast<std::int64_t>(s.den());
      const Word u = upper_word(s);
      CHECK(u.to_string() == oracle::upper_word_text(q, p));
      CHECK(u.size() == static_cast<std::size_t>(2 * p));
      CHECK(is_cyclically_alternating(u));
      CHECK(is_cyclically_reduced(u));
    }
  }

  TEST_CASE("S-sequences") {
    CHECK(s_sequence(upper_word(Fraction(2, 5))) == Seq{3, 2, 3, 2});
    CHECK(s_sequence(W("aba")) == Seq{3});
    CHECK(s_sequence(upper_word(Fraction(5, 17))) == Seq{4, 3, 4, 3, 3, 4, 3, 4, 3, 3});
    CHECK(cyclic_s_sequence(upper_word(Fraction(3, 8))) == CyclicSeq({3, 3, 2, 3, 3, 2}));
    CHECK(cyclic_s_sequence(W("abab")) == CyclicSeq({4}));
    CHECK(cyclic_s_sequence(upper_word(Fraction(3, 10))) == CyclicSeq({4, 3, 3, 4, 3, 3}));
    std::mt19937 rng(11);
    for (int i = 0; i < 300; ++i) {
      const Word w = free_reduce(oracle::random_word(rng, 1 + i % 25));
      if (!w.empty()) {
        CHECK(s_sequence(w) == oracle::runs(w.to_string()));
      }
    }
  }

  TEST_CASE("cyclic alternation") {
    CHECK(is_cyclically_alternating(upper_word(Fraction(2, 5))));
    CHECK_FALSE(is_cyclically_alternating(W("aab")));
    CHECK(is_cyclically_alternating(W("aB")));
    CHECK_FALSE(is_cyclically_alternating(W("abab" "a")));
  }

  TEST_CASE("cyclic words") {
    const Word u = upper_word(Fraction(3, 8));
    for (std::size_t i = 0; i < u.size(); ++i) {
      CHECK(CyclicWord(u.rotation(i)) == CyclicWord(u));
      CHECK(is_cyclic_subword(u.cyclic_sub(i, 7), u));
    }
    CHECK(CyclicWord(u).inverse() == CyclicWord(inverse(u)));
    CHECK_THROWS_AS(CyclicWord(W("abA")), std::invalid_argument);
    CHECK(CyclicWord(W("bab")).to_string() == "(abb)");
  }
}
