#include <doctest.h>

#include "oracles.hpp"
#include "twobridge/cancellation.hpp"
#include "twobridge/sequences.hpp"

using namespace twobridge;

TEST_SUITE("cancellation") {
  TEST_CASE("symmetrized set") {
    const SymmetrizedSet set(Fraction(2, 5));
    CHECK(set.size() == 20);
    CHECK(set.relator_length() == 10);
    for (std::size_t i = 0; i < set.size(); ++i) {
      CHECK(set.index_of(set[i]) == i);
      CHECK(set[set.inverse_index(i)] == inverse(set[i]));
      CHECK(set[set.rotation_index(i, 3)] == set[i].rotation(3));
    }
    const auto expected = oracle::symmetrized(upper_word(Fraction(2, 5)).to_string());
    CHECK(expected.size() == set.size());
  }

  TEST_CASE("pieces at 2/5") {
    const Fraction r(2, 5);
    const SymmetrizedSet set(r);
    const Word a = Word::parse("a");
    CHECK(is_piece_bruteforce(set, a).is_piece);
    CHECK(is_piece_bruteforce(set, a).witnesses.has_value());
    CHECK_FALSE(is_piece(set, upper_word(r)));
    const Word w = Word::parse("bABa");
    REQUIRE(is_cyclic_subword(w, upper_word(r)));
    CHECK(s_sequence(w) == Seq{1, 2, 1});
    CHECK_FALSE(is_piece(set, w));
    CHECK_FALSE(is_piece_criterion(r, w));
    CHECK(is_piece_criterion(r, a));
    CHECK_FALSE(is_piece_criterion(r, Word::parse("aba")));
    CHECK(is_piece_criterion(Fraction(3, 8), Word::parse("aba")));
    CHECK_THROWS_AS(is_piece_criterion(r, Word::parse("aa")), std::invalid_argument);
  }

  TEST_CASE("piece counts") {
    const Fraction r(2, 5);
    const SymmetrizedSet set(r);
    CHECK(min_piece_count(set, upper_word(r)) >= 4);
    CHECK(min_piece_count(set, Word::parse("ab")) == 1);
    CHECK(min_piece_count(set, Word()) == 0);
    // A subword with S-sequence (1,3,2,2).
    const Word u = upper_word(r);
    bool found = false;
    for (std::size_t i = 0; i < u.size(); ++i) {
      const Word w = u.cyclic_sub(i, 8);
      if (s_sequence(w) == Seq{1, 3, 2, 2}) {
        found = true;
        CHECK(min_piece_count(set, w) >= 3);
      }
    }
    CHECK(found);
  }

  TEST_CASE("piece tests agree with an independent brute force") {
    for (const Fraction& r : oracle::proper_slopes(2, 12)) {
      const SymmetrizedSet set(r);
      const std::string u = upper_word(r).to_string();
      const auto members = oracle::symmetrized(u);
      CHECK(members.size() == set.size());
      for (const std::string& base : {u, oracle::invert_text(u)}) {
        for (std::size_t i = 0; i < base.size(); ++i) {
          const std::string doubled = base + base;
          for (std::size_t len = 1; len < base.size(); ++len) {
            const std::string w = doubled.substr(i, len);
            const bool expected = oracle::piece(members, w);
            CHECK(is_piece(set, Word::parse(w)) == expected);
            if (expected) {
              // Pieces are closed under subwords and inversion.
              CHECK(oracle::piece(members, oracle::invert_text(w)));
              CHECK(oracle::piece(members, w.substr(1)));
              CHECK(oracle::piece(members, w.substr(0, len - 1 == 0 ? 1 : len - 1)));
            }
          }
        }
      }
    }
  }

  TEST_CASE("maximal products of pieces") {
    const SymmetrizedSet set(Fraction(2, 5));
    const auto pieces = maximal_pieces(set, 1);
    CHECK(pieces.size() == set.relator_length());
    for (const auto& p : pieces) {
      CHECK(is_piece(set, p.word));
      CHECK(p.word.size() == p.length);
    }
  }

  TEST_CASE("C(4) and T(4)") {
    for (const Fraction& r : {Fraction(2, 5), Fraction(5, 17), Fraction(1, 2), Fraction(3, 8), Fraction(7, 19)}) {
      const SmallCancellationReport rep = verify_c4_t4(r);
      CHECK(rep.c4);
      CHECK(rep.t4);
      CHECK(rep.violations.empty());
    }
  }
}
