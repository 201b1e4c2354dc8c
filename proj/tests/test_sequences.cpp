#include <doctest.h>

#include "oracles.hpp"
#include "twobridge/sequences.hpp"
#include "twobridge/words.hpp"

using namespace twobridge;

TEST_SUITE("sequences") {
  TEST_CASE("S(r) for the closed-form families") {
    for (std::int64_t m = 2; m <= 12; ++m) {
      CHECK(s_sequence_of_slope(Fraction(1, m)) == Seq{m, m});
    }
    for (std::int64_t n = 2; n <= 10; ++n) {
      Seq half{3};
      half.insert(half.end(), n - 1, 2);
      Seq full = half;
      full.insert(full.end(), half.begin(), half.end());
      CHECK(s_sequence_of_slope(Fraction(n, 2 * n + 1)) == full);
      CHECK(s_sequence_recursive(Fraction(n, 2 * n + 1)) == full);
      CHECK(t_sequence(Fraction(n, 2 * n + 1)) == Seq{n - 1, n - 1});
      CHECK(t_sequence(Fraction(n + 1, 3 * n + 2)) == Seq{n, n});
      const Decomposition d = decompose(Fraction(n + 1, 3 * n + 2));
      CHECK(d.s1 == Seq(n, 3));
      CHECK(d.s2 == Seq{2});
    }
    CHECK(s_sequence_of_slope(Fraction(5, 17)) == Seq{4, 3, 4, 3, 3, 4, 3, 4, 3, 3});
    CHECK(s_sequence_recursive(Fraction(5, 17)) == Seq{4, 3, 4, 3, 3, 4, 3, 4, 3, 3});
  }

  TEST_CASE("decompositions") {
    const Decomposition half = decompose(Fraction(1, 2));
    CHECK(half.s1.empty());
    CHECK(half.s2 == Seq{2});
    const Decomposition d = decompose(Fraction(5, 17));
    CHECK(d.s1 == Seq{4, 3, 4});
    CHECK(d.s2 == Seq{3, 3});
    CHECK(decompose_recursive(Fraction(5, 17)) == d);
    CHECK(d.full() == s_sequence_of_slope(Fraction(5, 17)));
  }

  TEST_CASE("slope recovery") {
    CHECK(recover_slope(CyclicSeq({4, 3, 3, 4, 3, 3}), Decomposition{{3, 3}, {4}}) == Fraction(3, 10));
    for (std::int64_t m = 2; m <= 9; ++m) {
      CHECK(slope_of_cyclic_sequence(CyclicSeq({m, m})) == Fraction(1, m));
    }
    CHECK(slope_of_cyclic_sequence(CyclicSeq({3, 2, 3, 2, 2, 3, 2, 3, 2, 2})) == Fraction(5, 12));
    CHECK_FALSE(slope_of_cyclic_sequence(CyclicSeq({3, 2, 2})).has_value());
    CHECK_THROWS_AS(recover_slope(CyclicSeq({4, 3, 3}), Decomposition{{3, 3}, {4}}), std::invalid_argument);
  }

  TEST_CASE("cyclic containment") {
    CHECK(contains_subsequence(CyclicSeq({3, 2, 3, 2}), {2, 3}));
    CHECK_FALSE(contains_subsequence(CyclicSeq({3, 2, 3, 2}), {2, 2}));
    CHECK(contains_subsequence(CyclicSeq({4, 3, 3, 4, 3, 3}), {3, 3, 4}));
    CHECK(contains_block({1, 2, 3}, {2, 3}));
    CHECK_FALSE(contains_interior_block({1, 2, 3}, {2, 3}));
    CHECK(contains_interior_block({1, 2, 3, 1}, {2, 3}));
  }

  TEST_CASE("connection violations") {
    CHECK(connection_violation(Fraction(2, 5), Fraction(2, 5)));
    CHECK_FALSE(connection_violation(Fraction(3, 8), Fraction(1, 6)));
    CHECK(connection_violation(Fraction(2, 5), Fraction(3, 11)) == !contains(intervals(Fraction(2, 5)), Fraction(3, 11)));
  }

  TEST_CASE("routes agree and satisfy the structural invariants") {
    for (const Fraction& r : oracle::proper_slopes(2, 35)) {
      const auto q = static_cast<std::int64_t>(r.num()), p = static_cast<std::int64_t>(r.den());
      const Seq direct = oracle::runs(oracle::upper_word_text(q, p));
      CHECK(s_sequence_of_slope(r) == direct);
      CHECK(s_sequence_recursive(r) == direct);
      const CyclicSeq cs = cyclic_s_sequence_of_slope(r);
      CHECK(cs.is_symmetric());
      const Decomposition d = decompose(r);
      CHECK(d == decompose_recursive(r));
      CHECK(d.full() == direct);
      CHECK(recover_slope(cs, d) == r);
      CHECK(slope_of_cyclic_sequence(cs) == r);
      CHECK(sum(d.s1) + sum(d.s2) == p);
      CHECK(static_cast<std::int64_t>(d.s1.size() + d.s2.size()) == q);
    }
  }

  TEST_CASE("T(r) is the S-sequence of the reduced slope") {
    for (const Fraction& r : oracle::proper_slopes(3, 30)) {
      const auto cf = to_continued_fraction(r);
      if (cf.size() < 2) {
        CHECK_THROWS(t_sequence(r));
        continue;
      }
      const Fraction tilde = to_fraction(reduce_step(cf));
      const Seq s = s_sequence_of_slope(tilde);
      CHECK(t_sequence(r) == (cf[1] == 1 ? s : reversed(s)));
    }
  }

  TEST_CASE("empty words have no S-sequence") { CHECK_THROWS(s_sequence(Word())); }
}
