#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "twobridge/finite_field.hpp"
#include "twobridge/oracle.hpp"
#include "twobridge/polynomial.hpp"

using namespace twobridge;

namespace {

Word W(const char* s) { return Word::parse(s); }

// rho(w) over Z[y] with rho(a) = [[1,1],[0,1]], rho(b) = [[1,0],[y,1]].
std::array<IntPoly, 4> symbolic(const Word& w) {
  const IntPoly one = IntPoly::constant(1), zero, y = IntPoly::y();
  std::array<IntPoly, 4> m{one, zero, zero, one};
  for (Letter x : w.letters()) {
    std::array<IntPoly, 4> g;
    switch (x) {
    case kLetterA: g = {one, one, zero, one}; break;
    case kLetterAInv: g = {one, IntPoly::constant(-1), zero, one}; break;
    case kLetterB: g = {one, zero, y, one}; break;
    default: g = {one, zero, zero - y, one}; break;
    }
    m = {m[0] * g[0] + m[1] * g[2], m[0] * g[1] + m[1] * g[3], m[2] * g[0] + m[3] * g[2], m[2] * g[1] + m[3] * g[3]};
  }
  return m;
}

} // namespace

TEST_SUITE("oracle") {
  TEST_CASE("integer polynomials") {
    const IntPoly f({2, 0, 2});
    CHECK(f.content() == 2);
    CHECK(f.primitive_part() == IntPoly({1, 0, 1}));
    CHECK(f.to_string() == "2*y^2+2");
    const IntPoly g = IntPoly({-1, 1}) * IntPoly({1, 1});
    CHECK(gcd(g, IntPoly({-1, 1}) * IntPoly({2, 1})) == IntPoly({-1, 1}));
    CHECK(exact_divide(g, IntPoly({1, 1})) == IntPoly({-1, 1}));
    CHECK(squarefree_part(IntPoly({1, 1}) * IntPoly({1, 1}) * IntPoly({0, 1})) == IntPoly({0, 1, 1}));
    CHECK(IntPoly({0, 0, 3}).valuation() == 2);
    CHECK(g.evaluate(5) == 24);
  }

  TEST_CASE("polynomials mod p") {
    const std::uint64_t p = 101;
    const ModPoly f(p, {1, 0, 1});
    CHECK(f.evaluate(10) == 0);
    const auto factors = equal_degree_factors(ModPoly(p, {p - 1, 0, 1}), 1);
    CHECK(factors.size() == 2);
    CHECK(mod_inverse(7, p) * 7 % p == 1);
    CHECK(sqrt_mod(4, p) * sqrt_mod(4, p) % p == 4);
    CHECK(primes_up_to(20) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19});
  }

  TEST_CASE("Riley polynomials") {
    const IntPoly f = riley_polynomial(Fraction(2, 5));
    CHECK(f.degree() == 2);
    CHECK(f.primitive_part() == f);
    const IntPoly h = riley_polynomial(Fraction(1, 2));
    bool integer_root = false;
    for (int y = -10; y <= 10; ++y) {
      integer_root = integer_root || h.evaluate(y) == 0;
    }
    CHECK(integer_root);
    for (const Fraction& r : oracle::proper_slopes(2, 9)) {
      const IntPoly poly = riley_polynomial(r);
      REQUIRE_FALSE(poly.is_zero());
      const auto m = symbolic(upper_word(r));
      for (const IntPoly& entry : {m[0] - IntPoly::constant(1), m[1], m[2], m[3] - IntPoly::constant(1)}) {
        CHECK(gcd(entry, poly) == poly.primitive_part());
      }
    }
  }

  TEST_CASE("finite field representations") {
    std::mt19937 rng(1);
    for (const Fraction& r : {Fraction(2, 5), Fraction(3, 7), Fraction(3, 8), Fraction(5, 17)}) {
      const auto reps = finite_reps(r, 101);
      for (const FiniteFieldRep& rep : reps) {
        CHECK(rep.is_identity(rep.evaluate(upper_word(r))));
        CHECK(rep.trace(W("a")) == rep.field().from_int(2));
        CHECK(rep.trace(W("b")) == rep.field().from_int(2));
        CHECK(rep.det(rep.evaluate(W("abAAB"))) == rep.field().from_int(1));
        for (int i = 0; i < 10; ++i) {
          const Word x = oracle::random_word(rng, 9), y = oracle::random_word(rng, 7);
          CHECK(rep.evaluate(concat(x, y)) == rep.multiply(rep.evaluate(x), rep.evaluate(y)));
          CHECK(rep.trace(x) == rep.trace(inverse(x)));
        }
      }
    }
    CHECK(finite_reps(Fraction(2, 5), 3).empty());
  }

  TEST_CASE("field arithmetic") {
    const Field f(13, 2);
    const Field::Elem x{3, 5};
    CHECK(f.mul(x, f.inv(x)) == f.from_int(1));
    const Field::Elem s = f.sqrt_base(f.non_residue());
    CHECK(f.mul(s, s) == f.from_int(static_cast<std::int64_t>(f.non_residue())));
    CHECK(f.format(Field::Elem{2, 0}) == "2");
  }

  TEST_CASE("non-conjugacy evidence") {
    const Fraction r(2, 5);
    const auto e = nonconjugacy_evidence(r, upper_word(Fraction(1, 5)), upper_word(Fraction(2, 7)), 200);
    REQUIRE(e.has_value());
    CHECK(e->trace_u != e->trace_v);
    CHECK_FALSE(nonconjugacy_evidence(r, upper_word(Fraction(1, 5)), upper_word(Fraction(1, 5)), 200));
    CHECK_FALSE(nonconjugacy_evidence(Fraction(3, 8), upper_word(Fraction(1, 6)), upper_word(Fraction(3, 10)), 500));
    CHECK_FALSE(nonconjugacy_evidence(Fraction(3, 8), upper_word(Fraction(3, 4)), upper_word(Fraction(5, 12)), 500));
  }

  TEST_CASE("certificates replay") {
    const Fraction r(2, 5);
    RewriteCertificate empty{r, W("abab"), {}, W("abab")};
    CHECK(check_certificate(empty));
    RewriteCertificate one{r, Word(), {{0, Word(), 0, StepDirection::Insert}}, upper_word(r)};
    CHECK(check_certificate(one));
    one.end = W("a");
    std::string why;
    CHECK_FALSE(check_certificate(one, &why));
    CHECK_FALSE(why.empty());
    RewriteCertificate bad{r, Word(), {{5, Word(), 0, StepDirection::Insert}}, upper_word(r)};
    CHECK_FALSE(check_certificate(bad));
    RewriteCertificate out_of_range{r, Word(), {{0, Word(), 999, StepDirection::Insert}}, Word()};
    CHECK_FALSE(check_certificate(out_of_range));
  }

  TEST_CASE("word problem search") {
    const Fraction r(2, 5);
    const auto c = word_problem_search(r, upper_word(r), 4);
    REQUIRE(c.has_value());
    CHECK(c->steps.size() == 1);
    CHECK(check_certificate(*c));
    const Word u35 = upper_word(Fraction(3, 5));
    const auto d = word_problem_search(r, W("b") * u35 * W("B") * inverse(u35), SearchOptions{});
    REQUIRE(d.has_value());
    CHECK(check_certificate(*d));
    const Word u47 = upper_word(Fraction(4, 7));
    const auto e = word_problem_search(Fraction(3, 7), inverse(u47) * W("B") * u47 * W("b"), SearchOptions{});
    REQUIRE(e.has_value());
    CHECK(check_certificate(*e));
    CHECK_FALSE(word_problem_search(r, W("a"), 6).has_value());
  }

  TEST_CASE("identities of the small cases") {
    const Word ab = W("ab");
    const auto cube = prove_equal(Fraction(2, 5), inverse(ab) * upper_word(Fraction(2, 7)) * ab, power(W("ba"), 3));
    REQUIRE(cube.has_value());
    CHECK(check_certificate(*cube));
    const Word w = W("abbaBAB");
    const auto square = prove_equal(Fraction(3, 7), w * w, upper_word(Fraction(2, 7)));
    REQUIRE(square.has_value());
    CHECK(check_certificate(*square));
    const Word v = W("BAB");
    const auto commute = prove_commute(Fraction(2, 5), upper_word(Fraction(1, 5)), inverse(v) * W("b") * v);
    REQUIRE(commute.has_value());
    CHECK(commute->end.empty());
    CHECK(check_certificate(*commute));
  }

  TEST_CASE("conjugacy search") {
    const Fraction r(1, 4);
    // q1 = q2 = 1 and p1 + p2 = 4.
    const auto c = conjugacy_search(r, upper_word(Fraction(1, 2)), upper_word(Fraction(1, 2)), 0);
    REQUIRE(c.has_value());
    CHECK(check_certificate(*c));
    const Word u = upper_word(Fraction(1, 3));
    const Word g = W("ab");
    const auto d = conjugacy_search(r, u, g * u * inverse(g), 2);
    REQUIRE(d.has_value());
    CHECK(check_certificate(*d));
    CHECK(d->end == free_reduce(g * u * inverse(g)));
  }
}
