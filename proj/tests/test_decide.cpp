#include <doctest.h>

#include "oracles.hpp"
#include "twobridge/decide.hpp"
#include "twobridge/farey.hpp"

using namespace twobridge;

TEST_SUITE("decide") {
  TEST_CASE("families") {
    CHECK(classify_family(Fraction(4, 9)) == Family{FamilyTag::TwoN1, 4});
    CHECK(classify_family(Fraction(3, 8)) == Family{FamilyTag::TwoOneN, 2});
    CHECK(classify_family(Fraction(1, 7)) == Family{FamilyTag::TorusOneOverP, 7});
    CHECK(classify_family(Fraction(5, 17)).tag == FamilyTag::Unsupported);
    CHECK(to_string(classify_family(Fraction(4, 9))) == "[2,n] with n=4");
    CHECK_THROWS_AS(decide_homotopic(Fraction(5, 17), Fraction(1, 5), Fraction(1, 4)), UnsupportedFamily);
    CHECK_THROWS_AS(classify_family(Fraction(1)), std::invalid_argument);
  }

  TEST_CASE("preconditions") {
    CHECK_THROWS_AS(decide_homotopic(Fraction(3, 8), Fraction(3, 8), Fraction(1, 6)), std::invalid_argument);
    CHECK_THROWS_AS(decide_homotopic(Fraction(3, 8), Fraction(1, 6), Fraction(1, 6)), std::invalid_argument);
    CHECK_THROWS_AS(decide_homotopic(Fraction(1, 3), Fraction(0), Fraction(1, 2)), std::invalid_argument);
  }

  TEST_CASE("closed-form answers") {
    CHECK(decide_homotopic(Fraction(1, 3), Fraction(1, 2), Fraction(1)).homotopic);
    CHECK(decide_homotopic(Fraction(3, 8), Fraction(1, 6), Fraction(3, 10)).homotopic);
    CHECK(decide_homotopic(Fraction(3, 8), Fraction(5, 12), Fraction(3, 4)).homotopic);
    CHECK_FALSE(decide_homotopic(Fraction(3, 8), Fraction(1, 6), Fraction(5, 12)).homotopic);
    const Fraction r(4, 9);
    const auto domain = slopes_up_to(12);
    for (const Fraction& s : domain) {
      for (const Fraction& t : domain) {
        if (s < t && contains(intervals(r), s) && contains(intervals(r), t)) {
          CHECK_FALSE(decide_homotopic(r, s, t).homotopic);
        }
      }
    }
  }

  TEST_CASE("torus links follow the closed formula") {
    for (std::int64_t p = 2; p <= 7; ++p) {
      const Fraction r(1, p);
      for (const Fraction& s : slopes_up_to(15)) {
        for (const Fraction& t : slopes_up_to(15)) {
          if (s == t || s.num() == 0 || t.num() == 0 || !contains(intervals(r), s) || !contains(intervals(r), t)) {
            continue;
          }
          const bool expected = s.num() == t.num() && s.num() * p == s.den() + t.den();
          CHECK(decide_homotopic(r, s, t).homotopic == expected);
        }
      }
    }
  }

  TEST_CASE("full decisions reduce first") {
    const Fraction r(2, 5);
    CHECK(full_decision(r, Fraction(1, 5), Fraction(1, 5) + Fraction(2)).homotopic);
    CHECK(full_decision(Fraction(3, 8), Fraction(1, 6), tau_involution()(Fraction(1, 6))).homotopic);
    CHECK_FALSE(full_decision(Fraction(4, 9), Fraction::infinity(), Fraction(1, 5)).homotopic);
    CHECK(full_decision(r, Fraction::infinity(), r).homotopic);
    CHECK(full_decision(r, Fraction(-1, 5), Fraction(1, 5)).homotopic);
  }

  TEST_CASE("certified verdicts") {
    DecideOptions o;
    o.certify = true;
    const Verdict yes = decide_homotopic(Fraction(3, 8), Fraction(1, 6), Fraction(3, 10), o);
    REQUIRE(yes.certificates.size() == 1);
    CHECK(check_certificate(yes.certificates.front()));
    const Verdict torus = decide_homotopic(Fraction(1, 4), Fraction(1, 3), Fraction(1, 2), o);
    CHECK_FALSE(torus.homotopic);
    const Verdict torus_yes = decide_homotopic(Fraction(1, 5), Fraction(1, 2), Fraction(1, 3), o);
    CHECK(torus_yes.homotopic);
    REQUIRE(torus_yes.certificates.size() == 1);
    CHECK(check_certificate(torus_yes.certificates.front()));
    const Verdict no = decide_homotopic(Fraction(2, 5), Fraction(1, 5), Fraction(2, 7), o);
    CHECK_FALSE(no.homotopic);
    CHECK(no.evidence.has_value());
  }

  TEST_CASE("loop classification") {
    const Classification cube = classify_loop(Fraction(2, 5), Fraction(2, 7));
    CHECK_FALSE(cube.primitive);
    REQUIRE(cube.power.has_value());
    CHECK(cube.power->exponent == 3);
    const Classification square = classify_loop(Fraction(3, 7), Fraction(2, 7));
    CHECK_FALSE(square.primitive);
    REQUIRE(square.power.has_value());
    CHECK(square.power->exponent == 2);
    CHECK(square.power->root == Word::parse("abbaBAB"));
    const Classification plain = classify_loop(Fraction(3, 8), Fraction(5, 12));
    CHECK_FALSE(plain.peripheral);
    CHECK(plain.primitive);
    for (std::int64_t n = 2; n <= 5; ++n) {
      CHECK(classify_loop(Fraction(n, 2 * n + 1), Fraction(n + 1, 2 * n + 1)).peripheral);
    }
    CHECK(classify_loop(Fraction(2, 5), Fraction(1, 5)).peripheral);
    CHECK_THROWS(classify_loop(Fraction(1, 3), Fraction(1, 2)));
  }

  TEST_CASE("certified classifications") {
    DecideOptions o;
    o.certify = true;
    for (const auto& [r, s] : {std::pair{Fraction(2, 5), Fraction(2, 7)}, std::pair{Fraction(2, 5), Fraction(3, 4)},
                               std::pair{Fraction(3, 7), Fraction(2, 7)}, std::pair{Fraction(2, 5), Fraction(1, 5)},
                               std::pair{Fraction(3, 7), Fraction(4, 7)}}) {
      const Classification c = classify_loop(r, s, o);
      CHECK_FALSE(c.certificates.empty());
      for (const RewriteCertificate& cert : c.certificates) {
        CHECK(check_certificate(cert));
      }
    }
  }
}
