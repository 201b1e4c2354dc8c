#include <doctest.h>

#include "twobridge/diagrams.hpp"
#include "twobridge/sequences.hpp"

using namespace twobridge;

namespace {

std::optional<AnnularDiagram> first_with_inner(const Fraction& r, const Fraction& s, const Fraction& t,
                                               std::size_t faces) {
  for (const AnnularDiagram& d : search_one_layer(r, s, faces)) {
    if (inner_slope(d) == t && outer_label(d) == CyclicWord(upper_word(s))) {
      return d;
    }
  }
  return std::nullopt;
}

} // namespace

TEST_SUITE("diagrams") {
  TEST_CASE("the two-face diagram carrying 1/6 to 3/10") {
    const auto d = first_with_inner(Fraction(3, 8), Fraction(1, 6), Fraction(3, 10), 2);
    REQUIRE(d.has_value());
    CHECK(validate(*d).valid);
    CHECK(d->mode == FaceMode::B);
    CHECK(d->layers.front().faces.size() == 2);
    CHECK(outer_label(*d) == CyclicWord(upper_word(Fraction(1, 6))));
    const CyclicWord inner = inner_label(*d);
    CHECK(inner == CyclicWord(inverse(upper_word(Fraction(3, 10)))));
    CHECK(cyclic_s_sequence(inner) == CyclicSeq({4, 3, 3, 4, 3, 3}));
    CHECK((outer_label(*d).size() - inner.size()) % 2 == 0);

    // Inverting one face label breaks the diagram.
    const SymmetrizedSet set(d->slope);
    AnnularDiagram broken = *d;
    FaceSplit& f = broken.layers.front().faces.front();
    f.member = set.inverse_index(f.member);
    CHECK_FALSE(validate(broken).valid);
  }

  TEST_CASE("a one-face diagram") {
    const auto all = search_one_layer(Fraction(3, 8), Fraction(1, 3), 1);
    REQUIRE_FALSE(all.empty());
    for (const AnnularDiagram& d : all) {
      CHECK(validate(d).valid);
      CHECK(cyclic_s_sequence(inner_label(d)) == CyclicSeq({2, 3, 3, 2}));
    }
  }

  TEST_CASE("validation catches malformed input") {
    AnnularDiagram d;
    d.slope = Fraction(3, 2);
    CHECK_FALSE(validate(d).valid);
    d.slope = Fraction(3, 8);
    d.layers.push_back({{FaceSplit{0, {0, 1, 2, 3}}}, 0});
    const ValidationReport rep = validate(d);
    CHECK_FALSE(rep.valid);
    CHECK_FALSE(rep.failures.empty());
    d.layers.front().faces.front().member = 1000;
    CHECK_FALSE(validate(d).valid);
  }

  TEST_CASE("searches from the exceptional slopes") {
    const Fraction r(3, 8);
    const auto d = first_with_inner(r, Fraction(3, 4), Fraction(5, 12), 4);
    REQUIRE(d.has_value());
    CHECK(cyclic_s_sequence(inner_label(*d)) == CyclicSeq({3, 2, 3, 2, 2, 3, 2, 3, 2, 2}));
    CHECK(reachable_inner_slopes(r, Fraction(1, 6), 4) == std::set<Fraction>{Fraction(1, 6), Fraction(3, 10)});
    CHECK(reachable_inner_slopes(r, Fraction(3, 4), 4) == std::set<Fraction>{Fraction(3, 4), Fraction(5, 12)});
  }

  TEST_CASE("2/7 over 2/5 only reaches itself") {
    const Fraction r(2, 5), s(2, 7);
    const auto all = search_one_layer(r, s, 4);
    CHECK_FALSE(all.empty());
    CHECK(reachable_inner_slopes(r, s, 4) == std::set<Fraction>{s});
  }

  TEST_CASE("every returned diagram validates and recovers s") {
    const Fraction r(3, 8);
    for (const Fraction& s : {Fraction(1, 6), Fraction(3, 4), Fraction(1, 3), Fraction(2, 9)}) {
      const Decomposition dec = decompose(s);
      for (const AnnularDiagram& d : search_one_layer(r, s, 3)) {
        CHECK(validate(d).valid);
        CHECK(recover_slope(cyclic_s_sequence(outer_label(d)), dec) == s);
        CHECK(outer_word(d).size() % 2 == inner_path_word(d).size() % 2);
      }
    }
  }

  TEST_CASE("search preconditions") {
    CHECK_THROWS(search_one_layer(Fraction(3, 8), Fraction(3, 8), 2));
    CHECK_THROWS(search_one_layer(Fraction(3, 8), Fraction(1, 6), 9));
  }

  TEST_CASE("witnesses and certificates from diagrams") {
    const auto d = first_with_inner(Fraction(3, 8), Fraction(1, 6), Fraction(3, 10), 2);
    REQUIRE(d.has_value());
    const Word outer = outer_word(*d), inner = inner_path_word(*d);
    for (std::size_t i = 0; i < outer.size(); i += 3) {
      const RewriteCertificate c = diagram_certificate(*d, i);
      CHECK(check_certificate(c));
      CHECK(c.start == outer.rotation(i));
      for (std::size_t j = 0; j < inner.size(); j += 5) {
        const Word w = conjugacy_witness(*d, i, j);
        const auto proof = prove_equal(d->slope, outer.rotation(i), w * inner.rotation(j) * inverse(w));
        REQUIRE(proof.has_value());
        CHECK(check_certificate(*proof));
      }
    }
  }

  TEST_CASE("a peripheral self-conjugacy at 2/5") {
    const Fraction r(2, 5), s(1, 5);
    const auto d = first_with_inner(r, s, s, 2);
    REQUIRE(d.has_value());
    const RewriteCertificate c = diagram_certificate(*d);
    CHECK(check_certificate(c));
    const Word outer = outer_word(*d), inner = inner_path_word(*d);
    const Word w = conjugacy_witness(*d);
    CHECK(prove_equal(r, outer, w * inner * inverse(w)).has_value());
  }

  TEST_CASE("face modes print and parse") {
    CHECK(to_string(FaceMode::B) == "B");
    CHECK(parse_face_mode("C") == FaceMode::C);
    CHECK_THROWS(parse_face_mode("D"));
  }
}
