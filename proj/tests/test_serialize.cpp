#include <doctest.h>

#include "twobridge/serialize.hpp"

using namespace twobridge;

TEST_SUITE("serialize") {
  TEST_CASE("certificates round-trip") {
    DecideOptions o;
    o.certify = true;
    const Verdict v = decide_homotopic(Fraction(3, 8), Fraction(1, 6), Fraction(3, 10), o);
    REQUIRE_FALSE(v.certificates.empty());
    const Json j = certificate_to_json(v.certificates.front());
    const RewriteCertificate back = certificate_from_json(Json::parse(j.dump()));
    CHECK(back == v.certificates.front());
    CHECK(check_certificate(back));
    const RewriteCertificate trivial{Fraction(2, 5), Word(), {}, Word()};
    CHECK(certificate_to_json(trivial)["start"] == "1");
    CHECK(certificate_from_json(certificate_to_json(trivial)) == trivial);
  }

  TEST_CASE("malformed certificates are rejected") {
    CHECK_THROWS_AS(certificate_from_json(Json::parse("{}")), std::invalid_argument);
    CHECK_THROWS_AS(certificate_from_json(Json::parse(R"({"slope":"2/5","start":"1","end":"1","steps":3})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        certificate_from_json(Json::parse(
            R"({"slope":"2/5","start":"1","end":"1","steps":[{"position":0,"conjugator":"1","member":0,"direction":"up"}]})")),
        std::invalid_argument);
    CHECK_THROWS_AS(certificate_from_json(Json::parse(R"({"slope":"2/5","start":"x","end":"1","steps":[]})")),
                    std::invalid_argument);
  }

  TEST_CASE("diagrams round-trip") {
    const auto all = search_one_layer(Fraction(3, 8), Fraction(1, 6), 2);
    REQUIRE_FALSE(all.empty());
    const Json j = diagram_to_json(all.front());
    CHECK(j["layers"] == 1);
    CHECK(diagram_from_json(Json::parse(j.dump())) == all.front());
    AnnularDiagram two = all.front();
    two.layers.push_back({two.layers.front().faces, 3});
    CHECK(diagram_from_json(diagram_to_json(two)) == two);
    Json bad = j;
    bad["faces"][0]["cuts"] = Json::array({1, 2});
    CHECK_THROWS_AS(diagram_from_json(bad), std::invalid_argument);
  }

  TEST_CASE("verdict documents") {
    const Fraction r(2, 5), s(1, 5), t(2, 7);
    DecideOptions o;
    o.certify = true;
    const Json j = verdict_to_json(r, s, t, decide_homotopic(r, s, t, o));
    for (const char* key : {"r", "s", "s_prime", "homotopic", "rule", "certificates"}) {
      CHECK(j.contains(key));
    }
    CHECK(j["homotopic"] == false);
    CHECK(j["evidence"]["prime"].is_number());
    const Json c = classification_to_json(Fraction(3, 7), Fraction(2, 7), classify_loop(Fraction(3, 7), Fraction(2, 7)));
    CHECK(c["power"]["exponent"] == 2);
    CHECK(c["meridian"].is_null());
    const Json rep = report_to_json(verify_c4_t4(Fraction(2, 5)));
    CHECK(rep["c4"] == true);
    CHECK(rep["violations"].empty());
    const Json red = reduction_to_json(reduce_to_fundamental_domain(r, Fraction(7, 3)));
    CHECK(red["s0"] == "1/3");
  }
}
