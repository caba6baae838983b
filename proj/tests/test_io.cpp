#include "mwgap/dual.hpp"
#include "mwgap/io.hpp"
#include "mwgap/weights.hpp"

#include <doctest.h>

using namespace mwgap;

TEST_SUITE("io") {
  TEST_CASE("rational text form") {
    CHECK(to_string(frac(2, 4)) == "1/2");
    CHECK(to_string(Rational(3)) == "3/1");
    CHECK(to_string(frac(-6, 4)) == "-3/2");
    CHECK(parse_rational("10/4") == frac(5, 2));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("x"));
    CHECK_THROWS(parse_rational(""));
  }

  TEST_CASE("instance round trip") {
    for (const WeightFunction& w : {build_w3(6), build_fk(), build_w_tilde(4, 3), WeightFunction(3, 2)}) {
      const Json j = instance_to_json(w);
      CHECK(instance_from_json(j) == w);
      CHECK(instance_from_json(Json::parse(j.dump())) == w);
    }
  }

  TEST_CASE("instance layout") {
    const Json j = instance_to_json(build_fk());
    CHECK(j["k"] == 3);
    CHECK(j["n"] == 2);
    CHECK(j["weights"].size() == 9);
    CHECK(j["weights"][0]["w"].is_string());
  }

  TEST_CASE("duplicate and foreign edges are rejected") {
    Json j = instance_to_json(build_fk());
    j["weights"].push_back(j["weights"][0]);
    CHECK_THROWS(instance_from_json(j));
    Json bad = instance_to_json(build_fk());
    bad["weights"][0]["u"] = {3, 0, 0};
    CHECK_THROWS(instance_from_json(bad));
  }

  TEST_CASE("cut round trip") {
    const Cut a = argmax_cut(4, 3);
    CHECK(cut_from_json(cut_to_json(a)) == a);
    const Cut b = Cut::from_function(3, 3, CutFamily::nonopposite,
                                     [](const GridPoint& p) { return p.is_terminal() ? p.support()[0] : 4; });
    CHECK(cut_from_json(cut_to_json(b)) == b);
  }

  TEST_CASE("cut family inference") {
    const Cut b = Cut::from_function(3, 2, CutFamily::nonopposite,
                                     [](const GridPoint& p) { return p.is_terminal() ? p.support()[0] : 4; });
    Json j = cut_to_json(b);
    j.erase("family");
    CHECK(cut_from_json(j).family() == CutFamily::nonopposite);
    Json k = cut_to_json(argmax_cut(3, 2));
    k.erase("family");
    CHECK(cut_from_json(k).family() == CutFamily::kway);
    CHECK(parse_cut_family(cut_family_name(CutFamily::extended)) == CutFamily::extended);
  }

  TEST_CASE("incomplete cuts are rejected") {
    Json j = cut_to_json(argmax_cut(3, 2));
    j["labels"].erase(j["labels"].begin() + 1);
    CHECK_THROWS(cut_from_json(j));
  }

  TEST_CASE("certificate round trip") {
    for (auto fam : {Family::nonopposite, Family::threeway}) {
      const Certificate c = certify(6, build_w3(6), fam, frac(2, 3));
      const Certificate d = certificate_from_json(Json::parse(certificate_to_json(c).dump()));
      CHECK(d.family == c.family);
      CHECK(d.target == c.target);
      CHECK(d.pairwise == c.pairwise);
      CHECK(d.ball == c.ball);
      CHECK(d.corner == c.corner);
      CHECK(d.two_corner == c.two_corner);
      CHECK(d.overall == c.overall);
      CHECK(d.pass == c.pass);
      CHECK(d.witness_face == c.witness_face);
      CHECK(d.witness_vertices == c.witness_vertices);
      CHECK(certificate_to_json(d) == certificate_to_json(c));
    }
  }

  TEST_CASE("digest") {
    const std::string d = instance_digest(build_w3(9));
    CHECK(d.size() == 64);
    CHECK(d.find_first_not_of("0123456789abcdef") == std::string::npos);
    CHECK(d == instance_digest(instance_from_json(instance_to_json(build_w3(9)))));
    CHECK(d != instance_digest(build_w3(6)));
  }

  TEST_CASE("digest of the Freund-Karloff instance") {
    // sha256 of the compact instance JSON, computed with Python's hashlib
    CHECK(instance_digest(build_fk()) == "881761089730d77ab8343c546504be87da1d62d30a295b5e740a79cf321dce6c");
  }
}
