#include <doctest.h>

#include "fpd/ring_spec.hpp"

using namespace fpd;
using nlohmann::json;

TEST_CASE("parse_ring_spec on the stock examples") {
  SUBCASE("poly_quotient lands on the finite backend when possible") {
    RingValue rv = parse_ring_spec_text(
        R"({"kind":"poly_quotient","p":2,"variables":["x","y"],"relations":["x^2","x*y","y^2"]})");
    REQUIRE(rv.finite());
    CHECK(rv.algebra->dim() == 3);
  }
  SUBCASE("an infinite quotient falls back to the polynomial backend") {
    RingValue rv = parse_ring_spec_text(
        R"({"kind":"poly_quotient","p":2,"variables":["x","y"],"relations":["x^2"]})");
    CHECK_FALSE(rv.finite());
    CHECK(rv.poly.relations.size() == 1);
  }
  SUBCASE("families expand") {
    RingValue rv = parse_ring_spec_text(R"({"kind":"family","name":"chain","p":3,"k":3})");
    REQUIRE(rv.finite());
    CHECK(rv.algebra->dim() == 3);
    CHECK(rv.algebra->modulus() == 3);
  }
  SUBCASE("plain polynomial rings") {
    RingValue rv = parse_ring_spec_text(R"({"kind":"poly","p":2,"variables":["x","y"]})");
    CHECK_FALSE(rv.finite());
    CHECK(rv.poly.ring->nvars() == 2);
    CHECK(rv.poly.relations.empty());
  }
  SUBCASE("structure constants") {
    RingValue rv = parse_ring_spec_text(
        R"({"kind":"structure_constants","p":2,"basis":["one","e"],
            "table":[[[1,0],[0,1]],[[0,1],[0,0]]],"unit":[1,0]})");
    REQUIRE(rv.finite());
    CHECK(rv.algebra->dim() == 2);
    CHECK(rv.algebra->mul({0, 1}, {0, 1}) == Row{0, 0});
  }
  SUBCASE("nested idealization family") {
    RingValue rv = parse_ring_spec_text(
        R"({"kind":"family","name":"idealization",
            "base":{"kind":"family","name":"chain","p":2,"k":2},"module":"residue_field"})");
    REQUIRE(rv.finite());
    CHECK(rv.algebra->dim() == 3);
  }
}

TEST_CASE("schema errors carry JSON paths") {
  CHECK_THROWS_AS(parse_ring_spec_text(R"({"kind":"nope"})"), SchemaError);
  CHECK_THROWS_AS(parse_ring_spec_text(R"({"p":2})"), SchemaError);
  CHECK_THROWS_AS(parse_ring_spec_text("not json"), SchemaError);
  try {
    parse_ring_spec_text(R"({"kind":"poly","p":2})");
    CHECK(false);
  } catch (const SchemaError& e) {
    CHECK(e.path == "$");
  }
  // parser and constructor failures propagate
  CHECK_THROWS_AS(parse_ring_spec_text(
                      R"({"kind":"poly_quotient","p":2,"variables":["x"],"relations":["x +"]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_ring_spec_text(
                      R"({"kind":"poly_quotient","p":2,"variables":["x"],"relations":["z"]})"),
                  UnknownVariable);
  CHECK_THROWS_AS(parse_ring_spec_text(R"({"kind":"family","name":"chain","p":4,"k":2})"),
                  InvalidModulus);
}

TEST_CASE("reports are byte-stable and round-trip") {
  json spec = json::parse(R"({"kind":"family","name":"chain","p":2,"k":2})");
  json results = {{"grade", "1"}, {"dims", {1, 1}}};
  json a = make_report("grade", spec, 7, results);
  json b = make_report("grade", spec, 7, results);
  std::string da = a.dump(2), db = b.dump(2);
  CHECK(da == db);
  json parsed = json::parse(da);
  CHECK(parsed == a);
  CHECK(parsed["version"] == kReportVersion);
  CHECK(parsed["seed"] == 7);
  CHECK(parsed["spec"] == spec);
  // nlohmann objects iterate sorted by key
  std::vector<std::string> keys;
  for (auto it = parsed.begin(); it != parsed.end(); ++it) keys.push_back(it.key());
  CHECK(std::is_sorted(keys.begin(), keys.end()));
}

TEST_CASE("element expressions evaluate against every backend origin") {
  SUBCASE("quotient-built algebras use the original variables") {
    RingValue rv = parse_ring_spec_text(
        R"({"kind":"poly_quotient","p":2,"variables":["x","y"],"relations":["x^2","x*y","y^2"]})");
    Row v = evaluate_element(rv.algebra, "1 + x*y + y");
    // x*y collapses to zero in the quotient
    Row one = evaluate_element(rv.algebra, "1");
    Row y = evaluate_element(rv.algebra, "y");
    Row expect(one.size(), 0);
    for (std::size_t i = 0; i < expect.size(); ++i) expect[i] = (one[i] + y[i]) % 2;
    CHECK(v == expect);
  }
  SUBCASE("table-built algebras use their basis names") {
    RingValue rv = parse_ring_spec_text(R"({"kind":"family","name":"field_product","p":3,"m":2})");
    Row v = evaluate_element(rv.algebra, "e1 + 2*e2");
    CHECK(v == Row{1, 2});
  }
  SUBCASE("unknown names are rejected") {
    RingValue rv = parse_ring_spec_text(R"({"kind":"family","name":"chain","p":2,"k":2})");
    CHECK_THROWS_AS(evaluate_element(rv.algebra, "q"), UnknownVariable);
  }
}

TEST_CASE("classifier reports serialize with sorted keys") {
  ClassifierReport rep = classify_ring(family_trunc(2, 2, 2));
  json j = classifier_report_to_json(rep);
  CHECK(j["is_dw"] == true);
  CHECK(j["self_injective_dim"] == "infinity");
  CHECK(j["fpd"]["value"] == "0");
  std::string once = j.dump();
  CHECK(once == classifier_report_to_json(rep).dump());
}
