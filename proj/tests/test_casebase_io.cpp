#include <doctest.h>

#include <algorithm>

#include "precedent/casebase_io.hpp"
#include "precedent/errors.hpp"
#include "support.hpp"

using namespace precedent;
using namespace precedent::testing;

namespace {

bool has_code(const ValidationReport& r, std::string_view code) {
  return std::ranges::any_of(r.errors, [&](const Issue& i) { return i.code == code; });
}

const char* kLone = R"({"model": "factor", "hierarchy": {"factors": ["pi"]}})";

}  // namespace

TEST_CASE("golden fixtures are canonical") {
  for (const char* name : {"family.fct", "family.dim", "flat.fct", "diamond.dim", "lone.fct", "inconsistent.fct", "nonmonotone.fct"}) {
    CAPTURE(name);
    const auto text = read_fixture(name);
    REQUIRE_FALSE(text.empty());
    const auto doc = parse_casebase(text);
    CHECK(validate_document(doc).ok());
    CHECK(serialize_casebase(doc) == text);
    CHECK(parse_casebase(serialize_casebase(doc)) == doc);
  }
}

TEST_CASE("factor fixture matches the hand-built example") {
  const auto doc = std::get<FactorDocument>(parse_casebase(read_fixture("family.fct")));
  const auto cb = build_case_base(doc, {"M"});
  const auto h = family_factors();
  CHECK(cb.hierarchy().edges().size() == h.edges().size());
  CHECK(cb.cases()[0].facts == case_m(h));
  CHECK(build_situation(cb.hierarchy(), *find_situation(doc, "E")) == query_e(h));
  CHECK(build_situation(cb.hierarchy(), *find_situation(doc, "Eprime")) == query_e_prime(h));
  CHECK(build_case_base(doc, {"Mprime"}).cases()[0].facts == case_m_prime(h));
  CHECK(build_case_base(doc, {"Mdprime"}).cases()[0].facts == case_m_double_prime(h));
  CHECK_THROWS_AS((void)build_case_base(doc, {"Nope"}), UnknownNameError);
}

TEST_CASE("dimension fixture leaves E undefined on R and pi") {
  const auto doc = std::get<DimensionDocument>(parse_casebase(read_fixture("family.dim")));
  const auto cb = build_case_base(doc);
  const auto& h = cb.hierarchy();
  const auto e = build_situation(h, *find_situation(doc, "E"));
  CHECK_FALSE(e.defined(h.index_of("R")));
  CHECK_FALSE(e.defined(h.index_of("pi")));
  const auto ref = family_dimensions();
  CHECK(e == dim_e(ref));
  CHECK(cb.cases()[0].values == dim_m(ref));
  CHECK(build_situation(h, *find_situation(doc, "Eprime")) == dim_e_prime(ref));
}

TEST_CASE("diamond order keeps its closure through a round trip") {
  const auto doc = parse_casebase(read_fixture("diamond.dim"));
  const auto again = parse_casebase(serialize_casebase(doc));
  const auto h1 = build_hierarchy(std::get<DimensionDocument>(doc));
  const auto h2 = build_hierarchy(std::get<DimensionDocument>(again));
  const auto& a = h1.order(h1.index_of("quality"));
  const auto& b = h2.order(h2.index_of("quality"));
  REQUIRE(a.values() == b.values());
  for (Value v : a.values())
    for (Value w : a.values()) CHECK(a.leq(v, w) == b.leq(v, w));
  CHECK(a.leq(a.value("bottom"), a.value("top")));
  CHECK_FALSE(a.leq(a.value("a"), a.value("b")));
}

TEST_CASE("lone outcome document") {
  const auto doc = parse_casebase(kLone);
  CHECK(validate_document(doc).ok());
  const auto text = serialize_casebase(doc);
  CHECK(parse_casebase(text) == doc);
  CHECK(serialize_casebase(parse_casebase(text)) == text);
}

TEST_CASE("syntax errors carry a position") {
  try {
    (void)parse_casebase("{\n  \"model\": \"factor\",\n  \"hierarchy\": {]\n}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 17);
    CHECK(std::string(e.what()).rfind("line 3, column 17", 0) == 0);
  }
}

TEST_CASE("shape errors carry a field") {
  auto field_of = [](const char* text) {
    try {
      (void)parse_casebase(text);
    } catch (const ParseError& e) {
      return e.field();
    }
    return std::string("no error");
  };
  CHECK(field_of(R"({"model": "both", "hierarchy": {}})") == "/model");
  CHECK(field_of(R"({"model": "factor"})") == "/");
  CHECK(field_of(R"({"model": "factor", "hierarchy": {"factors": ["pi"]},
                     "cases": [{"name": "A", "facts": {"pi": 1}}]})") == "/cases/0/facts/pi");
  CHECK(field_of(R"({"model": "factor", "hierarchy": {"factors": ["pi"]},
                     "queries": [{"name": "A", "facts": {}, "outcome": "pi"}]})") == "/queries/0/outcome");
  CHECK(field_of(R"({"model": "factor", "hierarchy": {"factors": ["pi"], "edge": []}})") == "/hierarchy/edge");
}

TEST_CASE("semantic violations are all reported") {
  const auto incomplete = parse_casebase(read_fixture("invalid/incomplete.fct"));
  const auto r = validate_document(incomplete);
  REQUIRE(has_code(r, "incomplete-case"));
  CHECK(r.errors.front().message == "case 'M' not complete: missing F3");
  CHECK_THROWS_AS((void)serialize_casebase(incomplete), Error);

  CHECK(has_code(validate_document(parse_casebase(read_fixture("invalid/cycle.fct"))), "cycle"));

  const auto many = parse_casebase(R"({"model": "factor",
    "hierarchy": {"factors": ["pi", "a", "a"], "edges": [{"child": "a", "parent": "pi", "polarity": "pro"},
                                                           {"child": "b", "parent": "pi", "polarity": "pro"}]},
    "flat": {"pro": ["a"], "con": ["a"]},
    "cases": [{"name": "C", "facts": {"pi": true, "a": true, "zz": false}, "outcome": "delta"}],
    "queries": [{"name": "C", "facts": {}}]})");
  const auto m = validate_document(many);
  for (const char* code : {"duplicate-name", "unknown-factor", "flat-overlap", "outcome-conflict"}) {
    CAPTURE(code);
    CHECK(has_code(m, code));
  }
}

TEST_CASE("dimension values must belong to their orders") {
  const auto doc = parse_casebase(R"({"model": "dimension",
    "hierarchy": {"dimensions": [{"name": "pi", "order": "ascending", "values": [0, 1]},
                                 {"name": "q", "values": ["lo", "hi"], "leq": [["lo", "hi"], ["hi", "lo"]]}],
                  "edges": [{"child": "q", "parent": "pi"}]},
    "cases": [{"name": "G", "values": {"pi": 2, "q": "mid"}}]})");
  const auto r = validate_document(doc);
  CHECK(has_code(r, "unknown-value"));
  CHECK(has_code(r, "antisymmetry"));
}

TEST_CASE("abstract assignments are kept, incoherent ones only warned about") {
  const auto doc = parse_casebase(read_fixture("family.fct"));
  const auto r = validate_document(doc);
  CHECK(r.ok());
  CHECK_FALSE(r.warnings.empty());
  const auto& fd = std::get<FactorDocument>(doc);
  CHECK(find_situation(fd, "EP")->facts.at("P"));
}

TEST_CASE("flat views") {
  const auto doc = std::get<FactorDocument>(parse_casebase(read_fixture("family.fct")));
  const auto view = build_flat_case_base(doc, {"Mdprime"});
  REQUIRE(view.cb.factor_count() == 6);
  CHECK(view.cb.factor(0) == "F1");
  CHECK(view.cb.polarity(2) == Polarity::Con);
  CHECK(view.cb.cases()[0].outcome == Side::Pi);

  const auto flat = std::get<FactorDocument>(parse_casebase(read_fixture("flat.fct")));
  const auto fv = build_flat_case_base(flat);
  CHECK(fv.cb.factor_count() == 4);
  CHECK(fv.cb.cases()[1].outcome == Side::Delta);

  const auto dim = std::get<DimensionDocument>(parse_casebase(read_fixture("family.dim")));
  const auto dv = build_flat_case_base(dim);
  CHECK(dv.cb.dimension_count() == 9);
  CHECK(dv.cb.cases()[0].outcome == Side::Pi);
}
