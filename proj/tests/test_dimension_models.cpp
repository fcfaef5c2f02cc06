#include <doctest.h>

#include "precedent/dimension_models.hpp"
#include "precedent/errors.hpp"
#include "precedent/generators.hpp"
#include "precedent/oracle.hpp"
#include "support.hpp"

using namespace precedent;
using namespace precedent::testing;

namespace {

DimCaseBase family_base() {
  const auto h = family_dimensions();
  return DimCaseBase(h, {{"M", dim_m(h)}});
}

}  // namespace

TEST_CASE("lower bounds for E") {
  const auto cb = family_base();
  const auto& h = cb.hierarchy();
  const auto e = dim_e(h);
  CHECK(dhrm_bound(cb, e, lower(h, 2, "Q"), "E").forced);
  CHECK_FALSE(dhrm_bound(cb, e, lower(h, 3, "R"), "E").forced);
  CHECK_FALSE(dhrm_bound(cb, e, lower(h, 1, "pi"), "E").forced);
  CHECK_FALSE(dhrm_forces_outcome(cb, e, Side::Pi, "E").forced);
}

TEST_CASE("3 <= E(R) fails on F6 only") {
  const auto cb = family_base();
  const auto& h = cb.hierarchy();
  const auto r = dhrm_bound(cb, dim_e(h), lower(h, 3, "R"), "E");
  REQUIRE(r.trace.attempts.size() == 1);
  std::vector<std::string> failing;
  for (const auto& c : r.trace.attempts[0].conditions)
    if (!c.holds) failing.push_back(c.subject);
  CHECK(failing == std::vector<std::string>{"F6"});
  CHECK(render_text(r.trace).find("0 ⪯ E(F6) = 1: fails") != std::string::npos);
}

TEST_CASE("E prime is lower bounded by the pi decision") {
  const auto cb = family_base();
  const auto& h = cb.hierarchy();
  const auto ep = dim_e_prime(h);
  CHECK(dhrm_bound(cb, ep, lower(h, 3, "R"), "Eprime").forced);
  CHECK(dhrm_bound(cb, ep, lower(h, 1, "pi"), "Eprime").forced);
  const auto r = dhrm_forces_outcome(cb, ep, Side::Pi, "Eprime");
  CHECK(r.forced);
  CHECK(r.trace.rule == TraceRule::Precedent);
  CHECK_FALSE(dhrm_forces_outcome(cb, ep, Side::Delta).forced);
}

TEST_CASE("upper bounds are the order dual") {
  const auto cb = family_base();
  const auto& h = cb.hierarchy();
  // M has Q = 2 <= 3; an upper bound Q <= 2 for a situation weaker than M on P and F3.
  auto x = values(h, {{"F1", 0}, {"F2", 0}, {"F3", 1}, {"F4", 0}, {"F5", 1}, {"F6", 1}, {"P", 1}});
  CHECK(dhrm_bound(cb, x, {h.index_of("Q"), 2, BoundDirection::Upper}).forced);
  CHECK_FALSE(dhrm_bound(cb, x, {h.index_of("Q"), 1, BoundDirection::Upper}).forced);
  CHECK(dhrm_bound(cb, x, {h.index_of("P"), 1, BoundDirection::Upper}).forced);  // directly
}

TEST_CASE("outcome dimension must be binary") {
  DimensionHierarchy h;
  h.add_dimension("pi", ValueOrder::ascending());
  CHECK_THROWS_AS((void)outcome_claim(h, Side::Pi), ModelError);
  const auto g = family_dimensions();
  CHECK(outcome_claim(g, Side::Pi) == BoundClaim{g.index_of("pi"), 1, BoundDirection::Lower});
  CHECK(outcome_claim(g, Side::Delta) == BoundClaim{g.index_of("pi"), 0, BoundDirection::Upper});
}

TEST_CASE("dimension cases are complete and within their value sets") {
  const auto h = family_dimensions();
  auto x = dim_m(h);
  x.unset(h.index_of("R"));
  CHECK_THROWS_AS(DimCaseBase(h, {{"M", x}}), IncompleteCaseError);
  auto y = dim_m(h);
  y.set(h.index_of("F1"), 5);
  CHECK_THROWS_AS(DimCaseBase(h, {{"M", y}}), ValueError);
}

TEST_CASE("flat dimension model by hand") {
  const std::vector<ValueOrder> orders{ValueOrder::ascending(), ValueOrder::descending()};
  auto x = [](Value a, Value b) {
    DimSituation s(2);
    s.set(0, a);
    s.set(1, b);
    return s;
  };
  const FlatDimCaseBase cb({"a", "b"}, orders, {{"G", x(2, 5), Side::Pi}, {"H", x(1, 1), Side::Delta}});
  CHECK(drm_verdict(cb, x(3, 4), Side::Pi));
  CHECK_FALSE(drm_verdict(cb, x(1, 4), Side::Pi));
  CHECK_FALSE(drm_verdict(cb, x(3, 6), Side::Pi));
  // delta: X(d) <= H(d) everywhere, i.e. a <= 1 and b >= 1.
  CHECK(drm_verdict(cb, x(0, 3), Side::Delta));
  CHECK_FALSE(drm_verdict(cb, x(2, 3), Side::Delta));
  DimSituation partial(2);
  partial.set(0, 1);
  CHECK_THROWS_AS((void)drm_forces(cb, partial, Side::Pi), ModelError);
}

TEST_CASE("explicit orders in the hierarchical model") {
  DimensionHierarchy h;
  h.add_dimension("pi", ValueOrder::ascending(std::vector<std::int64_t>{0, 1}));
  h.add_dimension("q", ValueOrder::explicit_order({"bottom", "a", "b", "top"},
                                                  {{"bottom", "a"}, {"bottom", "b"}, {"a", "top"}, {"b", "top"}}));
  h.add_edge("q", "pi");
  const auto& q = h.order(1);
  DimSituation g(2);
  g.set(0, 1);
  g.set(1, q.value("a"));
  const DimCaseBase cb(h, {{"G", g}});
  auto query = [&](const char* token) {
    DimSituation x(2);
    x.set(1, q.value(token));
    return dhrm_outcome_verdict(cb, x, Side::Pi);
  };
  CHECK(query("a"));
  CHECK(query("top"));
  CHECK_FALSE(query("b"));  // incomparable
  CHECK_FALSE(query("bottom"));
}

TEST_CASE("dimension trace json round trip") {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto h = random_dimension_hierarchy(rng, 2 + rng.below(6));
    const auto cb = random_dim_case_base(h, rng, 1 + rng.below(3));
    const auto r = dhrm_bound(cb, random_dim_situation(h, rng, 80, 20), random_claim(h, rng));
    CHECK(trace_from_json(to_json(r.trace)) == r.trace);
  }
}
