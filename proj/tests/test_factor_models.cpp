#include <doctest.h>

#include <algorithm>

#include "precedent/errors.hpp"
#include "precedent/factor_models.hpp"
#include "precedent/generators.hpp"
#include "precedent/goal.hpp"
#include "precedent/oracle.hpp"
#include "support.hpp"

using namespace precedent;
using namespace precedent::testing;

namespace {

// Goals along the first failing condition of each failed attempt.
std::vector<std::string> blocking_chain(const DerivationTrace& t) {
  std::vector<std::string> chain{t.goal};
  const DerivationTrace* node = &t;
  while (!node->attempts.empty()) {
    const TraceCondition* failing = nullptr;
    for (const auto& c : node->attempts.front().conditions)
      if (!c.holds) {
        failing = &c;
        break;
      }
    if (!failing || failing->subgoal.empty()) break;
    node = &failing->subgoal.front();
    chain.push_back(node->goal);
  }
  return chain;
}

FlatCaseBase flat_base(std::vector<FlatCase> cases) {
  return FlatCaseBase({"F1", "F2", "F3"}, {Polarity::Pro, Polarity::Pro, Polarity::Con}, std::move(cases));
}

FactSituation flat(std::initializer_list<int> bits) {
  FactSituation f(bits.size());
  std::size_t i = 0;
  for (int b : bits) f.set(i++, b != 0);
  return f;
}

}  // namespace

TEST_CASE("M does not force pi for E; the failure bottoms out at F1") {
  const auto h = family_factors();
  const auto cb = single(h, "M", case_m(h));
  const auto r = hrm_forces(cb, query_e(h), lit(h, "pi"), "E");
  CHECK_FALSE(r.forced);
  CHECK(blocking_chain(r.trace) == std::vector<std::string>{"pi", "Q", "P", "F1"});

  // The Q step also needs M |= not F3, which holds since E does not have F3.
  const auto& q_step = r.trace.attempts.at(0).conditions.at(0).subgoal.at(0);
  const auto& f3 = q_step.attempts.at(0).conditions.at(1);
  CHECK(f3.kind == ConditionKind::Con);
  CHECK(f3.subject == "F3");
  CHECK(f3.holds);

  const auto text = render_text(r.trace);
  CHECK(text.find("E ⊨ F1: fails") != std::string::npos);
  CHECK(text.rfind("E ⊨ F1: fails") > text.find("M, E ⊨ P: not forced"));
}

TEST_CASE("adding P to E makes M force pi") {
  const auto h = family_factors();
  auto e = query_e(h);
  e.set(h.index_of("P"), true);
  const auto cb = single(h, "M", case_m(h));
  const auto r = hrm_forces(cb, e, lit(h, "pi"), "EP");
  CHECK(r.forced);
  CHECK(r.trace.rule == TraceRule::Precedent);
  CHECK(r.trace.attempts.size() == 1);
  CHECK(hrm_forces(cb, e, lit(h, "Q")).forced);
}

TEST_CASE("primed variant is blocked inside R on F6") {
  const auto h = family_factors();
  const auto cb = single(h, "Mprime", case_m_prime(h));
  const auto r = hrm_forces(cb, query_e_prime(h), lit(h, "pi"), "Eprime");
  CHECK_FALSE(r.forced);
  const auto& attempt = r.trace.attempts.at(0);
  const auto& r_cond = attempt.conditions.at(1);
  REQUIRE(r_cond.subject == "R");
  CHECK_FALSE(r_cond.holds);
  const auto& r_step = r_cond.subgoal.at(0);
  std::vector<std::string> failing;
  for (const auto& c : r_step.attempts.at(0).conditions)
    if (!c.holds) failing.push_back(c.subject);
  CHECK(failing == std::vector<std::string>{"F6"});
  // E' has F4, as M' does; F5 is absent from E'.
  CHECK_FALSE(hrm_forces(cb, query_e_prime(h), lit(h, "R")).forced);
}

TEST_CASE("double-primed variant: flat distinguishes, hierarchical forces with P") {
  const auto h = family_factors();
  const auto m2 = case_m_double_prime(h);
  const auto cb = single(h, "Mdprime", m2);
  // Flat reading: basic factors only, F1 F2 F4 for pi and F3 F5 F6 against.
  const std::vector<const char*> basics{"F1", "F2", "F3", "F4", "F5", "F6"};
  const std::vector<Polarity> pol{Polarity::Pro, Polarity::Pro, Polarity::Con,
                                  Polarity::Pro, Polarity::Con, Polarity::Con};
  std::vector<std::size_t> index;
  for (const char* b : basics) index.push_back(h.index_of(b));
  const FlatCaseBase flat_cb({basics.begin(), basics.end()}, pol, {{"Mdprime", project(m2, index), Side::Pi}});
  const auto e2 = query_e_double_prime(h);
  const auto rm = rm_forces(flat_cb, project(e2, index), Side::Pi, "Edprime");
  CHECK_FALSE(rm.forced);
  REQUIRE(rm.trace.attempts.size() == 1);
  CHECK(rm.trace.attempts[0].conditions.at(0).subject == "F1");
  CHECK_FALSE(rm.trace.attempts[0].conditions.at(0).holds);

  auto e2p = e2;
  e2p.set(h.index_of("P"), true);
  CHECK(hrm_forces(cb, e2p, lit(h, "pi")).forced);
}

TEST_CASE("direct satisfaction forces without precedents") {
  const auto h = family_factors();
  const FactorCaseBase empty(h);
  const auto m = case_m(h);
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Literal l{i, !*m[i]};
    const auto r = hrm_forces(empty, m, l);
    CHECK(r.forced);
    CHECK(r.trace.rule == TraceRule::Direct);
  }
  CHECK_FALSE(hrm_forces(empty, query_e(h), lit(h, "pi")).forced);
  CHECK(hrm_forces(single(h, "M", m), m, lit(h, "pi")).forced);
}

TEST_CASE("delta is not forced by a pi precedent") {
  const auto h = family_factors();
  const auto cb = single(h, "M", case_m(h));
  CHECK_FALSE(hrm_forces(cb, query_e(h), lit(h, "pi", true)).forced);
}

TEST_CASE("cases must be complete") {
  const auto h = family_factors();
  auto partial = case_m(h);
  partial.unset(h.index_of("F3"));
  CHECK_THROWS_WITH_AS(single(h, "M", partial), "case 'M' not complete: missing F3", IncompleteCaseError);
}

TEST_CASE("queries must fit the hierarchy") {
  const auto h = family_factors();
  const auto cb = single(h, "M", case_m(h));
  CHECK_THROWS_AS((void)hrm_forces(cb, FactSituation(3), lit(h, "pi")), UnknownNameError);
  CHECK_THROWS_AS((void)hrm_forces(cb, query_e(h), Literal{42, false}), UnknownNameError);
}

TEST_CASE("flat model by hand") {
  // A: F1, F3 -> pi.  Pro(pi) = {F1, F2}, Con(pi) = {F3}.
  const auto cb = flat_base({{"A", flat({1, 0, 1}), Side::Pi}, {"B", flat({0, 1, 0}), Side::Delta}});
  CHECK(rm_verdict(cb, flat({1, 0, 1}), Side::Pi));
  CHECK(rm_verdict(cb, flat({1, 1, 0}), Side::Pi));   // stronger for pi
  CHECK_FALSE(rm_verdict(cb, flat({0, 1, 1}), Side::Pi));  // lacks F1
  // B: F2 -> delta. Pro(delta) = {F3}, Con(delta) = {F1, F2}.
  CHECK(rm_verdict(cb, flat({0, 1, 1}), Side::Delta));
  CHECK_FALSE(rm_verdict(cb, flat({1, 1, 1}), Side::Delta));  // F1 is new for pi
  CHECK(rm_verdict(cb, flat({0, 0, 0}), Side::Delta));
  const auto r = rm_forces(cb, flat({0, 1, 1}), Side::Pi, "X");
  CHECK(r.trace.failure_witness.find("F1") != std::string::npos);
}

TEST_CASE("trace json round trip") {
  const auto h = family_factors();
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto cb = random_factor_case_base(h, rng, 1 + rng.below(3));
    const auto r = hrm_forces(cb, random_query_situation(h, rng), random_literal(h, rng));
    CHECK(trace_from_json(to_json(r.trace)) == r.trace);
    CHECK(r.trace.forced == r.forced);
  }
}

TEST_CASE("trace verdict agrees with plain verdict") {
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const auto h = random_factor_hierarchy(rng, 2 + rng.below(8));
    const auto cb = random_factor_case_base(h, rng, rng.below(4));
    const auto f = random_query_situation(h, rng);
    const auto l = random_literal(h, rng);
    EvaluationStats stats;
    const bool v = hrm_verdict(cb, f, l, &stats);
    CHECK(hrm_forces(cb, f, l).forced == v);
    CHECK(stats.max_depth <= h.height(l.factor) + 1);
  }
}

TEST_CASE("adding a precedent can take a forced verdict away") {
  // pi <- a+, b-;  b <- c+.  G1 decides pi without b; G2 has b via c.
  FactorHierarchy h;
  for (const char* n : {"pi", "a", "b", "c"}) h.add_factor(n);
  h.add_edge("a", "pi", Polarity::Pro);
  h.add_edge("b", "pi", Polarity::Con);
  h.add_edge("c", "b", Polarity::Pro);
  const auto g1 = facts(h, {"pi", "a"}, {"b", "c"});
  const auto g2 = facts(h, {"b", "c"}, {"pi", "a"});
  const auto f = facts(h, {"a", "c"}, {});
  const FactorCaseBase one(h, {{"G1", g1}});
  const FactorCaseBase both(h, {{"G1", g1}, {"G2", g2}});
  CHECK(hrm_verdict(one, f, lit(h, "pi")));
  // With G2, b becomes forced for F, and the con clause then needs G1 |= b.
  CHECK(hrm_verdict(both, f, lit(h, "b")));
  CHECK_FALSE(hrm_verdict(both, f, lit(h, "pi")));
  CHECK(reference_hrm_forces(one, f, lit(h, "pi")));
  CHECK_FALSE(reference_hrm_forces(both, f, lit(h, "pi")));
}

TEST_CASE("traces are sound") {
  Rng rng(23);
  for (int i = 0; i < 500; ++i) {
    const auto h = random_factor_hierarchy(rng, 2 + rng.below(8));
    const auto cb = random_factor_case_base(h, rng, rng.below(4));
    const auto f = random_query_situation(h, rng);
    const auto l = random_literal(h, rng);
    const auto r = hrm_forces(cb, f, l);
    if (r.forced) {
      CHECK((r.trace.rule == TraceRule::Direct) == satisfies(f, l));
      if (r.trace.rule == TraceRule::Precedent) {
        REQUIRE(r.trace.attempts.size() == 1);
        const auto& a = r.trace.attempts[0];
        CHECK(a.succeeded);
        for (const auto& c : a.conditions) {
          CHECK(c.holds);
          // Replay each recursive step against the evaluator.
          for (const auto& sub : c.subgoal) CHECK(hrm_verdict(cb, f, parse_literal(h, sub.goal)) == sub.forced);
        }
      }
    } else {
      CHECK(r.trace.rule == TraceRule::None);
      CHECK_FALSE(r.trace.failure_witness.empty());
      for (const auto& a : r.trace.attempts) {
        CHECK_FALSE(a.succeeded);
        CHECK(std::ranges::any_of(a.conditions, [](const TraceCondition& c) { return !c.holds; }));
      }
    }
  }
}
