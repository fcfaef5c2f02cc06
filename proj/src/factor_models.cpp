#include "precedent/factor_models.hpp"

#include <algorithm>

namespace precedent {

std::string_view to_string(Side s) { return s == Side::Pi ? "pi" : "delta"; }

bool FactSituation::complete() const {
  return std::ranges::all_of(values_, [](const auto& v) { return v.has_value(); });
}

bool satisfies(const FactSituation& facts, Literal l) {
  if (l.factor >= facts.size())
    throw UnknownNameError("factor index " + std::to_string(l.factor) + " is outside the fact situation");
  const auto v = facts[l.factor];
  return v.has_value() && *v != l.negated;
}

std::string describe(const FactorHierarchy& h, const FactSituation& facts) {
  std::string yes, no;
  for (std::size_t i = 0; i < facts.size() && i < h.size(); ++i) {
    if (!facts.defined(i)) continue;
    std::string& out = *facts[i] ? yes : no;
    out += (out.empty() ? "" : ", ") + h.name(i);
  }
  return "{" + yes + "} apply, {" + no + "} do not";
}

FactorCaseBase::FactorCaseBase(FactorHierarchy hierarchy, std::vector<FactorCase> cases)
    : hierarchy_(std::move(hierarchy)), cases_(std::move(cases)) {
  const auto report = validate_factor_hierarchy(hierarchy_);
  if (!report.ok()) throw InvalidHierarchyError(report.errors.front().message);
  heights_ = hierarchy_.dag().heights();
  for (const auto& c : cases_) {
    if (c.facts.size() != hierarchy_.size())
      throw IncompleteCaseError("case '" + c.name + "' does not match the hierarchy");
    for (std::size_t i = 0; i < hierarchy_.size(); ++i)
      if (!c.facts.defined(i))
        throw IncompleteCaseError("case '" + c.name + "' not complete: missing " + hierarchy_.name(i));
  }
}

FactorCaseBase FactorCaseBase::subset(std::span<const std::size_t> positions) const {
  std::vector<FactorCase> picked;
  for (std::size_t p : positions) picked.push_back(cases_.at(p));
  return FactorCaseBase(hierarchy_, std::move(picked));
}

std::string FactorCaseBase::label() const { return cases_.size() == 1 ? cases_.front().name : "CB"; }

FlatCaseBase::FlatCaseBase(std::vector<std::string> factors, std::vector<Polarity> polarity,
                           std::vector<FlatCase> cases)
    : factors_(std::move(factors)), polarity_(std::move(polarity)), cases_(std::move(cases)) {
  if (factors_.size() != polarity_.size())
    throw Error("flat case base needs one polarity per factor");
  for (const auto& c : cases_) {
    if (c.facts.size() != factors_.size())
      throw IncompleteCaseError("case '" + c.name + "' does not match the factor set");
    for (std::size_t i = 0; i < factors_.size(); ++i)
      if (!c.facts.defined(i))
        throw IncompleteCaseError("case '" + c.name + "' not complete: missing " + factors_[i]);
  }
}

FlatCaseBase FlatCaseBase::subset(std::span<const std::size_t> positions) const {
  std::vector<FlatCase> picked;
  for (std::size_t p : positions) picked.push_back(cases_.at(p));
  return FlatCaseBase(factors_, polarity_, std::move(picked));
}

std::string FlatCaseBase::label() const { return cases_.size() == 1 ? cases_.front().name : "CB"; }

// ---------------------------------------------------------------------------
// Flat result model

namespace {

bool supports(Polarity p, Side s) { return (p == Polarity::Pro) == (s == Side::Pi); }

void check_flat_situation(const FlatCaseBase& cb, const FactSituation& facts) {
  if (facts.size() != cb.factor_count())
    throw UnknownNameError("fact situation has " + std::to_string(facts.size()) +
                           " factors, the case base " + std::to_string(cb.factor_count()));
}

bool flat_holds(const FlatCaseBase& cb, const FlatCase& g, const FactSituation& f) {
  for (std::size_t q = 0; q < cb.factor_count(); ++q) {
    const bool in_g = satisfies(g.facts, {q, false});
    const bool in_f = satisfies(f, {q, false});
    if (supports(cb.polarity(q), g.outcome) ? (in_g && !in_f) : (in_f && !in_g)) return false;
  }
  return true;
}

}  // namespace

bool rm_verdict(const FlatCaseBase& cb, const FactSituation& facts, Side side) {
  check_flat_situation(cb, facts);
  return std::ranges::any_of(cb.cases(), [&](const FlatCase& g) {
    return g.outcome == side && flat_holds(cb, g, facts);
  });
}

ForcingResult rm_forces(const FlatCaseBase& cb, const FactSituation& facts, Side side,
                        std::string_view situation) {
  check_flat_situation(cb, facts);
  const std::string sit(situation);
  DerivationTrace t;
  t.goal = std::string(to_string(side));
  t.statement = cb.label() + ", " + sit + " ⊨ " + t.goal;
  t.forced = rm_verdict(cb, facts, side);

  std::vector<std::string> blocked;
  for (const auto& g : cb.cases()) {
    if (g.outcome != side) continue;
    TraceAttempt a{g.name, true, {}};
    std::string first_block;
    for (std::size_t q = 0; q < cb.factor_count(); ++q) {
      const std::string& name = cb.factor(q);
      const bool in_g = satisfies(g.facts, {q, false});
      const bool in_f = satisfies(facts, {q, false});
      TraceCondition c;
      c.subject = name;
      if (supports(cb.polarity(q), side)) {
        if (!in_g) continue;
        c.kind = ConditionKind::Pro;
        c.holds = in_f;
        c.text = g.name + " ⊨ " + name + ", so " + sit + (in_f ? " ⊨ " : " ⊭ ") + name;
      } else {
        if (!in_f) continue;
        c.kind = ConditionKind::Con;
        c.holds = in_g;
        c.text = sit + " ⊨ " + name + ", so " + g.name + (in_g ? " ⊨ " : " ⊭ ") + name;
      }
      if (!c.holds) {
        a.succeeded = false;
        first_block += (first_block.empty() ? "" : ", ") + name;
      }
      a.conditions.push_back(std::move(c));
    }
    if (t.forced) {
      if (a.succeeded) {
        t.rule = TraceRule::Precedent;
        t.attempts.push_back(std::move(a));
        return {true, std::move(t)};
      }
      continue;
    }
    blocked.push_back(g.name + " blocked on " + first_block);
    t.attempts.push_back(std::move(a));
  }
  if (t.attempts.empty()) {
    t.failure_witness = "no precedent decided for " + t.goal;
  } else {
    for (const auto& b : blocked) t.failure_witness += (t.failure_witness.empty() ? "" : "; ") + b;
  }
  return {false, std::move(t)};
}

// ---------------------------------------------------------------------------
// Hierarchical result model

namespace {

class HrmEvaluator {
 public:
  HrmEvaluator(const FactorCaseBase& cb, const FactSituation& facts, EvaluationStats* stats)
      : cb_(cb), h_(cb.hierarchy()), facts_(facts), stats_(stats), memo_(2 * h_.size(), -1) {
    if (facts.size() != h_.size())
      throw UnknownNameError("fact situation has " + std::to_string(facts.size()) +
                             " factors, the hierarchy " + std::to_string(h_.size()));
  }

  bool forced(Literal l, std::size_t depth = 1) {
    if (l.factor >= h_.size()) throw UnknownNameError("factor index out of range");
    if (stats_) {
      ++stats_->evaluations;
      stats_->max_depth = std::max(stats_->max_depth, depth);
    }
    signed char& slot = memo_[2 * l.factor + (l.negated ? 1 : 0)];
    if (slot >= 0) return slot != 0;
    bool result = satisfies(facts_, l);
    if (!result && h_.is_abstract(l.factor)) {
      for (const auto& g : cb_.cases()) {
        if (satisfies(g.facts, l) && instantiates(g, l, depth)) {
          result = true;
          break;
        }
      }
    }
    slot = result ? 1 : 0;
    return result;
  }

  DerivationTrace trace(Literal l) {
    DerivationTrace t;
    const std::string lit = h_.to_string(l);
    t.goal = (l.negated ? "!" : "") + h_.name(l.factor);
    t.statement = cb_.label() + ", " + sit_ + " ⊨ " + lit;
    t.forced = forced(l);
    t.detail = sit_ + " ⊨ " + lit;
    if (satisfies(facts_, l)) {
      t.rule = TraceRule::Direct;
      return t;
    }
    if (h_.is_basic(l.factor)) {
      t.failure_witness = t.detail;
      return t;
    }
    bool any_candidate = false;
    for (const auto& g : cb_.cases()) {
      if (!satisfies(g.facts, l)) continue;
      any_candidate = true;
      if (t.forced && !instantiates(g, l, 1)) continue;
      TraceAttempt a = attempt(g, l);
      if (t.forced) {
        t.rule = TraceRule::Precedent;
        t.attempts.push_back(std::move(a));
        return t;
      }
      t.failure_witness += (t.failure_witness.empty() ? "" : "; ") + blocking(a);
      t.attempts.push_back(std::move(a));
    }
    if (!any_candidate) t.failure_witness = "no precedent G with G ⊨ " + lit;
    return t;
  }

  void set_situation_name(std::string name) { sit_ = std::move(name); }

 private:
  std::span<const std::size_t> pro_of(Literal l) const {
    return l.negated ? h_.con_children(l.factor) : h_.pro_children(l.factor);
  }
  std::span<const std::size_t> con_of(Literal l) const {
    return l.negated ? h_.pro_children(l.factor) : h_.con_children(l.factor);
  }

  bool instantiates(const FactorCase& g, Literal l, std::size_t depth) {
    for (std::size_t q : pro_of(l))
      if (satisfies(g.facts, {q, false}) && !forced({q, false}, depth + 1)) return false;
    for (std::size_t q : con_of(l))
      if (forced({q, false}, depth + 1) && !satisfies(g.facts, {q, false})) return false;
    return true;
  }

  TraceAttempt attempt(const FactorCase& g, Literal l) {
    TraceAttempt a{g.name, true, {}};
    const std::string lead = cb_.label() + ", " + sit_ + " ⊨ ";
    for (std::size_t q : pro_of(l)) {
      const std::string& name = h_.name(q);
      TraceCondition c{ConditionKind::Pro, name, {}, true, {}};
      if (satisfies(g.facts, {q, false})) {
        c.holds = forced({q, false});
        c.text = g.name + " ⊨ " + name + ", requires " + lead + name;
        c.subgoal.push_back(trace({q, false}));
      } else {
        c.text = g.name + " ⊭ " + name + ", vacuous";
      }
      a.succeeded = a.succeeded && c.holds;
      a.conditions.push_back(std::move(c));
    }
    for (std::size_t q : con_of(l)) {
      const std::string& name = h_.name(q);
      TraceCondition c{ConditionKind::Con, name, {}, true, {}};
      if (forced({q, false})) {
        c.holds = satisfies(g.facts, {q, false});
        c.text = lead + name + " forced, requires " + g.name + " ⊨ " + name;
      } else {
        c.text = lead + name + " not forced";
      }
      c.subgoal.push_back(trace({q, false}));
      a.succeeded = a.succeeded && c.holds;
      a.conditions.push_back(std::move(c));
    }
    return a;
  }

  std::string blocking(const TraceAttempt& a) const {
    for (const auto& c : a.conditions) {
      if (c.holds) continue;
      if (c.kind == ConditionKind::Con) return a.precedent + ": " + c.subject + " (" + a.precedent + " ⊭ " + c.subject + ")";
      return a.precedent + ": " + c.subject + " <- " + c.subgoal.front().failure_witness;
    }
    return a.precedent;
  }

  const FactorCaseBase& cb_;
  const FactorHierarchy& h_;
  const FactSituation& facts_;
  EvaluationStats* stats_;
  std::vector<signed char> memo_;
  std::string sit_ = "F";
};

}  // namespace

bool hrm_verdict(const FactorCaseBase& cb, const FactSituation& facts, Literal goal,
                 EvaluationStats* stats) {
  HrmEvaluator eval(cb, facts, stats);
  return eval.forced(goal);
}

ForcingResult hrm_forces(const FactorCaseBase& cb, const FactSituation& facts, Literal goal,
                         std::string_view situation) {
  HrmEvaluator eval(cb, facts, nullptr);
  eval.set_situation_name(std::string(situation));
  auto t = eval.trace(goal);
  const bool forced = t.forced;
  return {forced, std::move(t)};
}

}  // namespace precedent
