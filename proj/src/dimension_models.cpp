#include "precedent/dimension_models.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace precedent {

bool DimSituation::complete() const {
  return std::ranges::all_of(values_, [](const auto& v) { return v.has_value(); });
}

void check_choice_function(const DimensionHierarchy& h, const DimSituation& x) {
  if (x.size() != h.size())
    throw UnknownNameError("fact situation has " + std::to_string(x.size()) +
                           " dimensions, the hierarchy " + std::to_string(h.size()));
  for (std::size_t d = 0; d < h.size(); ++d)
    if (x.defined(d) && !h.order(d).contains(*x[d]))
      throw ValueError("value " + std::to_string(*x[d]) + " is not in dimension '" + h.name(d) + "'");
}

std::string describe(const DimensionHierarchy& h, const DimSituation& x) {
  std::string out;
  for (std::size_t d = 0; d < x.size() && d < h.size(); ++d) {
    out += (out.empty() ? "" : ", ") + h.name(d) + "=";
    out += x.defined(d) ? h.order(d).token(*x[d]) : "?";
  }
  return "{" + out + "}";
}

DimCaseBase::DimCaseBase(DimensionHierarchy hierarchy, std::vector<DimCase> cases)
    : hierarchy_(std::move(hierarchy)), cases_(std::move(cases)) {
  const auto report = validate_dimension_hierarchy(hierarchy_);
  if (!report.ok()) throw InvalidHierarchyError(report.errors.front().message);
  heights_ = hierarchy_.dag().heights();
  for (const auto& c : cases_) {
    if (c.values.size() != hierarchy_.size())
      throw IncompleteCaseError("case '" + c.name + "' does not match the hierarchy");
    for (std::size_t d = 0; d < hierarchy_.size(); ++d)
      if (!c.values.defined(d))
        throw IncompleteCaseError("case '" + c.name + "' not complete: missing " + hierarchy_.name(d));
    check_choice_function(hierarchy_, c.values);
  }
}

DimCaseBase DimCaseBase::subset(std::span<const std::size_t> positions) const {
  std::vector<DimCase> picked;
  for (std::size_t p : positions) picked.push_back(cases_.at(p));
  return DimCaseBase(hierarchy_, std::move(picked));
}

std::string DimCaseBase::label() const { return cases_.size() == 1 ? cases_.front().name : "CB"; }

// ---------------------------------------------------------------------------

namespace {

class DhrmEvaluator {
 public:
  DhrmEvaluator(const DimCaseBase& cb, const DimSituation& x, EvaluationStats* stats)
      : cb_(cb), h_(cb.hierarchy()), x_(x), stats_(stats) {
    check_choice_function(h_, x_);
  }

  void check(const BoundClaim& c) const {
    if (c.dimension >= h_.size()) throw UnknownNameError("dimension index out of range");
    if (!h_.order(c.dimension).contains(c.value))
      throw ValueError("claim value " + std::to_string(c.value) + " is not in dimension '" +
                       h_.name(c.dimension) + "'");
  }

  bool forced(const BoundClaim& c, std::size_t depth = 1) {
    if (stats_) {
      ++stats_->evaluations;
      stats_->max_depth = std::max(stats_->max_depth, depth);
    }
    const auto key = std::make_tuple(c.dimension, c.value, c.direction == BoundDirection::Lower);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool result = direct(c);
    if (!result && h_.is_abstract(c.dimension)) {
      for (const auto& y : cb_.cases()) {
        if (candidate(y, c) && instantiates(y, c, depth)) {
          result = true;
          break;
        }
      }
    }
    memo_.emplace(key, result);
    return result;
  }

  DerivationTrace trace(const BoundClaim& c) {
    DerivationTrace t;
    const auto& order = h_.order(c.dimension);
    const std::string& dim = h_.name(c.dimension);
    const std::string v = order.token(c.value);
    const bool lower = c.direction == BoundDirection::Lower;
    t.goal = lower ? v + "<=" + dim : dim + "<=" + v;
    t.statement = cb_.label() + " ⊨ " + claim_text(c, sit_);
    t.forced = forced(c);
    t.detail = claim_text(c, sit_) +
               (x_.defined(c.dimension) ? " = " + order.token(*x_[c.dimension]) : " (undefined)");
    if (direct(c)) {
      t.rule = TraceRule::Direct;
      return t;
    }
    if (h_.is_basic(c.dimension)) {
      t.failure_witness = t.detail;
      return t;
    }
    bool any_candidate = false;
    for (const auto& y : cb_.cases()) {
      if (!candidate(y, c)) continue;
      any_candidate = true;
      if (t.forced && !instantiates(y, c, 1)) continue;
      TraceAttempt a = attempt(y, c);
      if (t.forced) {
        t.rule = TraceRule::Precedent;
        t.attempts.push_back(std::move(a));
        return t;
      }
      for (const auto& cond : a.conditions) {
        if (cond.holds) continue;
        t.failure_witness += (t.failure_witness.empty() ? "" : "; ") + a.precedent + ": " +
                             cond.subject + " <- " + cond.subgoal.front().failure_witness;
        break;
      }
      t.attempts.push_back(std::move(a));
    }
    if (!any_candidate)
      t.failure_witness = "no precedent Y with " + claim_text(c, "Y");
    return t;
  }

  void set_situation_name(std::string name) { sit_ = std::move(name); }

 private:
  std::string claim_text(const BoundClaim& c, std::string_view who) const {
    const std::string v = h_.order(c.dimension).token(c.value);
    const std::string slot = std::string(who) + "(" + h_.name(c.dimension) + ")";
    return c.direction == BoundDirection::Lower ? v + " ⪯ " + slot : slot + " ⪯ " + v;
  }

  bool direct(const BoundClaim& c) const {
    const auto xv = x_[c.dimension];
    if (!xv) return false;
    const auto& order = h_.order(c.dimension);
    return c.direction == BoundDirection::Lower ? order.leq(c.value, *xv) : order.leq(*xv, c.value);
  }

  bool candidate(const DimCase& y, const BoundClaim& c) const {
    const auto& order = h_.order(c.dimension);
    const Value yv = *y.values[c.dimension];
    return c.direction == BoundDirection::Lower ? order.leq(c.value, yv) : order.leq(yv, c.value);
  }

  BoundClaim subclaim(const DimCase& y, std::size_t e, BoundDirection dir) const {
    return {e, *y.values[e], dir};
  }

  bool instantiates(const DimCase& y, const BoundClaim& c, std::size_t depth) {
    for (std::size_t e : h_.subordinates(c.dimension))
      if (!forced(subclaim(y, e, c.direction), depth + 1)) return false;
    return true;
  }

  TraceAttempt attempt(const DimCase& y, const BoundClaim& c) {
    TraceAttempt a{y.name, true, {}};
    for (std::size_t e : h_.subordinates(c.dimension)) {
      const BoundClaim sub = subclaim(y, e, c.direction);
      TraceCondition cond{ConditionKind::Dimension, h_.name(e), {}, forced(sub), {}};
      const std::string slot = y.name + "(" + h_.name(e) + ")";
      const std::string xs = sit_ + "(" + h_.name(e) + ")";
      cond.text = "requires " + cb_.label() + " ⊨ " +
                  (c.direction == BoundDirection::Lower ? slot + " ⪯ " + xs : xs + " ⪯ " + slot);
      cond.subgoal.push_back(trace(sub));
      a.succeeded = a.succeeded && cond.holds;
      a.conditions.push_back(std::move(cond));
    }
    return a;
  }

  const DimCaseBase& cb_;
  const DimensionHierarchy& h_;
  const DimSituation& x_;
  EvaluationStats* stats_;
  std::map<std::tuple<std::size_t, Value, bool>, bool> memo_;
  std::string sit_ = "X";
};

}  // namespace

bool dhrm_bound_verdict(const DimCaseBase& cb, const DimSituation& x, const BoundClaim& claim,
                        EvaluationStats* stats) {
  DhrmEvaluator eval(cb, x, stats);
  eval.check(claim);
  return eval.forced(claim);
}

ForcingResult dhrm_bound(const DimCaseBase& cb, const DimSituation& x, const BoundClaim& claim,
                         std::string_view situation) {
  DhrmEvaluator eval(cb, x, nullptr);
  eval.check(claim);
  eval.set_situation_name(std::string(situation));
  auto t = eval.trace(claim);
  const bool forced = t.forced;
  return {forced, std::move(t)};
}

BoundClaim outcome_claim(const DimensionHierarchy& h, Side side) {
  const std::size_t top = h.outcome();
  const auto& order = h.order(top);
  auto zero = order.parse("0");
  auto one = order.parse("1");
  const bool binary = order.bounded() && order.values().size() == 2 && zero && one &&
                      order.leq(*zero, *one) && !order.leq(*one, *zero);
  if (!binary)
    throw ModelError("outcome dimension '" + h.name(top) + "' must be binary {0, 1} with 0 ⪯ 1");
  return side == Side::Pi ? BoundClaim{top, *one, BoundDirection::Lower}
                          : BoundClaim{top, *zero, BoundDirection::Upper};
}

ForcingResult dhrm_forces_outcome(const DimCaseBase& cb, const DimSituation& x, Side side,
                                  std::string_view situation) {
  auto result = dhrm_bound(cb, x, outcome_claim(cb.hierarchy(), side), situation);
  return result;
}

bool dhrm_outcome_verdict(const DimCaseBase& cb, const DimSituation& x, Side side) {
  return dhrm_bound_verdict(cb, x, outcome_claim(cb.hierarchy(), side));
}

// ---------------------------------------------------------------------------

FlatDimCaseBase::FlatDimCaseBase(std::vector<std::string> dimensions, std::vector<ValueOrder> orders,
                                 std::vector<FlatDimCase> cases)
    : names_(std::move(dimensions)), orders_(std::move(orders)), cases_(std::move(cases)) {
  if (names_.size() != orders_.size()) throw Error("flat dimension case base needs one order per dimension");
  for (std::size_t d = 0; d < orders_.size(); ++d) {
    const auto report = orders_[d].validate(names_[d]);
    if (!report.ok()) throw InvalidHierarchyError(report.errors.front().message);
  }
  for (const auto& c : cases_) {
    if (c.values.size() != names_.size())
      throw IncompleteCaseError("case '" + c.name + "' does not match the dimension set");
    for (std::size_t d = 0; d < names_.size(); ++d) {
      if (!c.values.defined(d))
        throw IncompleteCaseError("case '" + c.name + "' not complete: missing " + names_[d]);
      if (!orders_[d].contains(*c.values[d]))
        throw ValueError("case '" + c.name + "' assigns a value outside dimension '" + names_[d] + "'");
    }
  }
}

FlatDimCaseBase FlatDimCaseBase::subset(std::span<const std::size_t> positions) const {
  std::vector<FlatDimCase> picked;
  for (std::size_t p : positions) picked.push_back(cases_.at(p));
  return FlatDimCaseBase(names_, orders_, std::move(picked));
}

std::string FlatDimCaseBase::label() const { return cases_.size() == 1 ? cases_.front().name : "CB"; }

namespace {

void check_flat_dim_situation(const FlatDimCaseBase& cb, const DimSituation& x) {
  if (x.size() != cb.dimension_count())
    throw UnknownNameError("fact situation has " + std::to_string(x.size()) +
                           " dimensions, the case base " + std::to_string(cb.dimension_count()));
  for (std::size_t d = 0; d < x.size(); ++d) {
    if (!x.defined(d))
      throw ModelError("the flat dimension model needs a complete situation; " + cb.dimension(d) +
                       " is undefined");
    if (!cb.order(d).contains(*x[d]))
      throw ValueError("value outside dimension '" + cb.dimension(d) + "'");
  }
}

bool dominated(const ValueOrder& order, Value y, Value x, Side side) {
  return side == Side::Pi ? order.leq(y, x) : order.leq(x, y);
}

}  // namespace

bool drm_verdict(const FlatDimCaseBase& cb, const DimSituation& x, Side side) {
  check_flat_dim_situation(cb, x);
  return std::ranges::any_of(cb.cases(), [&](const FlatDimCase& y) {
    if (y.outcome != side) return false;
    for (std::size_t d = 0; d < cb.dimension_count(); ++d)
      if (!dominated(cb.order(d), *y.values[d], *x[d], side)) return false;
    return true;
  });
}

ForcingResult drm_forces(const FlatDimCaseBase& cb, const DimSituation& x, Side side,
                         std::string_view situation) {
  const bool forced = drm_verdict(cb, x, side);
  const std::string sit(situation);
  DerivationTrace t;
  t.goal = std::string(to_string(side));
  t.statement = cb.label() + ", " + sit + " ⊨ " + t.goal;
  t.forced = forced;
  for (const auto& y : cb.cases()) {
    if (y.outcome != side) continue;
    TraceAttempt a{y.name, true, {}};
    std::string blocked;
    for (std::size_t d = 0; d < cb.dimension_count(); ++d) {
      const auto& order = cb.order(d);
      const std::string& name = cb.dimension(d);
      const std::string ys = y.name + "(" + name + ") = " + order.token(*y.values[d]);
      const std::string xs = sit + "(" + name + ") = " + order.token(*x[d]);
      TraceCondition c{ConditionKind::Dimension, name, side == Side::Pi ? ys + " ⪯ " + xs : xs + " ⪯ " + ys,
                       dominated(order, *y.values[d], *x[d], side), {}};
      if (!c.holds) {
        a.succeeded = false;
        blocked += (blocked.empty() ? "" : ", ") + name;
      }
      a.conditions.push_back(std::move(c));
    }
    if (forced) {
      if (!a.succeeded) continue;
      t.rule = TraceRule::Precedent;
      t.attempts.push_back(std::move(a));
      return {true, std::move(t)};
    }
    t.failure_witness += (t.failure_witness.empty() ? "" : "; ") + y.name + " blocked on " + blocked;
    t.attempts.push_back(std::move(a));
  }
  if (t.attempts.empty()) t.failure_witness = "no precedent decided for " + t.goal;
  return {false, std::move(t)};
}

}  // namespace precedent
