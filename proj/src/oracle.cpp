#include "precedent/oracle.hpp"

#include <algorithm>
#include <thread>

namespace precedent {

bool reference_hrm_forces(const FactorCaseBase& cb, const FactSituation& facts, Literal goal) {
  const auto& h = cb.hierarchy();
  if (facts.size() != h.size() || goal.factor >= h.size())
    throw UnknownNameError("situation or literal does not fit the hierarchy");
  if (satisfies(facts, goal)) return true;
  const auto edges = h.edges();
  const bool abstract = std::ranges::any_of(edges, [&](const FactorEdge& e) { return e.parent == goal.factor; });
  if (!abstract) return false;
  for (const auto& g : cb.cases()) {
    if (!satisfies(g.facts, goal)) continue;
    bool ok = true;
    for (const auto& e : edges) {
      if (e.parent != goal.factor) continue;
      const Literal q{e.child, false};
      const bool pro = (e.polarity == Polarity::Pro) != goal.negated;
      if (pro) {
        if (satisfies(g.facts, q) && !reference_hrm_forces(cb, facts, q)) ok = false;
      } else {
        if (reference_hrm_forces(cb, facts, q) && !satisfies(g.facts, q)) ok = false;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool reference_dhrm_bound(const DimCaseBase& cb, const DimSituation& x, const BoundClaim& claim) {
  const auto& h = cb.hierarchy();
  check_choice_function(h, x);
  if (claim.dimension >= h.size()) throw UnknownNameError("dimension index out of range");
  const auto& order = h.order(claim.dimension);
  if (!order.contains(claim.value)) throw ValueError("claim value outside its dimension");
  const bool lower = claim.direction == BoundDirection::Lower;
  if (x.defined(claim.dimension)) {
    const Value xv = *x[claim.dimension];
    if (lower ? order.leq(claim.value, xv) : order.leq(xv, claim.value)) return true;
  }
  const auto edges = h.edges();
  const bool abstract =
      std::ranges::any_of(edges, [&](const auto& e) { return e.second == claim.dimension; });
  if (!abstract) return false;
  for (const auto& y : cb.cases()) {
    const Value yv = *y.values[claim.dimension];
    if (!(lower ? order.leq(claim.value, yv) : order.leq(yv, claim.value))) continue;
    bool ok = true;
    for (const auto& [child, parent] : edges) {
      if (parent != claim.dimension) continue;
      if (!reference_dhrm_bound(cb, x, {child, *y.values[child], claim.direction})) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------

QuerySituations::QuerySituations(std::size_t factor_count, std::vector<std::size_t> basic)
    : factor_count_(factor_count), basic_(std::move(basic)) {}

FactSituation QuerySituations::at(std::uint64_t index) const {
  FactSituation f(factor_count_);
  for (std::size_t i = 0; i < basic_.size(); ++i) f.set(basic_[i], ((index >> i) & 1U) != 0);
  return f;
}

FactSituation QuerySituations::iterator::operator*() const { return owner_->at(index_); }

QuerySituations enumerate_query_situations(const FactorHierarchy& h, std::size_t cap) {
  std::vector<std::size_t> basic;
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h.is_basic(i)) basic.push_back(i);
  if (basic.size() > cap || basic.size() >= 63) throw CapExceededError(basic.size(), cap);
  return QuerySituations(h.size(), std::move(basic));
}

ConsistencyReport check_consistency(const FactorCaseBase& cb, std::size_t cap, std::size_t witness_cap) {
  const auto situations = enumerate_query_situations(cb.hierarchy(), cap);
  const Literal pi = cb.hierarchy().pi();
  const std::uint64_t total = situations.count();

  struct Partial {
    std::uint64_t count = 0;
    std::vector<std::uint64_t> first;
  };
  auto scan = [&](std::uint64_t from, std::uint64_t to, Partial& out) {
    for (std::uint64_t i = from; i < to; ++i) {
      const auto f = situations.at(i);
      if (hrm_verdict(cb, f, pi) && hrm_verdict(cb, f, negate(pi))) {
        ++out.count;
        if (out.first.size() < witness_cap) out.first.push_back(i);
      }
    }
  };

  // Chunks are merged in enumeration order, so the report does not depend on
  // the number of workers.
  const std::uint64_t workers =
      total < 4096 ? 1 : std::max<std::uint64_t>(1, std::min<std::uint64_t>(8, std::thread::hardware_concurrency()));
  std::vector<Partial> parts(workers);
  std::vector<std::thread> threads;
  const std::uint64_t chunk = (total + workers - 1) / workers;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t from = std::min(total, w * chunk), to = std::min(total, from + chunk);
    if (workers == 1)
      scan(from, to, parts[w]);
    else
      threads.emplace_back(scan, from, to, std::ref(parts[w]));
  }
  for (auto& t : threads) t.join();

  ConsistencyReport report;
  report.checked = total;
  for (const auto& p : parts) {
    report.witness_count += p.count;
    for (auto i : p.first)
      if (report.witnesses.size() < witness_cap) report.witnesses.push_back(situations.at(i));
  }
  report.consistent = report.witness_count == 0;
  return report;
}

// ---------------------------------------------------------------------------

FlatDimCaseBase encode_factors_as_dimensions(const FlatCaseBase& cb) {
  std::vector<std::string> names;
  std::vector<ValueOrder> orders;
  const std::vector<std::int64_t> binary{0, 1};
  for (std::size_t i = 0; i < cb.factor_count(); ++i) {
    names.push_back(cb.factor(i));
    orders.push_back(cb.polarity(i) == Polarity::Pro ? ValueOrder::ascending(binary)
                                                      : ValueOrder::descending(binary));
  }
  std::vector<FlatDimCase> cases;
  for (const auto& c : cb.cases()) cases.push_back({c.name, encode_situation(c.facts), c.outcome});
  return FlatDimCaseBase(std::move(names), std::move(orders), std::move(cases));
}

DimSituation encode_situation(const FactSituation& facts) {
  DimSituation x(facts.size());
  for (std::size_t i = 0; i < facts.size(); ++i)
    if (facts.defined(i)) x.set(i, *facts[i] ? 1 : 0);
  return x;
}

FactSituation project(const FactSituation& facts, std::span<const std::size_t> factors) {
  FactSituation out(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (auto v = facts[factors[i]]) out.set(i, *v);
  return out;
}

DimSituation project(const DimSituation& x, std::span<const std::size_t> dimensions) {
  DimSituation out(dimensions.size());
  for (std::size_t i = 0; i < dimensions.size(); ++i)
    if (auto v = x[dimensions[i]]) out.set(i, *v);
  return out;
}

FlatProjection flatten(const FactorCaseBase& cb) {
  const auto& h = cb.hierarchy();
  const std::size_t top = h.outcome();
  std::vector<std::string> names;
  std::vector<Polarity> polarity;
  std::vector<std::size_t> factors;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i == top) continue;
    if (h.is_abstract(i))
      throw ModelError("flat reading needs the outcome to be the only abstract factor; '" + h.name(i) +
                       "' is abstract");
    factors.push_back(i);
    names.push_back(h.name(i));
  }
  polarity.resize(factors.size(), Polarity::Pro);
  for (const auto& e : h.edges()) {
    auto it = std::ranges::find(factors, e.child);
    if (it != factors.end()) polarity[static_cast<std::size_t>(it - factors.begin())] = e.polarity;
  }
  std::vector<FlatCase> cases;
  for (const auto& c : cb.cases())
    cases.push_back({c.name, project(c.facts, factors), *c.facts[top] ? Side::Pi : Side::Delta});
  return {FlatCaseBase(std::move(names), std::move(polarity), std::move(cases)), std::move(factors)};
}

FlatDimProjection flatten(const DimCaseBase& cb) {
  const auto& h = cb.hierarchy();
  const std::size_t top = h.outcome();
  const BoundClaim pi = outcome_claim(h, Side::Pi);
  std::vector<std::string> names;
  std::vector<ValueOrder> orders;
  std::vector<std::size_t> dims;
  for (std::size_t d = 0; d < h.size(); ++d) {
    if (d == top) continue;
    if (h.is_abstract(d))
      throw ModelError("flat reading needs the outcome to be the only abstract dimension; '" + h.name(d) +
                       "' is abstract");
    dims.push_back(d);
    names.push_back(h.name(d));
    orders.push_back(h.order(d));
  }
  std::vector<FlatDimCase> cases;
  for (const auto& c : cb.cases())
    cases.push_back({c.name, project(c.values, dims), *c.values[top] == pi.value ? Side::Pi : Side::Delta});
  return {FlatDimCaseBase(std::move(names), std::move(orders), std::move(cases)), std::move(dims)};
}

}  // namespace precedent
