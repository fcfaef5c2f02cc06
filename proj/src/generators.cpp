#include "precedent/generators.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace precedent {

namespace {

std::vector<std::size_t> pick_parents(Rng& rng, std::size_t i, std::size_t max_parents) {
  const std::size_t want = 1 + rng.below(std::min(max_parents, i));
  std::vector<std::size_t> pool(i);
  for (std::size_t k = 0; k < i; ++k) pool[k] = k;
  for (std::size_t k = 0; k < want; ++k) std::swap(pool[k], pool[k + rng.below(i - k)]);
  pool.resize(want);
  return pool;
}

}  // namespace

FactorHierarchy random_factor_hierarchy(Rng& rng, std::size_t factors, std::size_t max_parents) {
  FactorHierarchy h;
  h.add_factor("pi");
  for (std::size_t i = 1; i < factors; ++i) {
    h.add_factor("f" + std::to_string(i));
    for (std::size_t p : pick_parents(rng, i, std::max<std::size_t>(1, max_parents)))
      h.add_edge(i, p, rng.percent(50) ? Polarity::Pro : Polarity::Con);
  }
  return h;
}

FactorHierarchy flat_factor_hierarchy(std::span<const Polarity> polarity) {
  FactorHierarchy h;
  h.add_factor("pi");
  for (std::size_t i = 0; i < polarity.size(); ++i) {
    h.add_factor("f" + std::to_string(i + 1));
    h.add_edge(i + 1, 0, polarity[i]);
  }
  return h;
}

FactSituation random_complete_situation(std::size_t factor_count, Rng& rng) {
  FactSituation f(factor_count);
  for (std::size_t i = 0; i < factor_count; ++i) f.set(i, rng.percent(50));
  return f;
}

FactSituation random_query_situation(const FactorHierarchy& h, Rng& rng, unsigned basic_percent,
                                     unsigned abstract_percent) {
  FactSituation f(h.size());
  for (std::size_t i = 0; i < h.size(); ++i)
    if (rng.percent(h.is_basic(i) ? basic_percent : abstract_percent)) f.set(i, rng.percent(50));
  return f;
}

FactorCaseBase random_factor_case_base(const FactorHierarchy& h, Rng& rng, std::size_t cases) {
  std::vector<FactorCase> out;
  for (std::size_t c = 0; c < cases; ++c)
    out.push_back({"C" + std::to_string(c + 1), random_complete_situation(h.size(), rng)});
  return FactorCaseBase(h, std::move(out));
}

Literal random_literal(const FactorHierarchy& h, Rng& rng) {
  return {rng.below(h.size()), rng.percent(50)};
}

namespace {

ValueOrder random_order(Rng& rng, std::int64_t cap) {
  std::vector<std::int64_t> numeric;
  for (std::int64_t v = 0; v <= cap; ++v) numeric.push_back(v);
  switch (rng.below(3)) {
    case 0: return ValueOrder::ascending(numeric);
    case 1: return ValueOrder::descending(numeric);
    default: break;
  }
  // Random DAG on tokens v0..vk oriented by index, so the closure is antisymmetric.
  std::vector<std::string> tokens;
  for (std::int64_t v = 0; v <= cap; ++v) tokens.push_back("v" + std::to_string(v));
  std::vector<std::pair<std::string, std::string>> leq;
  for (std::size_t i = 0; i < tokens.size(); ++i)
    for (std::size_t j = i + 1; j < tokens.size(); ++j)
      if (rng.percent(35)) leq.emplace_back(tokens[i], tokens[j]);
  return ValueOrder::explicit_order(std::move(tokens), std::move(leq));
}

}  // namespace

DimensionHierarchy random_dimension_hierarchy(Rng& rng, std::size_t dimensions, std::size_t max_parents,
                                              std::int64_t value_cap) {
  DimensionHierarchy h;
  h.add_dimension("pi", ValueOrder::ascending(std::vector<std::int64_t>{0, 1}));
  for (std::size_t i = 1; i < dimensions; ++i) {
    h.add_dimension("d" + std::to_string(i), random_order(rng, value_cap));
    for (std::size_t p : pick_parents(rng, i, std::max<std::size_t>(1, max_parents))) h.add_edge(i, p);
  }
  return h;
}

Value random_value(const ValueOrder& order, Rng& rng, std::int64_t value_cap) {
  if (!order.bounded()) return static_cast<Value>(rng.below(static_cast<std::size_t>(value_cap) + 1));
  const auto values = order.values();
  return values[rng.below(values.size())];
}

DimSituation random_dim_situation(const DimensionHierarchy& h, Rng& rng, unsigned basic_percent,
                                  unsigned abstract_percent, std::int64_t value_cap) {
  DimSituation x(h.size());
  for (std::size_t d = 0; d < h.size(); ++d)
    if (rng.percent(h.is_basic(d) ? basic_percent : abstract_percent))
      x.set(d, random_value(h.order(d), rng, value_cap));
  return x;
}

DimCaseBase random_dim_case_base(const DimensionHierarchy& h, Rng& rng, std::size_t cases,
                                 std::int64_t value_cap) {
  std::vector<DimCase> out;
  for (std::size_t c = 0; c < cases; ++c)
    out.push_back({"C" + std::to_string(c + 1), random_dim_situation(h, rng, 100, 100, value_cap)});
  return DimCaseBase(h, std::move(out));
}

BoundClaim random_claim(const DimensionHierarchy& h, Rng& rng, std::int64_t value_cap) {
  const std::size_t d = rng.below(h.size());
  return {d, random_value(h.order(d), rng, value_cap),
          rng.percent(50) ? BoundDirection::Lower : BoundDirection::Upper};
}

}  // namespace precedent
