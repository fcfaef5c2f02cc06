#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>

#include "precedent/dimension_models.hpp"
#include "precedent/factor_models.hpp"

namespace precedent {

// Seeded source for randomized checks. Draws avoid the standard
// distributions so a seed reproduces across standard library vendors.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(next() % n); }
  // True with probability percent/100.
  bool percent(unsigned percent) { return below(100) < percent; }

 private:
  std::mt19937_64 engine_;
};

// Factor 0 is "pi"; factor i > 0 ("f<i>") gets between 1 and max_parents
// parents among factors 0..i-1 with random polarity.
FactorHierarchy random_factor_hierarchy(Rng& rng, std::size_t factors, std::size_t max_parents = 2);

// "pi" with `polarity.size()` basic children "f1".."fn".
FactorHierarchy flat_factor_hierarchy(std::span<const Polarity> polarity);

FactSituation random_complete_situation(std::size_t factor_count, Rng& rng);
// Basic factors defined with probability basic_percent, abstract ones with abstract_percent.
FactSituation random_query_situation(const FactorHierarchy& h, Rng& rng, unsigned basic_percent = 85,
                                     unsigned abstract_percent = 15);
FactorCaseBase random_factor_case_base(const FactorHierarchy& h, Rng& rng, std::size_t cases);
Literal random_literal(const FactorHierarchy& h, Rng& rng);

// Orders are ascending or descending numeric over 0..value_cap, or an
// explicit random poset on value_cap + 1 tokens. Outcome dimension "pi" is
// binary ascending.
DimensionHierarchy random_dimension_hierarchy(Rng& rng, std::size_t dimensions, std::size_t max_parents = 2,
                                              std::int64_t value_cap = 4);
// Value for dimension d: uniform over its value set, or over 0..value_cap when unbounded.
Value random_value(const ValueOrder& order, Rng& rng, std::int64_t value_cap = 4);
DimSituation random_dim_situation(const DimensionHierarchy& h, Rng& rng, unsigned basic_percent = 100,
                                  unsigned abstract_percent = 20, std::int64_t value_cap = 4);
DimCaseBase random_dim_case_base(const DimensionHierarchy& h, Rng& rng, std::size_t cases,
                                 std::int64_t value_cap = 4);
BoundClaim random_claim(const DimensionHierarchy& h, Rng& rng, std::int64_t value_cap = 4);

}  // namespace precedent
