#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "precedent/dimension_models.hpp"
#include "precedent/factor_models.hpp"

namespace precedent {

struct CheckReport {
  std::string property;
  bool passed = true;
  std::uint64_t instances = 0;
  // First disagreement found, empty when passed.
  std::string counterexample;
};

struct CheckOptions {
  std::uint64_t seed = 20240917;
  // Random case bases drawn around the document, each queried several times.
  std::size_t samples = 2000;
  // Exhaustive parts are skipped beyond this many basic factors.
  std::size_t exhaustive_cap = 10;
};

// Main evaluators against the unmemoized references, over the document's
// case base, its singletons, the given queries, the enumerated query
// situations, and random case bases over the same hierarchy.
CheckReport check_oracle(const FactorCaseBase& cb, std::span<const FactSituation> queries,
                         const CheckOptions& options = {});
CheckReport check_oracle(const DimCaseBase& cb, std::span<const DimSituation> queries,
                         const CheckOptions& options = {});

// Hierarchical vs flat model on a hierarchy whose only abstract node is the
// outcome. Throws ModelError for other hierarchies.
CheckReport check_flat_reduction(const FactorCaseBase& cb, const CheckOptions& options = {});
CheckReport check_flat_reduction(const DimCaseBase& cb, const CheckOptions& options = {});

// rm_forces against drm_forces on the binary encoding, over the full truth
// table of the flat factors.
CheckReport check_encoding(const FlatCaseBase& cb, const CheckOptions& options = {});

}  // namespace precedent
