#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <vector>

#include "precedent/dimension_models.hpp"
#include "precedent/factor_models.hpp"

namespace precedent {

// Unmemoized transcriptions of the hierarchical definitions. They read the
// hierarchy's raw edge list and share nothing with the main evaluators beyond
// satisfies() and ValueOrder::leq().
bool reference_hrm_forces(const FactorCaseBase& cb, const FactSituation& facts, Literal goal);
bool reference_dhrm_bound(const DimCaseBase& cb, const DimSituation& x, const BoundClaim& claim);

/// Every fact situation total on the basic factors and undefined on the
/// abstract ones, in binary counting order over the basic factors.
class QuerySituations {
 public:
  class iterator {
   public:
    using value_type = FactSituation;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    FactSituation operator*() const;
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++index_;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

   private:
    friend class QuerySituations;
    iterator(const QuerySituations* owner, std::uint64_t index) : owner_(owner), index_(index) {}
    const QuerySituations* owner_ = nullptr;
    std::uint64_t index_ = 0;
  };

  QuerySituations(std::size_t factor_count, std::vector<std::size_t> basic);

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, count()}; }
  std::uint64_t count() const { return std::uint64_t{1} << basic_.size(); }
  FactSituation at(std::uint64_t index) const;
  std::span<const std::size_t> basic() const { return basic_; }

 private:
  std::size_t factor_count_;
  std::vector<std::size_t> basic_;
};

// Throws CapExceededError when the hierarchy has more than `cap` basic factors.
QuerySituations enumerate_query_situations(const FactorHierarchy& h, std::size_t cap = 16);

struct ConsistencyReport {
  bool consistent = true;
  std::uint64_t checked = 0;
  std::uint64_t witness_count = 0;
  // Situations forced for both pi and delta, in enumeration order, capped.
  std::vector<FactSituation> witnesses;
};

ConsistencyReport check_consistency(const FactorCaseBase& cb, std::size_t cap = 16,
                                    std::size_t witness_cap = 16);

// Binary dimensions: pro factors get 0 <= 1, con factors 1 <= 0; t -> 1, f -> 0.
FlatDimCaseBase encode_factors_as_dimensions(const FlatCaseBase& cb);
DimSituation encode_situation(const FactSituation& facts);

struct FlatProjection {
  FlatCaseBase cb;
  // Hierarchy index of each flat factor.
  std::vector<std::size_t> factors;
};

struct FlatDimProjection {
  FlatDimCaseBase cb;
  std::vector<std::size_t> dimensions;
};

// Flat reading of a hierarchy in which the outcome is the only abstract
// node: the polarity of each edge into the outcome becomes the global
// Pro/Con partition and a case's outcome is its outcome value. Throws
// ModelError for other shapes.
FlatProjection flatten(const FactorCaseBase& cb);
FlatDimProjection flatten(const DimCaseBase& cb);

FactSituation project(const FactSituation& facts, std::span<const std::size_t> factors);
DimSituation project(const DimSituation& x, std::span<const std::size_t> dimensions);

}  // namespace precedent
