#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "precedent/factor_models.hpp"
#include "precedent/hierarchy.hpp"
#include "precedent/trace.hpp"

namespace precedent {

/// Partial choice function: each defined dimension takes a value of its own
/// value set. Membership is checked by the case bases and evaluators.
class DimSituation {
 public:
  DimSituation() = default;
  explicit DimSituation(std::size_t dimension_count) : values_(dimension_count) {}

  std::size_t size() const { return values_.size(); }
  std::optional<Value> operator[](std::size_t d) const { return values_.at(d); }
  bool defined(std::size_t d) const { return values_.at(d).has_value(); }
  void set(std::size_t d, Value v) { values_.at(d) = v; }
  void unset(std::size_t d) { values_.at(d).reset(); }
  bool complete() const;

  friend bool operator==(const DimSituation&, const DimSituation&) = default;

 private:
  std::vector<std::optional<Value>> values_;
};

// Throws ValueError naming the first assigned value outside its dimension.
void check_choice_function(const DimensionHierarchy& h, const DimSituation& x);

std::string describe(const DimensionHierarchy& h, const DimSituation& x);

struct DimCase {
  std::string name;
  DimSituation values;

  friend bool operator==(const DimCase&, const DimCase&) = default;
};

class DimCaseBase {
 public:
  // Throws InvalidHierarchyError, IncompleteCaseError or ValueError.
  explicit DimCaseBase(DimensionHierarchy hierarchy, std::vector<DimCase> cases = {});

  const DimensionHierarchy& hierarchy() const { return hierarchy_; }
  std::span<const DimCase> cases() const { return cases_; }
  std::size_t size() const { return cases_.size(); }
  DimCaseBase subset(std::span<const std::size_t> positions) const;
  std::string label() const;
  std::size_t height(std::size_t d) const { return heights_.at(d); }

 private:
  DimensionHierarchy hierarchy_;
  std::vector<DimCase> cases_;
  std::vector<std::size_t> heights_;
};

enum class BoundDirection {
  Lower,  // v <= X(d)
  Upper,  // X(d) <= v
};

struct BoundClaim {
  std::size_t dimension = 0;
  Value value = 0;
  BoundDirection direction = BoundDirection::Lower;

  friend bool operator==(const BoundClaim&, const BoundClaim&) = default;
};

// Lower bound: v <= X(d) directly, or d is abstract and some precedent Y with
// v <= Y(d) has CB |= Y(e) <= X(e) for every subordinate e of d.
// Upper bound is the order dual: X(d) <= v directly, or some Y with
// Y(d) <= v has CB |= X(e) <= Y(e) for every subordinate e.
ForcingResult dhrm_bound(const DimCaseBase& cb, const DimSituation& x, const BoundClaim& claim,
                         std::string_view situation = "X");
bool dhrm_bound_verdict(const DimCaseBase& cb, const DimSituation& x, const BoundClaim& claim,
                        EvaluationStats* stats = nullptr);

// pi: 1 <= X(outcome); delta: X(outcome) <= 0. The outcome dimension must be
// the binary order {0, 1} with 0 <= 1 (ModelError otherwise).
ForcingResult dhrm_forces_outcome(const DimCaseBase& cb, const DimSituation& x, Side side,
                                  std::string_view situation = "X");
bool dhrm_outcome_verdict(const DimCaseBase& cb, const DimSituation& x, Side side);
BoundClaim outcome_claim(const DimensionHierarchy& h, Side side);

struct FlatDimCase {
  std::string name;
  DimSituation values;
  Side outcome = Side::Pi;

  friend bool operator==(const FlatDimCase&, const FlatDimCase&) = default;
};

class FlatDimCaseBase {
 public:
  FlatDimCaseBase(std::vector<std::string> dimensions, std::vector<ValueOrder> orders,
                  std::vector<FlatDimCase> cases = {});

  std::size_t dimension_count() const { return names_.size(); }
  const std::string& dimension(std::size_t d) const { return names_.at(d); }
  const ValueOrder& order(std::size_t d) const { return orders_.at(d); }
  std::span<const FlatDimCase> cases() const { return cases_; }
  std::size_t size() const { return cases_.size(); }
  FlatDimCaseBase subset(std::span<const std::size_t> positions) const;
  std::string label() const;

 private:
  std::vector<std::string> names_;
  std::vector<ValueOrder> orders_;
  std::vector<FlatDimCase> cases_;
};

// Flat dimension model: pi is forced by some (Y, pi) with Y(d) <= X(d) on every
// dimension, delta by some (Y, delta) with X(d) <= Y(d). X must be complete.
ForcingResult drm_forces(const FlatDimCaseBase& cb, const DimSituation& x, Side side,
                         std::string_view situation = "X");
bool drm_verdict(const FlatDimCaseBase& cb, const DimSituation& x, Side side);

}  // namespace precedent
