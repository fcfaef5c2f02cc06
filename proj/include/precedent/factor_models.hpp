#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "precedent/hierarchy.hpp"
#include "precedent/trace.hpp"

namespace precedent {

enum class Side { Pi, Delta };

std::string_view to_string(Side s);
constexpr Side opposite(Side s) { return s == Side::Pi ? Side::Delta : Side::Pi; }

/// Partial assignment of truth values to factors, indexed like the hierarchy.
class FactSituation {
 public:
  FactSituation() = default;
  explicit FactSituation(std::size_t factor_count) : values_(factor_count) {}

  std::size_t size() const { return values_.size(); }
  std::optional<bool> operator[](std::size_t factor) const { return values_.at(factor); }
  bool defined(std::size_t factor) const { return values_.at(factor).has_value(); }
  void set(std::size_t factor, bool value) { values_.at(factor) = value; }
  void unset(std::size_t factor) { values_.at(factor).reset(); }
  bool complete() const;

  friend bool operator==(const FactSituation&, const FactSituation&) = default;

 private:
  std::vector<std::optional<bool>> values_;
};

// F |= p iff F(p) = t, F |= !p iff F(p) = f; an undefined factor satisfies neither.
bool satisfies(const FactSituation& facts, Literal l);

std::string describe(const FactorHierarchy& h, const FactSituation& facts);

struct FactorCase {
  std::string name;
  FactSituation facts;

  friend bool operator==(const FactorCase&, const FactorCase&) = default;
};

/// Precedents over a validated factor hierarchy. A case is a complete fact
/// situation; its outcome is its value on the outcome factor.
class FactorCaseBase {
 public:
  // Throws InvalidHierarchyError or IncompleteCaseError.
  explicit FactorCaseBase(FactorHierarchy hierarchy, std::vector<FactorCase> cases = {});

  const FactorHierarchy& hierarchy() const { return hierarchy_; }
  std::span<const FactorCase> cases() const { return cases_; }
  std::size_t size() const { return cases_.size(); }
  // Case base restricted to the given case positions, in the given order.
  FactorCaseBase subset(std::span<const std::size_t> positions) const;
  // Name used in rendered statements: the case name for a singleton, else "CB".
  std::string label() const;
  // Longest chain of subordinates below the factor (0 for basic factors).
  std::size_t height(std::size_t factor) const { return heights_.at(factor); }

 private:
  FactorHierarchy hierarchy_;
  std::vector<FactorCase> cases_;
  std::vector<std::size_t> heights_;
};

struct FlatCase {
  std::string name;
  FactSituation facts;
  Side outcome = Side::Pi;

  friend bool operator==(const FlatCase&, const FlatCase&) = default;
};

/// Flat setting: factors globally partitioned into Pro (supporting pi) and
/// Con (supporting delta), precedents carrying an explicit outcome.
class FlatCaseBase {
 public:
  FlatCaseBase(std::vector<std::string> factors, std::vector<Polarity> polarity,
               std::vector<FlatCase> cases = {});

  std::size_t factor_count() const { return factors_.size(); }
  const std::string& factor(std::size_t i) const { return factors_.at(i); }
  Polarity polarity(std::size_t i) const { return polarity_.at(i); }
  std::span<const FlatCase> cases() const { return cases_; }
  std::size_t size() const { return cases_.size(); }
  FlatCaseBase subset(std::span<const std::size_t> positions) const;
  std::string label() const;

 private:
  std::vector<std::string> factors_;
  std::vector<Polarity> polarity_;
  std::vector<FlatCase> cases_;
};

struct ForcingResult {
  bool forced = false;
  DerivationTrace trace;
};

struct EvaluationStats {
  std::size_t evaluations = 0;
  std::size_t max_depth = 0;
};

// Flat result model: some precedent (G, s) has every Pro(s) factor of G in F
// and every Con(s) factor of F in G.
ForcingResult rm_forces(const FlatCaseBase& cb, const FactSituation& facts, Side side,
                        std::string_view situation = "F");
bool rm_verdict(const FlatCaseBase& cb, const FactSituation& facts, Side side);

// Hierarchical result model: F |= l directly, or l is abstract and some
// precedent G |= l has
//   - every Pro(l) subordinate q with G |= q forced in F, and
//   - every Con(l) subordinate q forced in F present in G.
// Subgoals are memoized per query. Throws UnknownNameError when F or l does
// not fit the hierarchy.
ForcingResult hrm_forces(const FactorCaseBase& cb, const FactSituation& facts, Literal goal,
                         std::string_view situation = "F");
bool hrm_verdict(const FactorCaseBase& cb, const FactSituation& facts, Literal goal,
                 EvaluationStats* stats = nullptr);

}  // namespace precedent
