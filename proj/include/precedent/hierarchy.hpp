#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "precedent/errors.hpp"

namespace precedent {

struct Issue {
  std::string code;
  std::string message;

  friend bool operator==(const Issue&, const Issue&) = default;
};

// Validation never throws; every violated condition becomes an entry.
// Warnings are informational and do not make a report fail.
struct ValidationReport {
  std::vector<Issue> errors;
  std::vector<Issue> warnings;

  bool ok() const { return errors.empty(); }
  void error(std::string code, std::string message) {
    errors.push_back({std::move(code), std::move(message)});
  }
  void warn(std::string code, std::string message) {
    warnings.push_back({std::move(code), std::move(message)});
  }
  void merge(const ValidationReport& other) {
    errors.insert(errors.end(), other.errors.begin(), other.errors.end());
    warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
  }

  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

enum class Polarity { Pro, Con };

std::string_view to_string(Polarity p);

struct Literal {
  std::size_t factor = 0;
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

constexpr Literal negate(Literal l) { return {l.factor, !l.negated}; }

struct FactorEdge {
  std::size_t child = 0;
  std::size_t parent = 0;
  Polarity polarity = Polarity::Pro;

  friend bool operator==(const FactorEdge&, const FactorEdge&) = default;
};

struct Subordinates {
  std::vector<Literal> pro;
  std::vector<Literal> con;

  friend bool operator==(const Subordinates&, const Subordinates&) = default;
};

namespace detail {

// Name table plus child -> parent adjacency shared by both hierarchy kinds.
class NamedDag {
 public:
  std::size_t add_node(std::string name);
  void add_edge(std::size_t child, std::size_t parent);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const;
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;

  std::span<const std::size_t> parents(std::size_t i) const { return parents_.at(i); }
  std::span<const std::size_t> children(std::size_t i) const { return children_.at(i); }

  bool is_basic(std::size_t i) const { return children_.at(i).empty(); }
  std::vector<std::size_t> maximal() const;
  // One witness path per strongly connected component that contains a cycle,
  // written as a closed walk (first node repeated at the end).
  std::vector<std::vector<std::size_t>> cycles() const;
  // Pairs (child, parent) listed more than once, each reported once.
  std::vector<std::pair<std::size_t, std::size_t>> duplicate_edges() const;
  // Longest downward chain of subordinates; 0 for basic nodes. Requires acyclicity.
  std::vector<std::size_t> heights() const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> parents_;
  std::vector<std::vector<std::size_t>> children_;
};

std::string format_cycle(const NamedDag& dag, const std::vector<std::size_t>& cycle);

}  // namespace detail

/// Factors linked by Pro/Con edges that culminate in a single outcome factor.
///
/// The container accepts any edge set so that malformed hierarchies can be
/// reported by validate_factor_hierarchy(); evaluators require a valid one.
class FactorHierarchy {
 public:
  std::size_t add_factor(std::string name);
  void add_edge(std::size_t child, std::size_t parent, Polarity polarity);
  void add_edge(std::string_view child, std::string_view parent, Polarity polarity);

  std::size_t size() const { return dag_.size(); }
  const std::string& name(std::size_t factor) const { return dag_.name(factor); }
  std::optional<std::size_t> find(std::string_view name) const { return dag_.find(name); }
  std::size_t index_of(std::string_view name) const { return dag_.index_of(name); }
  std::span<const FactorEdge> edges() const { return edges_; }

  bool is_basic(std::size_t factor) const { return dag_.is_basic(factor); }
  bool is_abstract(std::size_t factor) const { return !is_basic(factor); }
  std::span<const std::size_t> pro_children(std::size_t factor) const { return pro_.at(factor); }
  std::span<const std::size_t> con_children(std::size_t factor) const { return con_.at(factor); }

  std::vector<std::size_t> maximal() const { return dag_.maximal(); }
  // Index of the unique maximal factor; throws InvalidHierarchyError otherwise.
  std::size_t outcome() const;
  Literal pi() const { return {outcome(), false}; }
  Literal delta() const { return {outcome(), true}; }

  std::size_t height(std::size_t factor) const;
  std::string to_string(Literal l) const;

  const detail::NamedDag& dag() const { return dag_; }

 private:
  detail::NamedDag dag_;
  std::vector<FactorEdge> edges_;
  std::vector<std::vector<std::size_t>> pro_;
  std::vector<std::vector<std::size_t>> con_;
};

ValidationReport validate_factor_hierarchy(const FactorHierarchy& h);

// Direct Pro/Con subordinates of a literal, with the two sets swapped under negation.
Subordinates subordinates(const FactorHierarchy& h, Literal l);

// Dimension values are int64: the integer itself for numeric orders, the
// position in the declared value list for explicit orders.
using Value = std::int64_t;

/// A partial order on the value set of one dimension.
class ValueOrder {
 public:
  enum class Kind { Explicit, Ascending, Descending };

  ValueOrder() = default;

  // The reflexive-transitive closure of `leq` is computed here; pairs naming
  // undeclared values and antisymmetry violations surface in validate().
  static ValueOrder explicit_order(std::vector<std::string> values,
                                   std::vector<std::pair<std::string, std::string>> leq);
  // Numeric orders over integers; without a value list every integer is admissible.
  static ValueOrder ascending(std::optional<std::vector<std::int64_t>> values = std::nullopt);
  static ValueOrder descending(std::optional<std::vector<std::int64_t>> values = std::nullopt);

  Kind kind() const { return kind_; }
  bool numeric() const { return kind_ != Kind::Explicit; }
  bool bounded() const { return kind_ == Kind::Explicit || numeric_values_.has_value(); }

  bool contains(Value v) const;
  std::optional<Value> parse(std::string_view token) const;
  Value value(std::string_view token) const;
  std::string token(Value v) const;
  // Finite value set in declaration order; throws ValueError when unbounded.
  std::vector<Value> values() const;

  bool leq(Value v, Value w) const;

  const std::vector<std::string>& explicit_tokens() const { return tokens_; }
  const std::optional<std::vector<std::int64_t>>& numeric_values() const { return numeric_values_; }
  const std::vector<std::pair<std::string, std::string>>& declared_leq() const { return declared_; }

  ValidationReport validate(std::string_view dimension_name = {}) const;

 private:
  Kind kind_ = Kind::Ascending;
  std::vector<std::string> tokens_;
  std::optional<std::vector<std::int64_t>> numeric_values_;
  std::vector<std::pair<std::string, std::string>> declared_;
  std::vector<char> closure_;
};

bool value_leq(const ValueOrder& order, std::string_view v, std::string_view w);

/// Dimensions with partially ordered value sets under a single outcome dimension.
/// Edges carry no polarity.
class DimensionHierarchy {
 public:
  std::size_t add_dimension(std::string name, ValueOrder order);
  void add_edge(std::size_t child, std::size_t parent);
  void add_edge(std::string_view child, std::string_view parent);

  std::size_t size() const { return dag_.size(); }
  const std::string& name(std::size_t d) const { return dag_.name(d); }
  std::optional<std::size_t> find(std::string_view name) const { return dag_.find(name); }
  std::size_t index_of(std::string_view name) const { return dag_.index_of(name); }
  const ValueOrder& order(std::size_t d) const { return orders_.at(d); }
  std::span<const std::pair<std::size_t, std::size_t>> edges() const { return edges_; }

  std::span<const std::size_t> subordinates(std::size_t d) const { return dag_.children(d); }
  bool is_basic(std::size_t d) const { return dag_.is_basic(d); }
  bool is_abstract(std::size_t d) const { return !is_basic(d); }

  std::vector<std::size_t> maximal() const { return dag_.maximal(); }
  std::size_t outcome() const;
  std::size_t height(std::size_t d) const;

  const detail::NamedDag& dag() const { return dag_; }

 private:
  detail::NamedDag dag_;
  std::vector<ValueOrder> orders_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

ValidationReport validate_dimension_hierarchy(const DimensionHierarchy& h);

}  // namespace precedent
