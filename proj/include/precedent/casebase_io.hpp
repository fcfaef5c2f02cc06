#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "precedent/dimension_models.hpp"
#include "precedent/factor_models.hpp"
#include "precedent/hierarchy.hpp"

namespace precedent {

// Case-base documents are JSON:
//
//   { "model": "factor" | "dimension",
//     "hierarchy": { "factors": [...] | "dimensions": [...], "edges": [...] },
//     "flat": { "pro": [...], "con": [...] },          (factor model, optional)
//     "cases":   [ { "name": ..., "facts" | "values": {...}, "outcome": "pi" | "delta" } ],
//     "queries": [ ... same shape, outcome not allowed ... ] }
//
// A factor or dimension absent from "facts"/"values" is undefined.

struct FactorEdgeSpec {
  std::string child;
  std::string parent;
  Polarity polarity = Polarity::Pro;

  friend bool operator==(const FactorEdgeSpec&, const FactorEdgeSpec&) = default;
};

struct FlatSpec {
  std::vector<std::string> pro;
  std::vector<std::string> con;

  friend bool operator==(const FlatSpec&, const FlatSpec&) = default;
};

struct NamedFacts {
  std::string name;
  std::map<std::string, bool> facts;
  std::optional<Side> outcome;

  friend bool operator==(const NamedFacts&, const NamedFacts&) = default;
};

struct FactorDocument {
  std::vector<std::string> factors;
  std::vector<FactorEdgeSpec> edges;
  std::optional<FlatSpec> flat;
  std::vector<NamedFacts> cases;
  std::vector<NamedFacts> queries;

  friend bool operator==(const FactorDocument&, const FactorDocument&) = default;
};

struct DimensionSpec {
  std::string name;
  ValueOrder::Kind kind = ValueOrder::Kind::Ascending;
  // Numeric orders: decimal tokens, empty with `bounded == false` for all integers.
  std::vector<std::string> values;
  bool bounded = true;
  std::vector<std::pair<std::string, std::string>> leq;

  friend bool operator==(const DimensionSpec&, const DimensionSpec&) = default;
};

struct DimEdgeSpec {
  std::string child;
  std::string parent;

  friend bool operator==(const DimEdgeSpec&, const DimEdgeSpec&) = default;
};

struct NamedValues {
  std::string name;
  std::map<std::string, std::string> values;
  std::optional<Side> outcome;

  friend bool operator==(const NamedValues&, const NamedValues&) = default;
};

struct DimensionDocument {
  std::vector<DimensionSpec> dimensions;
  std::vector<DimEdgeSpec> edges;
  std::vector<NamedValues> cases;
  std::vector<NamedValues> queries;

  friend bool operator==(const DimensionDocument&, const DimensionDocument&) = default;
};

using CaseBaseDocument = std::variant<FactorDocument, DimensionDocument>;

class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t line, std::size_t column, std::string field)
      : Error(locate(message, line, column, field)),
        line_(line),
        column_(column),
        field_(std::move(field)) {}

  // 1-based; 0 when the error is structural rather than syntactic.
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  // JSON-pointer-like path of the offending field, empty for syntax errors.
  const std::string& field() const { return field_; }

 private:
  static std::string locate(const std::string& m, std::size_t line, std::size_t column,
                            const std::string& field) {
    if (line > 0) return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + m;
    if (!field.empty()) return field + ": " + m;
    return m;
  }
  std::size_t line_;
  std::size_t column_;
  std::string field_;
};

// Syntax and document shape only; throws ParseError.
CaseBaseDocument parse_casebase(std::string_view text);

// Every semantic violation: hierarchy validity, undeclared names, case
// completeness, value membership, flat partition.
ValidationReport validate_document(const CaseBaseDocument& doc);

// Canonical form: sorted keys, declaration order for arrays, two-space
// indentation, LF line endings, trailing newline. Throws Error on an invalid
// document.
std::string serialize_casebase(const CaseBaseDocument& doc);

// Model construction from a validated document.
FactorHierarchy build_hierarchy(const FactorDocument& doc);
DimensionHierarchy build_hierarchy(const DimensionDocument& doc);
FactSituation build_situation(const FactorHierarchy& h, const NamedFacts& facts);
DimSituation build_situation(const DimensionHierarchy& h, const NamedValues& values);

// Case base from the named cases (all cases when `names` is empty), in the
// given order. Throws UnknownNameError for a name that is not a case.
FactorCaseBase build_case_base(const FactorDocument& doc, const std::vector<std::string>& names = {});
DimCaseBase build_case_base(const DimensionDocument& doc, const std::vector<std::string>& names = {});

// Flat readings. The factor version uses the "flat" section, or the edges into
// the outcome when it is the only abstract factor; outcomes come from the
// "outcome" field or the case's outcome value. Throws ModelError.
struct FlatFactorView {
  FlatCaseBase cb;
  std::vector<std::size_t> factors;
};
FlatFactorView build_flat_case_base(const FactorDocument& doc, const std::vector<std::string>& names = {});

struct FlatDimensionView {
  FlatDimCaseBase cb;
  std::vector<std::size_t> dimensions;
};
FlatDimensionView build_flat_case_base(const DimensionDocument& doc, const std::vector<std::string>& names = {});

// Looks a situation up among the queries, then among the cases.
const NamedFacts* find_situation(const FactorDocument& doc, std::string_view name);
const NamedValues* find_situation(const DimensionDocument& doc, std::string_view name);

}  // namespace precedent
