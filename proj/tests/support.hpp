#pragma once

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>

#include "precedent/casebase_io.hpp"
#include "precedent/dimension_models.hpp"
#include "precedent/factor_models.hpp"

namespace precedent::testing {

inline std::string fixture_path(const std::string& name) { return std::string(PRECEDENT_FIXTURES_DIR) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// The running example, built by hand rather than from a fixture:
//   pi <- Q+, R+;  Q <- P+, F3-;  P <- F1+, F2+;  R <- F4+, F5-, F6-
inline FactorHierarchy family_factors() {
  FactorHierarchy h;
  for (const char* n : {"pi", "Q", "R", "P", "F1", "F2", "F3", "F4", "F5", "F6"}) h.add_factor(n);
  h.add_edge("Q", "pi", Polarity::Pro);
  h.add_edge("R", "pi", Polarity::Pro);
  h.add_edge("P", "Q", Polarity::Pro);
  h.add_edge("F3", "Q", Polarity::Con);
  h.add_edge("F1", "P", Polarity::Pro);
  h.add_edge("F2", "P", Polarity::Pro);
  h.add_edge("F4", "R", Polarity::Pro);
  h.add_edge("F5", "R", Polarity::Con);
  h.add_edge("F6", "R", Polarity::Con);
  return h;
}

inline FactSituation facts(const FactorHierarchy& h, std::initializer_list<const char*> yes,
                           std::initializer_list<const char*> no) {
  FactSituation f(h.size());
  for (const char* n : yes) f.set(h.index_of(n), true);
  for (const char* n : no) f.set(h.index_of(n), false);
  return f;
}

inline FactSituation case_m(const FactorHierarchy& h) {
  return facts(h, {"F1", "F5", "P", "Q", "pi"}, {"F2", "F3", "F4", "F6", "R"});
}
inline FactSituation case_m_prime(const FactorHierarchy& h) {
  return facts(h, {"F1", "F4", "F5", "P", "Q", "R", "pi"}, {"F2", "F3", "F6"});
}
inline FactSituation case_m_double_prime(const FactorHierarchy& h) {
  return facts(h, {"F1", "P", "Q", "pi"}, {"F2", "F3", "F4", "F5", "F6", "R"});
}
inline FactSituation query_e(const FactorHierarchy& h) { return facts(h, {"F2", "F6"}, {"F1", "F3", "F4", "F5"}); }
inline FactSituation query_e_prime(const FactorHierarchy& h) {
  return facts(h, {"F2", "F4", "F6"}, {"F1", "F3", "F5"});
}
inline FactSituation query_e_double_prime(const FactorHierarchy& h) {
  return facts(h, {"F2"}, {"F1", "F3", "F4", "F5", "F6"});
}

inline FactorCaseBase single(const FactorHierarchy& h, const char* name, FactSituation f) {
  return FactorCaseBase(h, {{name, std::move(f)}});
}

inline Literal lit(const FactorHierarchy& h, const char* name, bool negated = false) {
  return {h.index_of(name), negated};
}

// The same shape as dimensions: binary basics (F3, F5, F6 reversed), naturals above.
inline DimensionHierarchy family_dimensions() {
  DimensionHierarchy h;
  h.add_dimension("pi", ValueOrder::ascending(std::vector<std::int64_t>{0, 1}));
  for (const char* n : {"Q", "R", "P"}) h.add_dimension(n, ValueOrder::ascending());
  for (const char* n : {"F1", "F2", "F4"}) h.add_dimension(n, ValueOrder::ascending(std::vector<std::int64_t>{0, 1}));
  for (const char* n : {"F3", "F5", "F6"})
    h.add_dimension(n, ValueOrder::descending(std::vector<std::int64_t>{0, 1}));
  for (auto [c, p] : {std::pair{"Q", "pi"}, {"R", "pi"}, {"P", "Q"}, {"F3", "Q"}, {"F1", "P"}, {"F2", "P"},
                      {"F4", "R"}, {"F5", "R"}, {"F6", "R"}})
    h.add_edge(c, p);
  return h;
}

inline DimSituation values(const DimensionHierarchy& h, std::initializer_list<std::pair<const char*, Value>> vs) {
  DimSituation x(h.size());
  for (auto [n, v] : vs) x.set(h.index_of(n), v);
  return x;
}

inline DimSituation dim_m(const DimensionHierarchy& h) {
  return values(h, {{"F1", 1}, {"F2", 0}, {"F3", 0}, {"F4", 0}, {"F5", 1}, {"F6", 0},
                    {"P", 2}, {"Q", 2}, {"R", 3}, {"pi", 1}});
}
inline DimSituation dim_e(const DimensionHierarchy& h) {
  return values(h, {{"F1", 0}, {"F2", 1}, {"F3", 0}, {"F4", 0}, {"F5", 0}, {"F6", 1}, {"P", 3}, {"Q", 3}});
}
inline DimSituation dim_e_prime(const DimensionHierarchy& h) {
  auto x = dim_e(h);
  x.set(h.index_of("F5"), 1);
  x.set(h.index_of("F6"), 0);
  return x;
}

inline BoundClaim lower(const DimensionHierarchy& h, Value v, const char* d) {
  return {h.index_of(d), v, BoundDirection::Lower};
}

}  // namespace precedent::testing
