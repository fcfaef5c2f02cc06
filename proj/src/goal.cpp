#include "precedent/goal.hpp"

namespace precedent {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

template <typename Hierarchy>
std::optional<std::size_t> resolve(const Hierarchy& h, std::string_view name) {
  if (auto i = h.find(name)) return i;
  if (name == "pi") return h.outcome();
  return std::nullopt;
}

}  // namespace

std::optional<Side> parse_side(std::string_view text) {
  text = trim(text);
  if (text == "pi" || text == "π") return Side::Pi;
  if (text == "delta" || text == "δ") return Side::Delta;
  return std::nullopt;
}

Literal parse_literal(const FactorHierarchy& h, std::string_view text) {
  text = trim(text);
  if (auto i = h.find(text)) return {*i, false};
  if (text == "pi") return h.pi();
  if (text == "delta") return h.delta();
  bool negated = false;
  if (text.starts_with("!")) {
    text.remove_prefix(1);
    negated = true;
  } else if (text.starts_with("¬")) {
    text.remove_prefix(std::string_view("¬").size());
    negated = true;
  }
  text = trim(text);
  if (!negated || text.empty()) throw UnknownNameError("unknown factor '" + std::string(text) + "'");
  if (auto i = resolve(h, text)) return {*i, true};
  throw UnknownNameError("unknown factor '" + std::string(text) + "'");
}

std::string format_literal(const FactorHierarchy& h, Literal l) {
  return (l.negated ? "!" : "") + h.name(l.factor);
}

BoundClaim parse_bound(const DimensionHierarchy& h, std::string_view text) {
  text = trim(text);
  auto split = text.find("<=");
  std::size_t width = 2;
  if (split == std::string_view::npos) {
    split = text.find("⪯");
    width = std::string_view("⪯").size();
  }
  if (split == std::string_view::npos)
    throw UnknownNameError("bound claim '" + std::string(text) + "' needs the form v<=d or d<=v");
  const auto lhs = trim(text.substr(0, split));
  const auto rhs = trim(text.substr(split + width));
  // v<=d names the dimension on the right; prefer that reading when both parse.
  if (auto d = resolve(h, rhs)) {
    if (auto v = h.order(*d).parse(lhs)) return {*d, *v, BoundDirection::Lower};
  }
  if (auto d = resolve(h, lhs)) {
    if (auto v = h.order(*d).parse(rhs)) return {*d, *v, BoundDirection::Upper};
    throw ValueError("'" + std::string(rhs) + "' is not a value of dimension '" + h.name(*d) + "'");
  }
  if (auto d = resolve(h, rhs))
    throw ValueError("'" + std::string(lhs) + "' is not a value of dimension '" + h.name(*d) + "'");
  throw UnknownNameError("bound claim '" + std::string(text) + "' names no known dimension");
}

std::string format_bound(const DimensionHierarchy& h, const BoundClaim& c) {
  const std::string v = h.order(c.dimension).token(c.value);
  return c.direction == BoundDirection::Lower ? v + "<=" + h.name(c.dimension)
                                              : h.name(c.dimension) + "<=" + v;
}

}  // namespace precedent
