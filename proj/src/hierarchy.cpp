#include "precedent/hierarchy.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <set>

namespace precedent {

std::string_view to_string(Polarity p) { return p == Polarity::Pro ? "pro" : "con"; }

namespace detail {

std::size_t NamedDag::add_node(std::string name) {
  if (name.empty()) throw Error("empty name");
  if (index_.contains(name)) throw Error("duplicate name '" + name + "'");
  const std::size_t i = names_.size();
  index_.emplace(name, i);
  names_.push_back(std::move(name));
  parents_.emplace_back();
  children_.emplace_back();
  return i;
}

void NamedDag::add_edge(std::size_t child, std::size_t parent) {
  if (child >= size() || parent >= size()) throw UnknownNameError("edge endpoint out of range");
  parents_[child].push_back(parent);
  children_[parent].push_back(child);
}

const std::string& NamedDag::name(std::size_t i) const {
  if (i >= size()) throw UnknownNameError("index " + std::to_string(i) + " out of range");
  return names_[i];
}

std::optional<std::size_t> NamedDag::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t NamedDag::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw UnknownNameError("unknown name '" + std::string(name) + "'");
}

std::vector<std::size_t> NamedDag::maximal() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (parents_[i].empty()) out.push_back(i);
  return out;
}

std::vector<std::vector<std::size_t>> NamedDag::cycles() const {
  // Tarjan's SCC, iterative to stay safe on deep inputs.
  const std::size_t n = size();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unvisited), low(n, 0), component(n, unvisited);
  std::vector<char> on_stack(n, 0);
  std::vector<std::size_t> stack;
  std::size_t counter = 0, components = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    std::vector<std::pair<std::size_t, std::size_t>> work{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!work.empty()) {
      auto& [v, next] = work.back();
      if (next < parents_[v].size()) {
        const std::size_t w = parents_[v][next++];
        if (index[w] == unvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          work.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const std::size_t done = v;
      work.pop_back();
      if (!work.empty()) low[work.back().first] = std::min(low[work.back().first], low[done]);
      if (low[done] == index[done]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          component[w] = components;
        } while (w != done);
        ++components;
      }
    }
  }

  std::vector<std::vector<std::size_t>> members(components);
  for (std::size_t v = 0; v < n; ++v) members[component[v]].push_back(v);

  std::vector<std::vector<std::size_t>> out;
  for (const auto& scc : members) {
    const std::size_t start = scc.front();
    const bool self_loop = std::ranges::find(parents_[start], start) != parents_[start].end();
    if (scc.size() == 1 && !self_loop) continue;
    if (self_loop) {
      out.push_back({start, start});
      continue;
    }
    // BFS inside the component for a shortest closed walk through `start`.
    std::vector<std::size_t> prev(n, unvisited);
    std::vector<std::size_t> queue{start};
    std::size_t last = unvisited;
    for (std::size_t head = 0; head < queue.size() && last == unvisited; ++head) {
      const std::size_t v = queue[head];
      for (std::size_t w : parents_[v]) {
        if (component[w] != component[start]) continue;
        if (w == start) {
          last = v;
          break;
        }
        if (prev[w] == unvisited) {
          prev[w] = v;
          queue.push_back(w);
        }
      }
    }
    std::vector<std::size_t> path{start};
    for (std::size_t v = last; v != start; v = prev[v]) path.push_back(v);
    std::reverse(path.begin() + 1, path.end());
    path.push_back(start);
    out.push_back(std::move(path));
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> NamedDag::duplicate_edges() const {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> counts;
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (std::size_t c = 0; c < size(); ++c)
    for (std::size_t p : parents_[c])
      if (++counts[{c, p}] == 2) order.emplace_back(c, p);
  return order;
}

std::vector<std::size_t> NamedDag::heights() const {
  const std::size_t n = size();
  std::vector<std::size_t> h(n, 0);
  std::vector<char> state(n, 0);
  std::function<std::size_t(std::size_t)> visit = [&](std::size_t v) -> std::size_t {
    if (state[v] == 2) return h[v];
    if (state[v] == 1) throw InvalidHierarchyError("hierarchy contains a cycle through '" + names_[v] + "'");
    state[v] = 1;
    std::size_t best = 0;
    for (std::size_t c : children_[v]) best = std::max(best, visit(c) + 1);
    state[v] = 2;
    return h[v] = best;
  };
  for (std::size_t v = 0; v < n; ++v) visit(v);
  return h;
}

std::string format_cycle(const NamedDag& dag, const std::vector<std::size_t>& cycle) {
  std::string out;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i) out += " -> ";
    out += dag.name(cycle[i]);
  }
  return out;
}

namespace {

void validate_dag(const NamedDag& dag, std::string_view kind, ValidationReport& report) {
  for (const auto& cycle : dag.cycles())
    report.error("cycle", "cycle in " + std::string(kind) + " hierarchy: " + format_cycle(dag, cycle));
  const auto top = dag.maximal();
  if (top.empty()) {
    report.error("maximal", "no maximal " + std::string(kind) + " (every " + std::string(kind) +
                                " has a parent)");
  } else if (top.size() > 1) {
    std::string names;
    for (std::size_t i : top) names += (names.empty() ? "" : ", ") + dag.name(i);
    report.error("maximal", std::to_string(top.size()) + " maximal " + std::string(kind) +
                                "s, expected exactly one: " + names);
  }
}

}  // namespace
}  // namespace detail

std::size_t FactorHierarchy::add_factor(std::string name) {
  const std::size_t i = dag_.add_node(std::move(name));
  pro_.emplace_back();
  con_.emplace_back();
  return i;
}

void FactorHierarchy::add_edge(std::size_t child, std::size_t parent, Polarity polarity) {
  dag_.add_edge(child, parent);
  edges_.push_back({child, parent, polarity});
  (polarity == Polarity::Pro ? pro_ : con_)[parent].push_back(child);
}

void FactorHierarchy::add_edge(std::string_view child, std::string_view parent, Polarity polarity) {
  add_edge(index_of(child), index_of(parent), polarity);
}

std::size_t FactorHierarchy::outcome() const {
  const auto top = maximal();
  if (top.size() != 1)
    throw InvalidHierarchyError("factor hierarchy has " + std::to_string(top.size()) +
                                " maximal factors");
  return top.front();
}

std::size_t FactorHierarchy::height(std::size_t factor) const { return dag_.heights().at(factor); }

std::string FactorHierarchy::to_string(Literal l) const {
  return (l.negated ? "¬" : "") + name(l.factor);
}

ValidationReport validate_factor_hierarchy(const FactorHierarchy& h) {
  ValidationReport report;
  detail::validate_dag(h.dag(), "factor", report);
  for (auto [child, parent] : h.dag().duplicate_edges()) {
    std::set<Polarity> seen;
    for (const auto& e : h.edges())
      if (e.child == child && e.parent == parent) seen.insert(e.polarity);
    const std::string edge = h.name(child) + " -> " + h.name(parent);
    if (seen.size() > 1)
      report.error("duplicate-edge", "edge " + edge + " is labelled both pro and con");
    else
      report.error("duplicate-edge", "edge " + edge + " is declared more than once");
  }
  return report;
}

Subordinates subordinates(const FactorHierarchy& h, Literal l) {
  if (l.factor >= h.size()) throw UnknownNameError("factor index out of range");
  Subordinates out;
  for (std::size_t q : h.pro_children(l.factor)) out.pro.push_back({q, false});
  for (std::size_t q : h.con_children(l.factor)) out.con.push_back({q, false});
  if (l.negated) std::swap(out.pro, out.con);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::optional<std::int64_t> parse_int(std::string_view token) {
  std::int64_t v = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last) return std::nullopt;
  return v;
}

}  // namespace

ValueOrder ValueOrder::explicit_order(std::vector<std::string> values,
                                      std::vector<std::pair<std::string, std::string>> leq) {
  ValueOrder o;
  o.kind_ = Kind::Explicit;
  o.tokens_ = std::move(values);
  o.declared_ = std::move(leq);
  const std::size_t n = o.tokens_.size();
  o.closure_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) o.closure_[i * n + i] = 1;
  for (const auto& [a, b] : o.declared_) {
    auto ia = o.parse(a), ib = o.parse(b);
    if (ia && ib) o.closure_[static_cast<std::size_t>(*ia) * n + static_cast<std::size_t>(*ib)] = 1;
  }
  // Warshall
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (o.closure_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (o.closure_[k * n + j]) o.closure_[i * n + j] = 1;
  return o;
}

ValueOrder ValueOrder::ascending(std::optional<std::vector<std::int64_t>> values) {
  ValueOrder o;
  o.kind_ = Kind::Ascending;
  o.numeric_values_ = std::move(values);
  return o;
}

ValueOrder ValueOrder::descending(std::optional<std::vector<std::int64_t>> values) {
  ValueOrder o = ascending(std::move(values));
  o.kind_ = Kind::Descending;
  return o;
}

bool ValueOrder::contains(Value v) const {
  if (kind_ == Kind::Explicit) return v >= 0 && static_cast<std::size_t>(v) < tokens_.size();
  if (!numeric_values_) return true;
  return std::ranges::find(*numeric_values_, v) != numeric_values_->end();
}

std::optional<Value> ValueOrder::parse(std::string_view token) const {
  if (kind_ == Kind::Explicit) {
    auto it = std::ranges::find(tokens_, token);
    if (it == tokens_.end()) return std::nullopt;
    return static_cast<Value>(it - tokens_.begin());
  }
  auto v = parse_int(token);
  if (!v || !contains(*v)) return std::nullopt;
  return v;
}

Value ValueOrder::value(std::string_view token) const {
  if (auto v = parse(token)) return *v;
  throw ValueError("value '" + std::string(token) + "' is not in the value set");
}

std::string ValueOrder::token(Value v) const {
  if (!contains(v)) throw ValueError("value " + std::to_string(v) + " is not in the value set");
  if (kind_ == Kind::Explicit) return tokens_[static_cast<std::size_t>(v)];
  return std::to_string(v);
}

std::vector<Value> ValueOrder::values() const {
  if (kind_ == Kind::Explicit) {
    std::vector<Value> out(tokens_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Value>(i);
    return out;
  }
  if (!numeric_values_) throw ValueError("unbounded numeric dimension has no finite value set");
  return *numeric_values_;
}

bool ValueOrder::leq(Value v, Value w) const {
  if (!contains(v) || !contains(w))
    throw ValueError("value outside the value set in comparison " + std::to_string(v) + " <= " +
                     std::to_string(w));
  switch (kind_) {
    case Kind::Ascending: return v <= w;
    case Kind::Descending: return v >= w;
    case Kind::Explicit: break;
  }
  const std::size_t n = tokens_.size();
  return closure_[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(w)] != 0;
}

ValidationReport ValueOrder::validate(std::string_view dimension_name) const {
  ValidationReport report;
  const std::string where = dimension_name.empty() ? std::string("value order")
                                                   : "dimension '" + std::string(dimension_name) + "'";
  if (kind_ != Kind::Explicit) {
    if (numeric_values_) {
      if (numeric_values_->empty()) report.error("empty-values", where + " has an empty value set");
      std::set<std::int64_t> seen;
      for (auto v : *numeric_values_)
        if (!seen.insert(v).second)
          report.error("duplicate-value", where + " lists value " + std::to_string(v) + " twice");
    }
    return report;
  }
  if (tokens_.empty()) report.error("empty-values", where + " has an empty value set");
  std::set<std::string> seen;
  for (const auto& t : tokens_)
    if (!seen.insert(t).second) report.error("duplicate-value", where + " lists value '" + t + "' twice");
  for (const auto& [a, b] : declared_) {
    if (!parse(a)) report.error("unknown-value", where + " orders undeclared value '" + a + "'");
    if (!parse(b)) report.error("unknown-value", where + " orders undeclared value '" + b + "'");
  }
  const std::size_t n = tokens_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (closure_[i * n + j] && closure_[j * n + i])
        report.error("antisymmetry", where + " is not antisymmetric: '" + tokens_[i] + "' <= '" +
                                         tokens_[j] + "' and '" + tokens_[j] + "' <= '" + tokens_[i] +
                                         "'");
  return report;
}

bool value_leq(const ValueOrder& order, std::string_view v, std::string_view w) {
  return order.leq(order.value(v), order.value(w));
}

// ---------------------------------------------------------------------------

std::size_t DimensionHierarchy::add_dimension(std::string name, ValueOrder order) {
  const std::size_t i = dag_.add_node(std::move(name));
  orders_.push_back(std::move(order));
  return i;
}

void DimensionHierarchy::add_edge(std::size_t child, std::size_t parent) {
  dag_.add_edge(child, parent);
  edges_.emplace_back(child, parent);
}

void DimensionHierarchy::add_edge(std::string_view child, std::string_view parent) {
  add_edge(index_of(child), index_of(parent));
}

std::size_t DimensionHierarchy::outcome() const {
  const auto top = maximal();
  if (top.size() != 1)
    throw InvalidHierarchyError("dimension hierarchy has " + std::to_string(top.size()) +
                                " maximal dimensions");
  return top.front();
}

std::size_t DimensionHierarchy::height(std::size_t d) const { return dag_.heights().at(d); }

ValidationReport validate_dimension_hierarchy(const DimensionHierarchy& h) {
  ValidationReport report;
  detail::validate_dag(h.dag(), "dimension", report);
  for (auto [child, parent] : h.dag().duplicate_edges())
    report.error("duplicate-edge",
                 "edge " + h.name(child) + " -> " + h.name(parent) + " is declared more than once");
  for (std::size_t d = 0; d < h.size(); ++d) report.merge(h.order(d).validate(h.name(d)));
  return report;
}

}  // namespace precedent
