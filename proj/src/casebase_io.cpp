#include "precedent/casebase_io.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include <json.hpp>

namespace precedent {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Shape checking

[[noreturn]] void shape_error(const std::string& path, const std::string& message) {
  throw ParseError(message, 0, 0, path.empty() ? "/" : path);
}

const json& require(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) shape_error(path, std::string("missing key \"") + key + "\"");
  return *it;
}

void only_keys(const json& obj, std::initializer_list<const char*> keys, const std::string& path) {
  if (!obj.is_object()) shape_error(path, "expected an object");
  for (const auto& [k, v] : obj.items()) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* allowed) { return k == allowed; }))
      shape_error(path + "/" + k, "unexpected key");
  }
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) shape_error(path, "expected a string");
  return j.get<std::string>();
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) shape_error(path, "expected an array");
  return j;
}

std::vector<std::string> string_list(const json& j, const std::string& path) {
  std::vector<std::string> out;
  std::size_t i = 0;
  for (const auto& e : as_array(j, path)) out.push_back(as_string(e, path + "/" + std::to_string(i++)));
  return out;
}

std::optional<Side> outcome_field(const json& obj, const std::string& path, bool allowed) {
  auto it = obj.find("outcome");
  if (it == obj.end()) return std::nullopt;
  if (!allowed) shape_error(path + "/outcome", "queries carry no outcome");
  const auto s = as_string(*it, path + "/outcome");
  if (s == "pi") return Side::Pi;
  if (s == "delta") return Side::Delta;
  shape_error(path + "/outcome", "expected \"pi\" or \"delta\"");
}

std::vector<NamedFacts> parse_fact_list(const json& root, const char* key, bool cases) {
  std::vector<NamedFacts> out;
  auto it = root.find(key);
  if (it == root.end()) return out;
  const std::string base = std::string("/") + key;
  std::size_t i = 0;
  for (const auto& e : as_array(*it, base)) {
    const std::string path = base + "/" + std::to_string(i++);
    only_keys(e, {"name", "facts", "outcome"}, path);
    NamedFacts nf;
    nf.name = as_string(require(e, "name", path), path + "/name");
    const auto& facts = require(e, "facts", path);
    if (!facts.is_object()) shape_error(path + "/facts", "expected an object");
    for (const auto& [k, v] : facts.items()) {
      if (!v.is_boolean()) shape_error(path + "/facts/" + k, "expected true or false");
      nf.facts.emplace(k, v.get<bool>());
    }
    nf.outcome = outcome_field(e, path, cases);
    out.push_back(std::move(nf));
  }
  return out;
}

std::string value_token(const json& v, const std::string& path) {
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  if (v.is_string()) return v.get<std::string>();
  shape_error(path, "expected an integer or a string value");
}

std::vector<NamedValues> parse_value_list(const json& root, const char* key, bool cases) {
  std::vector<NamedValues> out;
  auto it = root.find(key);
  if (it == root.end()) return out;
  const std::string base = std::string("/") + key;
  std::size_t i = 0;
  for (const auto& e : as_array(*it, base)) {
    const std::string path = base + "/" + std::to_string(i++);
    only_keys(e, {"name", "values", "outcome"}, path);
    NamedValues nv;
    nv.name = as_string(require(e, "name", path), path + "/name");
    const auto& values = require(e, "values", path);
    if (!values.is_object()) shape_error(path + "/values", "expected an object");
    for (const auto& [k, v] : values.items()) nv.values.emplace(k, value_token(v, path + "/values/" + k));
    nv.outcome = outcome_field(e, path, cases);
    out.push_back(std::move(nv));
  }
  return out;
}

FactorDocument parse_factor_document(const json& root) {
  only_keys(root, {"model", "hierarchy", "flat", "cases", "queries"}, "");
  FactorDocument doc;
  const auto& h = require(root, "hierarchy", "");
  only_keys(h, {"factors", "edges"}, "/hierarchy");
  doc.factors = string_list(require(h, "factors", "/hierarchy"), "/hierarchy/factors");
  if (auto it = h.find("edges"); it != h.end()) {
    std::size_t i = 0;
    for (const auto& e : as_array(*it, "/hierarchy/edges")) {
      const std::string path = "/hierarchy/edges/" + std::to_string(i++);
      only_keys(e, {"child", "parent", "polarity"}, path);
      FactorEdgeSpec edge;
      edge.child = as_string(require(e, "child", path), path + "/child");
      edge.parent = as_string(require(e, "parent", path), path + "/parent");
      const auto pol = as_string(require(e, "polarity", path), path + "/polarity");
      if (pol == "pro")
        edge.polarity = Polarity::Pro;
      else if (pol == "con")
        edge.polarity = Polarity::Con;
      else
        shape_error(path + "/polarity", "expected \"pro\" or \"con\"");
      doc.edges.push_back(std::move(edge));
    }
  }
  if (auto it = root.find("flat"); it != root.end()) {
    only_keys(*it, {"pro", "con"}, "/flat");
    FlatSpec flat;
    if (auto p = it->find("pro"); p != it->end()) flat.pro = string_list(*p, "/flat/pro");
    if (auto c = it->find("con"); c != it->end()) flat.con = string_list(*c, "/flat/con");
    doc.flat = std::move(flat);
  }
  doc.cases = parse_fact_list(root, "cases", true);
  doc.queries = parse_fact_list(root, "queries", false);
  return doc;
}

DimensionDocument parse_dimension_document(const json& root) {
  only_keys(root, {"model", "hierarchy", "cases", "queries"}, "");
  DimensionDocument doc;
  const auto& h = require(root, "hierarchy", "");
  only_keys(h, {"dimensions", "edges"}, "/hierarchy");
  std::size_t i = 0;
  for (const auto& d : as_array(require(h, "dimensions", "/hierarchy"), "/hierarchy/dimensions")) {
    const std::string path = "/hierarchy/dimensions/" + std::to_string(i++);
    only_keys(d, {"name", "order", "values", "leq"}, path);
    DimensionSpec spec;
    spec.name = as_string(require(d, "name", path), path + "/name");
    if (auto o = d.find("order"); o != d.end()) {
      const auto kind = as_string(*o, path + "/order");
      if (kind == "ascending")
        spec.kind = ValueOrder::Kind::Ascending;
      else if (kind == "descending")
        spec.kind = ValueOrder::Kind::Descending;
      else
        shape_error(path + "/order", "expected \"ascending\" or \"descending\"");
      if (d.contains("leq")) shape_error(path + "/leq", "numeric orders take no leq pairs");
      spec.bounded = d.contains("values");
      if (spec.bounded) {
        std::size_t k = 0;
        for (const auto& v : as_array(d.at("values"), path + "/values")) {
          const std::string vp = path + "/values/" + std::to_string(k++);
          if (!v.is_number_integer()) shape_error(vp, "numeric orders take integer values");
          spec.values.push_back(std::to_string(v.get<std::int64_t>()));
        }
      }
    } else {
      spec.kind = ValueOrder::Kind::Explicit;
      if (!d.contains("values")) shape_error(path, "missing key \"order\" or \"values\"");
      std::size_t k = 0;
      for (const auto& v : as_array(d.at("values"), path + "/values"))
        spec.values.push_back(value_token(v, path + "/values/" + std::to_string(k++)));
      if (auto l = d.find("leq"); l != d.end()) {
        std::size_t m = 0;
        for (const auto& pair : as_array(*l, path + "/leq")) {
          const std::string pp = path + "/leq/" + std::to_string(m++);
          if (!pair.is_array() || pair.size() != 2) shape_error(pp, "expected a pair [v, w]");
          spec.leq.emplace_back(value_token(pair[0], pp + "/0"), value_token(pair[1], pp + "/1"));
        }
      }
    }
    doc.dimensions.push_back(std::move(spec));
  }
  if (auto it = h.find("edges"); it != h.end()) {
    std::size_t k = 0;
    for (const auto& e : as_array(*it, "/hierarchy/edges")) {
      const std::string path = "/hierarchy/edges/" + std::to_string(k++);
      only_keys(e, {"child", "parent"}, path);
      doc.edges.push_back({as_string(require(e, "child", path), path + "/child"),
                           as_string(require(e, "parent", path), path + "/parent")});
    }
  }
  doc.cases = parse_value_list(root, "cases", true);
  doc.queries = parse_value_list(root, "queries", false);
  return doc;
}

// ---------------------------------------------------------------------------
// Semantic checks

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

std::set<std::string> check_names(const std::vector<std::string>& names, std::string_view kind,
                                  ValidationReport& report) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) report.error("empty-name", std::string(kind) + " with an empty name");
    else if (!seen.insert(n).second)
      report.error("duplicate-name", std::string(kind) + " '" + n + "' is declared more than once");
  }
  return seen;
}

template <typename Named>
void check_situation_names(const std::vector<Named>& cases, const std::vector<Named>& queries,
                           ValidationReport& report) {
  std::set<std::string> seen;
  auto visit = [&](const Named& s, std::string_view kind) {
    if (s.name.empty()) report.error("empty-name", std::string(kind) + " with an empty name");
    else if (!seen.insert(s.name).second)
      report.error("duplicate-name", "situation name '" + s.name + "' is used more than once");
  };
  for (const auto& c : cases) visit(c, "case");
  for (const auto& q : queries) visit(q, "query");
}

ValueOrder build_order(const DimensionSpec& spec) {
  if (spec.kind == ValueOrder::Kind::Explicit) return ValueOrder::explicit_order(spec.values, spec.leq);
  std::optional<std::vector<std::int64_t>> values;
  if (spec.bounded) {
    values.emplace();
    for (const auto& t : spec.values) {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (ec != std::errc{} || ptr != t.data() + t.size())
        throw ValueError("dimension '" + spec.name + "' has non-integer value '" + t + "'");
      values->push_back(v);
    }
  }
  return spec.kind == ValueOrder::Kind::Ascending ? ValueOrder::ascending(std::move(values))
                                                  : ValueOrder::descending(std::move(values));
}

void coherence_warnings(const FactorHierarchy& h, const NamedFacts& c, ValidationReport& report) {
  for (std::size_t p = 0; p < h.size(); ++p) {
    if (h.is_basic(p)) continue;
    auto it = c.facts.find(h.name(p));
    if (it == c.facts.end()) continue;
    const auto support = it->second ? h.pro_children(p) : h.con_children(p);
    if (support.empty()) continue;
    const bool any = std::ranges::any_of(support, [&](std::size_t q) {
      auto f = c.facts.find(h.name(q));
      return f != c.facts.end() && f->second;
    });
    if (!any)
      report.warn("unsupported-abstract",
                  "case '" + c.name + "' has " + h.name(p) + (it->second ? "" : " false") +
                      " with none of its " + (it->second ? "pro" : "con") + " subordinates present");
  }
}

ValidationReport validate_factor_document(const FactorDocument& doc) {
  ValidationReport report;
  const auto declared = check_names(doc.factors, "factor", report);
  FactorHierarchy h;
  for (const auto& n : doc.factors)
    if (!n.empty() && !h.find(n)) h.add_factor(n);
  for (const auto& e : doc.edges) {
    bool ok = true;
    for (const auto* n : {&e.child, &e.parent})
      if (!declared.contains(*n)) {
        report.error("unknown-factor", "edge " + e.child + " -> " + e.parent + " names undeclared factor '" +
                                           *n + "'");
        ok = false;
      }
    if (ok) h.add_edge(e.child, e.parent, e.polarity);
  }
  const auto hierarchy_report = validate_factor_hierarchy(h);
  report.merge(hierarchy_report);

  if (doc.flat) {
    std::set<std::string> seen;
    for (const auto* list : {&doc.flat->pro, &doc.flat->con})
      for (const auto& n : *list) {
        if (!declared.contains(n)) report.error("unknown-factor", "flat partition names undeclared factor '" + n + "'");
        if (!seen.insert(n).second)
          report.error("flat-overlap", "factor '" + n + "' appears more than once in the flat partition");
      }
  }

  check_situation_names(doc.cases, doc.queries, report);
  auto check_keys = [&](const NamedFacts& s, std::string_view kind) {
    for (const auto& [k, v] : s.facts)
      if (!declared.contains(k))
        report.error("unknown-factor", std::string(kind) + " '" + s.name + "' assigns undeclared factor '" + k + "'");
  };
  std::optional<std::size_t> top;
  if (hierarchy_report.ok() && !h.maximal().empty()) top = h.outcome();
  for (const auto& c : doc.cases) {
    check_keys(c, "case");
    std::vector<std::string> missing;
    for (const auto& n : doc.factors)
      if (!c.facts.contains(n)) missing.push_back(n);
    if (!missing.empty())
      report.error("incomplete-case", "case '" + c.name + "' not complete: missing " + join(missing));
    if (top && c.outcome) {
      auto it = c.facts.find(h.name(*top));
      if (it != c.facts.end() && it->second != (*c.outcome == Side::Pi))
        report.error("outcome-conflict", "case '" + c.name + "' has outcome " +
                                             std::string(to_string(*c.outcome)) + " but " + h.name(*top) +
                                             (it->second ? " true" : " false"));
    }
    if (hierarchy_report.ok()) coherence_warnings(h, c, report);
  }
  for (const auto& q : doc.queries) check_keys(q, "query");
  return report;
}

ValidationReport validate_dimension_document(const DimensionDocument& doc) {
  ValidationReport report;
  std::vector<std::string> names;
  for (const auto& d : doc.dimensions) names.push_back(d.name);
  const auto declared = check_names(names, "dimension", report);
  DimensionHierarchy h;
  for (const auto& d : doc.dimensions) {
    if (d.name.empty() || h.find(d.name)) continue;
    try {
      h.add_dimension(d.name, build_order(d));
    } catch (const ValueError& e) {
      report.error("unknown-value", e.what());
      h.add_dimension(d.name, ValueOrder::ascending());
    }
  }
  for (const auto& e : doc.edges) {
    bool ok = true;
    for (const auto* n : {&e.child, &e.parent})
      if (!declared.contains(*n)) {
        report.error("unknown-dimension", "edge " + e.child + " -> " + e.parent +
                                              " names undeclared dimension '" + *n + "'");
        ok = false;
      }
    if (ok) h.add_edge(e.child, e.parent);
  }
  const auto hierarchy_report = validate_dimension_hierarchy(h);
  report.merge(hierarchy_report);

  check_situation_names(doc.cases, doc.queries, report);
  auto check_values = [&](const NamedValues& s, std::string_view kind) {
    for (const auto& [k, v] : s.values) {
      auto d = h.find(k);
      if (!d) {
        report.error("unknown-dimension", std::string(kind) + " '" + s.name + "' assigns undeclared dimension '" + k + "'");
        continue;
      }
      if (!h.order(*d).parse(v))
        report.error("unknown-value", std::string(kind) + " '" + s.name + "' assigns '" + v +
                                          "', which is not a value of dimension '" + k + "'");
    }
  };
  std::optional<std::size_t> top;
  if (hierarchy_report.ok() && !h.maximal().empty()) top = h.outcome();
  for (const auto& c : doc.cases) {
    check_values(c, "case");
    std::vector<std::string> missing;
    for (const auto& n : names)
      if (!c.values.contains(n)) missing.push_back(n);
    if (!missing.empty())
      report.error("incomplete-case", "case '" + c.name + "' not complete: missing " + join(missing));
    if (top && c.outcome) {
      auto it = c.values.find(h.name(*top));
      const std::string expected = *c.outcome == Side::Pi ? "1" : "0";
      if (it != c.values.end() && it->second != expected)
        report.error("outcome-conflict", "case '" + c.name + "' has outcome " +
                                             std::string(to_string(*c.outcome)) + " but " + h.name(*top) +
                                             " = " + it->second);
    }
  }
  for (const auto& q : doc.queries) check_values(q, "query");
  return report;
}

// ---------------------------------------------------------------------------
// Serialization

json facts_json(const NamedFacts& s) {
  json j = {{"name", s.name}, {"facts", json::object()}};
  for (const auto& [k, v] : s.facts) j["facts"][k] = v;
  if (s.outcome) j["outcome"] = std::string(to_string(*s.outcome));
  return j;
}

json token_json(const DimensionSpec& spec, const std::string& token) {
  if (spec.kind == ValueOrder::Kind::Explicit) return token;
  return std::stoll(token);
}

json serialize_factor(const FactorDocument& doc) {
  json edges = json::array();
  for (const auto& e : doc.edges)
    edges.push_back({{"child", e.child}, {"parent", e.parent}, {"polarity", std::string(to_string(e.polarity))}});
  json j = {{"model", "factor"},
            {"hierarchy", {{"factors", doc.factors}, {"edges", std::move(edges)}}},
            {"cases", json::array()},
            {"queries", json::array()}};
  if (doc.flat) j["flat"] = {{"pro", doc.flat->pro}, {"con", doc.flat->con}};
  for (const auto& c : doc.cases) j["cases"].push_back(facts_json(c));
  for (const auto& q : doc.queries) j["queries"].push_back(facts_json(q));
  return j;
}

json serialize_dimension(const DimensionDocument& doc) {
  std::map<std::string, const DimensionSpec*> by_name;
  json dims = json::array();
  for (const auto& d : doc.dimensions) {
    by_name[d.name] = &d;
    json jd = {{"name", d.name}};
    if (d.kind == ValueOrder::Kind::Explicit) {
      jd["values"] = d.values;
      jd["leq"] = json::array();
      for (const auto& [a, b] : d.leq) jd["leq"].push_back({a, b});
    } else {
      jd["order"] = d.kind == ValueOrder::Kind::Ascending ? "ascending" : "descending";
      if (d.bounded) {
        jd["values"] = json::array();
        for (const auto& t : d.values) jd["values"].push_back(std::stoll(t));
      }
    }
    dims.push_back(std::move(jd));
  }
  json edges = json::array();
  for (const auto& e : doc.edges) edges.push_back({{"child", e.child}, {"parent", e.parent}});
  auto situation = [&](const NamedValues& s) {
    json j = {{"name", s.name}, {"values", json::object()}};
    for (const auto& [k, v] : s.values) j["values"][k] = token_json(*by_name.at(k), v);
    if (s.outcome) j["outcome"] = std::string(to_string(*s.outcome));
    return j;
  };
  json j = {{"model", "dimension"},
            {"hierarchy", {{"dimensions", std::move(dims)}, {"edges", std::move(edges)}}},
            {"cases", json::array()},
            {"queries", json::array()}};
  for (const auto& c : doc.cases) j["cases"].push_back(situation(c));
  for (const auto& q : doc.queries) j["queries"].push_back(situation(q));
  return j;
}

template <typename Doc, typename Named>
std::vector<const Named*> pick_cases(const Doc& doc, const std::vector<std::string>& names) {
  std::vector<const Named*> out;
  if (names.empty()) {
    for (const auto& c : doc.cases) out.push_back(&c);
    return out;
  }
  for (const auto& n : names) {
    auto it = std::ranges::find_if(doc.cases, [&](const Named& c) { return c.name == n; });
    if (it == doc.cases.end()) throw UnknownNameError("no case named '" + n + "'");
    out.push_back(&*it);
  }
  return out;
}

void require_valid(const CaseBaseDocument& doc) {
  const auto report = validate_document(doc);
  if (!report.ok()) throw Error("invalid document: " + report.errors.front().message);
}

}  // namespace

CaseBaseDocument parse_casebase(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t byte = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < byte; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find("parse error"); pos != std::string::npos) what = what.substr(pos);
    throw ParseError(what, line, column, {});
  }
  if (!root.is_object()) shape_error("", "expected an object at the top level");
  const auto model = as_string(require(root, "model", ""), "/model");
  if (model == "factor") return parse_factor_document(root);
  if (model == "dimension") return parse_dimension_document(root);
  shape_error("/model", "expected \"factor\" or \"dimension\"");
}

ValidationReport validate_document(const CaseBaseDocument& doc) {
  return std::visit(
      [](const auto& d) {
        if constexpr (std::is_same_v<std::decay_t<decltype(d)>, FactorDocument>)
          return validate_factor_document(d);
        else
          return validate_dimension_document(d);
      },
      doc);
}

std::string serialize_casebase(const CaseBaseDocument& doc) {
  require_valid(doc);
  const json j = std::holds_alternative<FactorDocument>(doc) ? serialize_factor(std::get<FactorDocument>(doc))
                                                             : serialize_dimension(std::get<DimensionDocument>(doc));
  return j.dump(2) + "\n";
}

FactorHierarchy build_hierarchy(const FactorDocument& doc) {
  FactorHierarchy h;
  for (const auto& n : doc.factors) h.add_factor(n);
  for (const auto& e : doc.edges) h.add_edge(e.child, e.parent, e.polarity);
  return h;
}

DimensionHierarchy build_hierarchy(const DimensionDocument& doc) {
  DimensionHierarchy h;
  for (const auto& d : doc.dimensions) h.add_dimension(d.name, build_order(d));
  for (const auto& e : doc.edges) h.add_edge(e.child, e.parent);
  return h;
}

FactSituation build_situation(const FactorHierarchy& h, const NamedFacts& facts) {
  FactSituation f(h.size());
  for (const auto& [k, v] : facts.facts) f.set(h.index_of(k), v);
  return f;
}

DimSituation build_situation(const DimensionHierarchy& h, const NamedValues& values) {
  DimSituation x(h.size());
  for (const auto& [k, v] : values.values) {
    const std::size_t d = h.index_of(k);
    x.set(d, h.order(d).value(v));
  }
  return x;
}

FactorCaseBase build_case_base(const FactorDocument& doc, const std::vector<std::string>& names) {
  auto h = build_hierarchy(doc);
  std::vector<FactorCase> cases;
  for (const auto* c : pick_cases<FactorDocument, NamedFacts>(doc, names))
    cases.push_back({c->name, build_situation(h, *c)});
  return FactorCaseBase(std::move(h), std::move(cases));
}

DimCaseBase build_case_base(const DimensionDocument& doc, const std::vector<std::string>& names) {
  auto h = build_hierarchy(doc);
  std::vector<DimCase> cases;
  for (const auto* c : pick_cases<DimensionDocument, NamedValues>(doc, names))
    cases.push_back({c->name, build_situation(h, *c)});
  return DimCaseBase(std::move(h), std::move(cases));
}

FlatFactorView build_flat_case_base(const FactorDocument& doc, const std::vector<std::string>& names) {
  const auto h = build_hierarchy(doc);
  const std::size_t top = h.outcome();
  std::vector<std::size_t> factors;
  std::vector<std::string> flat_names;
  std::vector<Polarity> polarity;
  if (doc.flat) {
    for (std::size_t i = 0; i < h.size(); ++i) {
      const auto& n = h.name(i);
      const bool pro = std::ranges::find(doc.flat->pro, n) != doc.flat->pro.end();
      const bool con = std::ranges::find(doc.flat->con, n) != doc.flat->con.end();
      if (!pro && !con) continue;
      factors.push_back(i);
      flat_names.push_back(n);
      polarity.push_back(pro ? Polarity::Pro : Polarity::Con);
    }
  } else {
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (i == top) continue;
      if (h.is_abstract(i))
        throw ModelError("the flat model needs a \"flat\" section when '" + h.name(i) + "' is abstract");
      factors.push_back(i);
      flat_names.push_back(h.name(i));
      polarity.push_back(Polarity::Pro);
    }
    for (const auto& e : h.edges()) {
      auto it = std::ranges::find(factors, e.child);
      if (it != factors.end()) polarity[static_cast<std::size_t>(it - factors.begin())] = e.polarity;
    }
  }
  std::vector<FlatCase> cases;
  for (const auto* c : pick_cases<FactorDocument, NamedFacts>(doc, names)) {
    const auto full = build_situation(h, *c);
    Side outcome = Side::Pi;
    if (c->outcome) outcome = *c->outcome;
    else if (full.defined(top)) outcome = *full[top] ? Side::Pi : Side::Delta;
    else throw ModelError("case '" + c->name + "' has no outcome");
    FactSituation facts(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i)
      if (auto v = full[factors[i]]) facts.set(i, *v);
    cases.push_back({c->name, std::move(facts), outcome});
  }
  return {FlatCaseBase(std::move(flat_names), std::move(polarity), std::move(cases)), std::move(factors)};
}

FlatDimensionView build_flat_case_base(const DimensionDocument& doc, const std::vector<std::string>& names) {
  const auto h = build_hierarchy(doc);
  const std::size_t top = h.outcome();
  std::vector<std::size_t> dims;
  std::vector<std::string> flat_names;
  std::vector<ValueOrder> orders;
  for (std::size_t d = 0; d < h.size(); ++d) {
    if (d == top) continue;
    dims.push_back(d);
    flat_names.push_back(h.name(d));
    orders.push_back(h.order(d));
  }
  std::vector<FlatDimCase> cases;
  for (const auto* c : pick_cases<DimensionDocument, NamedValues>(doc, names)) {
    const auto full = build_situation(h, *c);
    Side outcome = Side::Pi;
    if (c->outcome) {
      outcome = *c->outcome;
    } else {
      const auto pi = outcome_claim(h, Side::Pi);
      outcome = *full[top] == pi.value ? Side::Pi : Side::Delta;
    }
    DimSituation values(dims.size());
    for (std::size_t i = 0; i < dims.size(); ++i)
      if (auto v = full[dims[i]]) values.set(i, *v);
    cases.push_back({c->name, std::move(values), outcome});
  }
  return {FlatDimCaseBase(std::move(flat_names), std::move(orders), std::move(cases)), std::move(dims)};
}

const NamedFacts* find_situation(const FactorDocument& doc, std::string_view name) {
  for (const auto& q : doc.queries)
    if (q.name == name) return &q;
  for (const auto& c : doc.cases)
    if (c.name == name) return &c;
  return nullptr;
}

const NamedValues* find_situation(const DimensionDocument& doc, std::string_view name) {
  for (const auto& q : doc.queries)
    if (q.name == name) return &q;
  for (const auto& c : doc.cases)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace precedent
