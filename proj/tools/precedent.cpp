// precedent: validate case-base documents and run forcing queries.
//
// Exit codes: 0 ran (verdicts are in the output), 1 the document is invalid,
// 2 usage, I/O, unknown names or a model that does not fit the document.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "precedent/casebase_io.hpp"
#include "precedent/checks.hpp"
#include "precedent/goal.hpp"
#include "precedent/oracle.hpp"

namespace {

using namespace precedent;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;

// Raised to leave a command with a given exit code after printing a message.
struct Exit {
  int code;
};

bool color_enabled() {
  if (const char* env = std::getenv("PRECEDENT_COLOR")) return std::string_view(env) != "0";
  return isatty(fileno(stdout)) != 0;
}

std::string paint(const std::string& text, const char* code, bool color) {
  return color ? std::string("\x1b[") + code + "m" + text + "\x1b[0m" : text;
}

[[noreturn]] void fail(int code, const std::string& message) {
  std::cerr << "precedent: " << message << "\n";
  throw Exit{code};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(kUsage, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CaseBaseDocument load(const std::string& path, bool report_ok = false) {
  CaseBaseDocument doc;
  try {
    doc = parse_casebase(read_file(path));
  } catch (const ParseError& e) {
    std::cout << "error [syntax]: " << e.what() << "\n";
    throw Exit{kInvalid};
  }
  const auto report = validate_document(doc);
  for (const auto& issue : report.errors) std::cout << "error [" << issue.code << "]: " << issue.message << "\n";
  if (report_ok)
    for (const auto& issue : report.warnings) std::cout << "warning [" << issue.code << "]: " << issue.message << "\n";
  if (!report.ok()) throw Exit{kInvalid};
  if (report_ok) std::cout << "OK\n";
  return doc;
}

struct ForceArgs {
  std::string file;
  std::vector<std::string> case_base;
  std::string query;
  std::string goal;
  std::string model;
  bool trace = false;
  bool json = false;
};

template <typename Doc>
const auto& query_of(const Doc& doc, const std::string& name) {
  const auto* s = find_situation(doc, name);
  if (!s) fail(kUsage, "no query or case named '" + name + "'");
  return *s;
}

Side side_of(const std::string& goal, const std::string& model) {
  auto side = parse_side(goal);
  if (!side) fail(kUsage, "the " + model + " model takes the goal pi or delta, not '" + goal + "'");
  return *side;
}

ForcingResult evaluate(const CaseBaseDocument& document, const ForceArgs& a) {
  const bool factor = std::holds_alternative<FactorDocument>(document);
  const bool factor_model = a.model == "rm" || a.model == "hrm";
  if (factor != factor_model)
    fail(kUsage, "the " + a.model + " model does not apply to a " + (factor ? "factor" : "dimension") + " document");

  if (factor) {
    const auto& doc = std::get<FactorDocument>(document);
    const auto& q = query_of(doc, a.query);
    if (a.model == "hrm") {
      const auto cb = build_case_base(doc, a.case_base);
      const auto facts = build_situation(cb.hierarchy(), q);
      return hrm_forces(cb, facts, parse_literal(cb.hierarchy(), a.goal), q.name);
    }
    const auto side = side_of(a.goal, a.model);
    const auto view = build_flat_case_base(doc, a.case_base);
    const auto facts = build_situation(build_hierarchy(doc), q);
    return rm_forces(view.cb, project(facts, view.factors), side, q.name);
  }

  const auto& doc = std::get<DimensionDocument>(document);
  const auto& q = query_of(doc, a.query);
  if (a.model == "dhrm") {
    const auto cb = build_case_base(doc, a.case_base);
    const auto x = build_situation(cb.hierarchy(), q);
    if (auto side = parse_side(a.goal)) return dhrm_forces_outcome(cb, x, *side, q.name);
    return dhrm_bound(cb, x, parse_bound(cb.hierarchy(), a.goal), q.name);
  }
  const auto side = side_of(a.goal, a.model);
  const auto view = build_flat_case_base(doc, a.case_base);
  const auto x = build_situation(build_hierarchy(doc), q);
  return drm_forces(view.cb, project(x, view.dimensions), side, q.name);
}

int cmd_force(const ForceArgs& a) {
  const auto doc = load(a.file);
  const auto result = evaluate(doc, a);
  if (a.json) {
    nlohmann::json out = {{"model", a.model},
                          {"case_base", a.case_base},
                          {"query", a.query},
                          {"goal", a.goal},
                          {"forced", result.forced},
                          {"trace", to_json(result.trace)}};
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  const bool color = color_enabled();
  std::cout << paint(result.forced ? "FORCED" : "NOT FORCED", result.forced ? "32" : "31", color) << "\n";
  if (a.trace) std::cout << render_text(result.trace, {.color = color});
  return kOk;
}

int cmd_consistency(const std::string& file, const std::vector<std::string>& names, std::size_t cap) {
  const auto document = load(file);
  if (!std::holds_alternative<FactorDocument>(document))
    fail(kUsage, "consistency checking applies to factor documents");
  const auto cb = build_case_base(std::get<FactorDocument>(document), names);
  ConsistencyReport report;
  try {
    report = check_consistency(cb, cap);
  } catch (const CapExceededError& e) {
    fail(kUsage, "enumeration needs " + std::to_string(e.required()) + " basic factors, cap is " +
                     std::to_string(e.cap()));
  }
  const bool color = color_enabled();
  if (report.consistent) {
    std::cout << paint("consistent", "32", color) << " (" << report.checked << " situations checked)\n";
    return kOk;
  }
  std::cout << paint("inconsistent", "31", color) << " (" << report.witness_count << " of " << report.checked
            << " situations forced both ways)\n";
  for (const auto& w : report.witnesses) std::cout << "witness: " << describe(cb.hierarchy(), w) << "\n";
  return kOk;
}

int cmd_check(const std::string& file, const std::string& property, const CheckOptions& options) {
  if (property != "flat-reduction" && property != "oracle" && property != "encoding")
    fail(kUsage, "unknown property '" + property + "' (flat-reduction, oracle, encoding)");
  const auto document = load(file);
  CheckReport report;
  if (const auto* doc = std::get_if<FactorDocument>(&document)) {
    const auto cb = build_case_base(*doc);
    if (property == "oracle") {
      std::vector<FactSituation> queries;
      for (const auto& q : doc->queries) queries.push_back(build_situation(cb.hierarchy(), q));
      report = check_oracle(cb, queries, options);
    } else if (property == "flat-reduction") {
      report = check_flat_reduction(cb, options);
    } else {
      report = check_encoding(build_flat_case_base(*doc).cb, options);
    }
  } else {
    const auto& dim = std::get<DimensionDocument>(document);
    const auto cb = build_case_base(dim);
    if (property == "oracle") {
      std::vector<DimSituation> queries;
      for (const auto& q : dim.queries) queries.push_back(build_situation(cb.hierarchy(), q));
      report = check_oracle(cb, queries, options);
    } else if (property == "flat-reduction") {
      report = check_flat_reduction(cb, options);
    } else {
      fail(kUsage, "the encoding check applies to factor documents");
    }
  }
  const bool color = color_enabled();
  std::cout << paint(report.passed ? "PASS" : "FAIL", report.passed ? "32" : "31", color) << " " << report.property
            << " (" << report.instances << " instances)\n";
  if (!report.passed) std::cout << "counterexample: " << report.counterexample << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide whether a case base of precedents forces an outcome."};
  app.require_subcommand(1);

  std::string file;
  auto* validate = app.add_subcommand("validate", "Check a case-base document");
  validate->add_option("file", file, "Document")->required();

  ForceArgs force_args;
  auto* force = app.add_subcommand("force", "Decide whether the case base forces a goal for a query");
  force->add_option("file", force_args.file, "Document")->required();
  force->add_option("--case-base", force_args.case_base, "Cases to use (default: all)")->delimiter(',');
  force->add_option("--query", force_args.query, "Query or case to evaluate")->required();
  force->add_option("--goal", force_args.goal, "Literal (pi, delta, Q, !Q) or bound (v<=d, d<=v)")->required();
  force->add_option("--model", force_args.model, "Evaluator")
      ->required()
      ->check(CLI::IsMember({"rm", "hrm", "drm", "dhrm"}));
  force->add_flag("--trace", force_args.trace, "Print the derivation");
  force->add_flag("--json", force_args.json, "Print verdict and derivation as JSON");

  std::vector<std::string> consistency_cases;
  std::size_t cap = 16;
  auto* consistency = app.add_subcommand("consistency", "Look for query situations forced both ways");
  consistency->add_option("file", file, "Document")->required();
  consistency->add_option("--case-base", consistency_cases, "Cases to use (default: all)")->delimiter(',');
  consistency->add_option("--cap", cap, "Largest number of basic factors to enumerate");

  std::string property;
  CheckOptions options;
  auto* check = app.add_subcommand("check", "Cross-check evaluators on the document");
  check->add_option("file", file, "Document")->required();
  check->add_option("--property", property, "flat-reduction, oracle or encoding")->required();
  check->add_option("--seed", options.seed, "Seed for the randomized part");
  check->add_option("--samples", options.samples, "Random case bases to draw");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) {
      load(file, true);
      return kOk;
    }
    if (*force) return cmd_force(force_args);
    if (*consistency) return cmd_consistency(file, consistency_cases, cap);
    if (*check) return cmd_check(file, property, options);
  } catch (const Exit& e) {
    return e.code;
  } catch (const UnknownNameError& e) {
    std::cerr << "precedent: " << e.what() << "\n";
    return kUsage;
  } catch (const ValueError& e) {
    std::cerr << "precedent: " << e.what() << "\n";
    return kUsage;
  } catch (const ModelError& e) {
    std::cerr << "precedent: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "precedent: " << e.what() << "\n";
    return kInvalid;
  }
  return kUsage;
}
