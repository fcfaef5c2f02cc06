#include "precedent/trace.hpp"

#include <algorithm>
#include <stdexcept>

namespace precedent {

using nlohmann::json;

std::string_view to_string(TraceRule rule) {
  switch (rule) {
    case TraceRule::Direct: return "direct";
    case TraceRule::Precedent: return "precedent";
    case TraceRule::None: return "none";
  }
  return "none";
}

std::string_view to_string(ConditionKind kind) {
  switch (kind) {
    case ConditionKind::Pro: return "pro";
    case ConditionKind::Con: return "con";
    case ConditionKind::Dimension: return "sub";
  }
  return "pro";
}

namespace {

TraceRule rule_from(std::string_view s) {
  if (s == "direct") return TraceRule::Direct;
  if (s == "precedent") return TraceRule::Precedent;
  if (s == "none") return TraceRule::None;
  throw std::invalid_argument("unknown trace rule '" + std::string(s) + "'");
}

ConditionKind kind_from(std::string_view s) {
  if (s == "pro") return ConditionKind::Pro;
  if (s == "con") return ConditionKind::Con;
  if (s == "sub") return ConditionKind::Dimension;
  throw std::invalid_argument("unknown condition kind '" + std::string(s) + "'");
}

struct Painter {
  bool on;
  std::string ok(std::string_view s) const { return wrap("\x1b[32m", s); }
  std::string bad(std::string_view s) const { return wrap("\x1b[31m", s); }
  std::string dim(std::string_view s) const { return wrap("\x1b[2m", s); }
  std::string wrap(std::string_view code, std::string_view s) const {
    if (!on) return std::string(s);
    return std::string(code) + std::string(s) + "\x1b[0m";
  }
};

void render(const DerivationTrace& t, const RenderOptions& opt, const Painter& paint,
            std::size_t level, std::string& out) {
  auto pad = [&](std::size_t l) {
    for (std::size_t i = 0; i < l; ++i) out += opt.indent;
  };
  // Leaves: direct satisfaction, or a failed goal with no recursive clause.
  if (t.rule == TraceRule::Direct || (t.attempts.empty() && t.failure_witness == t.detail)) {
    pad(level);
    out += t.detail + ": " + (t.forced ? paint.ok("holds") : paint.bad("fails")) + "\n";
    return;
  }
  pad(level);
  out += t.statement + ": " + (t.forced ? paint.ok("forced") : paint.bad("not forced")) + "\n";
  if (!t.detail.empty()) {
    pad(level + 1);
    out += t.detail + ": " + paint.bad("fails") + "\n";
  }
  if (!t.forced && t.attempts.empty()) {
    pad(level + 1);
    out += paint.dim(t.failure_witness) + "\n";
  }
  for (const auto& a : t.attempts) {
    pad(level + 1);
    out += "via " + a.precedent + ": " + (a.succeeded ? paint.ok("applies") : paint.bad("blocked")) +
           "\n";
    for (const auto& c : a.conditions) {
      pad(level + 2);
      out += std::string(to_string(c.kind)) + " " + c.subject + ": " + c.text + ": " +
             (c.holds ? paint.ok("holds") : paint.bad("fails")) + "\n";
      for (const auto& sub : c.subgoal) render(sub, opt, paint, level + 3, out);
    }
  }
}

}  // namespace

std::string render_text(const DerivationTrace& trace, const RenderOptions& options) {
  std::string out;
  render(trace, options, Painter{options.color}, 0, out);
  return out;
}

json to_json(const DerivationTrace& t) {
  json attempts = json::array();
  for (const auto& a : t.attempts) {
    json conditions = json::array();
    for (const auto& c : a.conditions) {
      json sub = json::array();
      for (const auto& s : c.subgoal) sub.push_back(to_json(s));
      conditions.push_back({{"kind", to_string(c.kind)},
                            {"subject", c.subject},
                            {"text", c.text},
                            {"holds", c.holds},
                            {"subgoal", std::move(sub)}});
    }
    attempts.push_back(
        {{"precedent", a.precedent}, {"succeeded", a.succeeded}, {"conditions", std::move(conditions)}});
  }
  return {{"goal", t.goal},
          {"statement", t.statement},
          {"forced", t.forced},
          {"rule", to_string(t.rule)},
          {"detail", t.detail},
          {"attempts", std::move(attempts)},
          {"failure_witness", t.failure_witness}};
}

DerivationTrace trace_from_json(const json& j) {
  DerivationTrace t;
  t.goal = j.at("goal").get<std::string>();
  t.statement = j.at("statement").get<std::string>();
  t.forced = j.at("forced").get<bool>();
  t.rule = rule_from(j.at("rule").get<std::string>());
  t.detail = j.at("detail").get<std::string>();
  t.failure_witness = j.at("failure_witness").get<std::string>();
  for (const auto& ja : j.at("attempts")) {
    TraceAttempt a;
    a.precedent = ja.at("precedent").get<std::string>();
    a.succeeded = ja.at("succeeded").get<bool>();
    for (const auto& jc : ja.at("conditions")) {
      TraceCondition c;
      c.kind = kind_from(jc.at("kind").get<std::string>());
      c.subject = jc.at("subject").get<std::string>();
      c.text = jc.at("text").get<std::string>();
      c.holds = jc.at("holds").get<bool>();
      for (const auto& js : jc.at("subgoal")) c.subgoal.push_back(trace_from_json(js));
      a.conditions.push_back(std::move(c));
    }
    t.attempts.push_back(std::move(a));
  }
  return t;
}

std::size_t trace_depth(const DerivationTrace& t) {
  std::size_t best = 0;
  for (const auto& a : t.attempts)
    for (const auto& c : a.conditions)
      for (const auto& s : c.subgoal) best = std::max(best, trace_depth(s));
  return best + 1;
}

}  // namespace precedent
