#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace precedent {

enum class TraceRule {
  Direct,     // the situation itself satisfies the goal
  Precedent,  // a precedent instantiates the recursive clause
  None,       // not forced; see attempts and failure_witness
};

enum class ConditionKind {
  Pro,        // subordinate supporting the goal
  Con,        // subordinate opposing the goal
  Dimension,  // polarity-free subordinate (dimension models)
};

struct DerivationTrace;

// One subordinate condition of an instantiated precedent clause.
struct TraceCondition {
  ConditionKind kind = ConditionKind::Pro;
  std::string subject;
  std::string text;
  bool holds = false;
  // Zero or one recursive subgoal.
  std::vector<DerivationTrace> subgoal;

  friend bool operator==(const TraceCondition&, const TraceCondition&) = default;
};

struct TraceAttempt {
  std::string precedent;
  bool succeeded = false;
  std::vector<TraceCondition> conditions;

  friend bool operator==(const TraceAttempt&, const TraceAttempt&) = default;
};

/// Unfolding of one forcing query.
///
/// `goal` uses the command-line goal syntax (`Q`, `!Q`, `3<=R`, `R<=3`, `pi`,
/// `delta`) so a trace can be replayed. A forced trace holds exactly one
/// attempt when its rule is Precedent; a trace that is not forced lists one
/// failed attempt per candidate precedent.
struct DerivationTrace {
  std::string goal;
  std::string statement;
  bool forced = false;
  TraceRule rule = TraceRule::None;
  std::string detail;
  std::vector<TraceAttempt> attempts;
  std::string failure_witness;

  friend bool operator==(const DerivationTrace&, const DerivationTrace&) = default;
};

std::string_view to_string(TraceRule rule);
std::string_view to_string(ConditionKind kind);

struct RenderOptions {
  bool color = false;
  std::string indent = "  ";
};

// Indented derivation, one line per recursion step.
std::string render_text(const DerivationTrace& trace, const RenderOptions& options = {});

nlohmann::json to_json(const DerivationTrace& trace);
// Throws nlohmann::json::exception on malformed input.
DerivationTrace trace_from_json(const nlohmann::json& j);

// Deepest node count along any subgoal chain (root = 1).
std::size_t trace_depth(const DerivationTrace& trace);

}  // namespace precedent
