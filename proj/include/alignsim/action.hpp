#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "alignsim/scene.hpp"

namespace alignsim {

enum class Tool {
  navigate,
  explore,
  pick,
  place,
  rearrange,
  open,
  close,
  clean,
  fill,
  pour,
  power_on,
  power_off,
  find_object,
  find_receptacle,
  find_room,
  find_agent,
  wait,
  done,
  send_message,
  read_messages,
};

enum class ToolCategory { motor, state_change, perception, control, dialogue };

const char* tool_name(Tool t);
Tool tool_from_name(const std::string& s);
ToolCategory tool_category(Tool t);

// State-change tools are exclusive to agent 1 (the humanoid); everything else
// is shared. Dialogue availability additionally depends on the architecture,
// which the simulator enforces.
bool tool_available(Tool t, int agent);

struct Action {
  Tool tool = Tool::wait;
  std::vector<std::string> args;

  bool operator==(const Action& o) const = default;
};

json action_to_json(const Action& a);
Action action_from_json(const json& j);

struct ActionFailure {
  Tool tool;
  std::string target;
  std::string reason;
};

// Minimal delta between two scene snapshots, rich enough to replay world
// state for evaluation without re-running action semantics.
struct SceneDiff {
  std::map<std::string, std::string> parent_set;  // "" means detached (held)
  std::vector<RelationTriple> relations_added;
  std::vector<RelationTriple> relations_removed;
  std::map<std::string, std::map<std::string, bool>> attrs_set;
  std::map<std::string, Openness> openness_set;
  std::map<int, std::string> location_set;
  std::map<int, std::optional<std::string>> held_set;

  bool empty() const;
};

json diff_to_json(const SceneDiff& d);
SceneDiff diff_from_json(const json& j);
void apply_diff(SceneGraph& scene, const SceneDiff& d);

struct ApplyResult {
  SceneGraph scene;
  SceneDiff diff;
  std::optional<ActionFailure> failure;

  bool ok() const { return !failure.has_value(); }
};

// Deterministic oracle transition. Precondition failures come back as a
// structured ActionFailure with the input scene unchanged; they never throw.
ApplyResult apply_action(const SceneGraph& scene, int actor, const Action& action);

}  // namespace alignsim
