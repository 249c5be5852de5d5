#pragma once

#include <array>
#include <string>

#include "alignsim/action.hpp"
#include "alignsim/dialogue.hpp"
#include "alignsim/evaluation.hpp"
#include "alignsim/policies.hpp"
#include "alignsim/trace.hpp"

namespace alignsim {

class SimError : public std::runtime_error {
 public:
  explicit SimError(const std::string& what) : std::runtime_error(what) {}
};

struct SimConfig {
  long long budget = 10000;
  Architecture architecture = Architecture::silent;
  std::array<std::string, 2> spawn_rooms;
  unsigned long long seed = 0;
  long long motor_step_cost = 1;
};

json sim_config_to_json(const SimConfig& c);
SimConfig sim_config_from_json(const json& j);

// Step cost of one action: motor, state-change, and control actions cost
// motor_step_cost; perception and ReadMessages cost nothing; SendMessage
// costs one step under SC and nothing under ACF.
long long charge_step(const SimConfig& config, const Action& action);

// True iff the agent should re-decide: its last action completed, its
// observation set changed, or a partner message arrived (immediately under
// ACF, after ReadMessages under SC). Always true before the first replan;
// always false once the agent has issued Done.
bool replan_due(const std::vector<Event>& events, Architecture architecture, int agent);

// Runs one episode to termination. Deterministic in (scene, config,
// policies); the returned trace is complete and ends with a terminal event
// whose status is done, budget_exhausted, or stalled.
EpisodeTrace run_episode(const SceneGraph& scene, const SimConfig& config,
                         const std::array<Policy*, 2>& policies, const EvalSpec& eval,
                         const std::string& episode_id);

}  // namespace alignsim
