#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "alignsim/action.hpp"
#include "alignsim/agent_view.hpp"
#include "alignsim/dialogue.hpp"
#include "alignsim/evaluation.hpp"

namespace alignsim {

struct ActionOutcome {
  Action action;
  bool ok = true;
  std::string reason;
};

// Everything a policy may look at. Built exclusively from the agent's own
// state; nothing here derives from the partner's private sets.
struct PolicyInput {
  AgentView view;
  std::vector<Message> new_messages;
  const EvalSpec* task = nullptr;
  Architecture architecture = Architecture::silent;
  std::optional<ActionOutcome> last_result;
  long long round = 0;
};

// Under SC a turn is either a message or an action, never both; under ACF a
// message may ride along with the required action.
struct PolicyDecision {
  std::optional<std::string> message;
  std::optional<Action> action;
};

class Policy {
 public:
  virtual ~Policy() = default;
  virtual PolicyDecision decide(const PolicyInput& input) = 0;
  virtual std::string name() const = 0;
  // Internal state recorded in the trace's replan events for replayability.
  virtual json state() const { return json::object(); }
};

// Instantiates a builtin by name. Names may carry a JSON parameter suffix:
// "hallucinating_messenger{\"phantoms\":[\"lamp_77\"]}". Unknown names throw
// std::invalid_argument. The seed feeds the randomized policies; scripted
// ones ignore it.
std::unique_ptr<Policy> make_policy(const std::string& spec, int agent_id, unsigned long long seed);

std::vector<std::string> builtin_policies();

// Fully scripted decision sequence; emits Done once exhausted.
std::unique_ptr<Policy> make_scripted_policy(std::vector<PolicyDecision> script);

// Adapter that forwards PolicyInput/PolicyDecision as line-delimited JSON to
// a subprocess: one request line per replan, one response line back.
std::unique_ptr<Policy> make_external_policy(const std::string& command);

json policy_input_to_json(const PolicyInput& input);
PolicyDecision policy_decision_from_json(const json& j);
json policy_decision_to_json(const PolicyDecision& d);

}  // namespace alignsim
