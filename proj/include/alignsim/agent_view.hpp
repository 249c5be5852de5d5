#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "alignsim/dialogue.hpp"
#include "alignsim/scene.hpp"

namespace alignsim {

// What an agent remembers about an entity it has observed. Entries refresh
// whenever the entity is visible again and go stale in between, so the view
// is an honest private world graph, not a window onto ground truth.
struct KnownEntity {
  EntityKind kind = EntityKind::object;
  std::string parent;
  Openness openness = Openness::not_articulated;
  std::map<std::string, bool> attrs;
};

// One agent's private state. observed is V_i(t); believed is B_i(t) and may
// contain phantom handles that exist in no scene. Both grow monotonically.
struct AgentView {
  int agent_id = 0;
  std::string location;
  std::optional<std::string> held;
  std::set<std::string> observed;
  std::set<std::string> believed;
  std::size_t message_cursor = 0;

  // Private structural knowledge over observed entities, for policies and
  // perception tools. Plays no role in any metric.
  std::map<std::string, KnownEntity> known;
  std::set<RelationTriple> known_relations;

  bool operator==(const AgentView& o) const = default;
};

// Folds the currently visible entities of the agent's room into observed and
// believed, and refreshes structural knowledge for what is visible now.
void update_observation(AgentView& view, const SceneGraph& scene);

// Applies one received message: believed gains the message's mentions,
// observed is untouched. Phantom handles enter believed like any other.
void update_belief_on_receive(AgentView& view, const Message& m);

}  // namespace alignsim
