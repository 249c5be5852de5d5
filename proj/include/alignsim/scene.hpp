#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

namespace alignsim {

// Plain nlohmann::json keeps object keys sorted, which gives us canonical
// serialization for free; every file format in this project relies on it.
using json = nlohmann::json;

class SceneError : public std::runtime_error {
 public:
  explicit SceneError(const std::string& what) : std::runtime_error(what) {}
};

enum class EntityKind { house, room, furniture, object };
enum class Openness { open, closed, not_articulated };
enum class Relation { on, inside, next_to };

const char* kind_name(EntityKind k);
EntityKind kind_from_name(const std::string& s);
const char* openness_name(Openness o);
Openness openness_from_name(const std::string& s);
const char* relation_name(Relation r);
Relation relation_from_name(const std::string& s);

// Boolean state attributes; only object and furniture entities carry them.
struct AttributeState {
  std::map<std::string, bool> values;  // keys in {clean, filled, powered_on}

  bool operator==(const AttributeState& o) const = default;
};

struct Entity {
  std::string handle;
  EntityKind kind = EntityKind::object;
  AttributeState attrs;
  Openness openness = Openness::not_articulated;

  bool operator==(const Entity& o) const = default;
};

// Per-agent physical state carried by the world; belief/observation sets live
// in AgentView, not here.
struct AgentState {
  std::string location;
  std::optional<std::string> held;
  std::set<std::string> visited;

  bool operator==(const AgentState& o) const = default;
};

using RelationTriple = std::tuple<std::string, Relation, std::string>;

// Ground-truth labeled containment tree plus symbolic spatial relations.
// Values are immutable snapshots: transitions copy and return a new graph.
struct SceneGraph {
  std::string scene_id;
  std::map<std::string, Entity> entities;
  std::map<std::string, std::string> parent;  // child -> parent; held objects absent
  std::set<RelationTriple> relations;
  std::array<AgentState, 2> agents;

  bool has(const std::string& handle) const { return entities.count(handle) > 0; }
  EntityKind kind_of(const std::string& handle) const;
  // Room containing the entity (the entity itself if it is a room).
  std::optional<std::string> room_of(const std::string& handle) const;
  bool is_concealed(const std::string& handle) const;
  std::vector<std::string> rooms_sorted() const;

  bool operator==(const SceneGraph& o) const = default;
};

// Parses and validates a scene document. Throws SceneError naming the
// offending entity on schema violations, duplicate handles, parent cycles,
// or kind-hierarchy violations.
SceneGraph load_scene(const json& document);
SceneGraph load_scene_file(const std::string& path);

// Canonical document form: entities sorted by handle, relations sorted.
json scene_to_document(const SceneGraph& scene);

// Validates all structural invariants; throws SceneError on the first breach.
// Held objects (absent from the parent map) are exempt from the tree check.
void validate_scene(const SceneGraph& scene);

// The room, its furniture, and every non-concealed object in the room.
// Objects inside a closed receptacle are excluded.
std::set<std::string> visible_entities(const SceneGraph& scene, const std::string& room);

}  // namespace alignsim
