#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "alignsim/scene.hpp"
#include "alignsim/trace.hpp"

namespace alignsim {

class EvalError : public std::runtime_error {
 public:
  explicit EvalError(const std::string& what) : std::runtime_error(what) {}
};

enum class Predicate { is_on, is_inside, is_next_to, is_clean, is_filled, is_powered_on };

const char* predicate_name(Predicate p);
Predicate predicate_from_name(const std::string& s);
int predicate_arity(Predicate p);

struct Proposition {
  Predicate pred = Predicate::is_on;
  std::vector<std::string> args;
};

// before(i, j): proposition j only counts as complete if i was first
// satisfied no later than j.
struct Constraint {
  int before_i = 0;
  int before_j = 0;
};

struct EvalSpec {
  std::string instruction;  // informational only
  std::vector<Proposition> propositions;
  std::vector<Constraint> constraints;
};

json eval_spec_to_json(const EvalSpec& spec);
EvalSpec eval_spec_from_json(const json& j);
EvalSpec load_eval_spec_file(const std::string& path);

// Validates arity, constraint indices, and that every referenced handle
// exists in the scene. Throws EvalError.
void validate_eval_spec(const EvalSpec& spec, const SceneGraph& scene);

// Truth of one proposition against a world snapshot. Spatial predicates read
// the symbolic relation set (is_next_to in either direction); state
// predicates read attributes.
bool proposition_holds(const Proposition& p, const SceneGraph& scene);

struct EvalResult {
  std::vector<std::optional<long long>> first_satisfied;  // tau_i
  std::vector<bool> complete;
  double pc = 0.0;
  int sr = 0;
};

// Replays the trace's scene diffs over the header scene and scores the spec:
// tau_i is the first step each proposition holds, completion additionally
// requires every before() constraint, PC is the completed fraction and
// SR = 1 iff PC = 1.
EvalResult evaluate(const EpisodeTrace& trace, const EvalSpec& spec);

struct EpisodeScore {
  int sr = 0;
  double pc = 0.0;
  std::optional<double> conflict;
};

struct PairedDeltas {
  std::optional<double> d_sr;
  std::optional<double> d_pc;
  std::optional<double> d_conflict;
  std::size_t episodes = 0;           // intersected episode count
  std::size_t conflict_episodes = 0;  // subset where both sides define conflict
  std::vector<std::string> ids;       // the intersected, sorted episode ids
};

// mean(A) - mean(B) over the intersection of episode ids; episodes missing
// from either side are dropped from both.
PairedDeltas paired_deltas(const std::map<std::string, EpisodeScore>& a,
                           const std::map<std::string, EpisodeScore>& b);

}  // namespace alignsim
