#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "alignsim/evaluation.hpp"
#include "alignsim/metrics.hpp"
#include "alignsim/trace.hpp"

namespace alignsim {

class ReportError : public std::runtime_error {
 public:
  explicit ReportError(const std::string& what) : std::runtime_error(what) {}
};

struct EpisodeRow {
  std::string episode_id;
  std::string condition;
  std::string status;
  int sr = 0;
  double pc = 0.0;
  std::optional<double> conflict;
  long long joint_rounds = 0;
  long long turns = 0;  // messages sent
  long long steps = 0;  // charged simulator steps
  double oc_final = 0.0;
  double bc_final = 0.0;
  double delta_align_final = 0.0;
  std::optional<double> delta_align_grounded_final;
};

struct InRow {
  std::string episode_id;
  std::string condition;
  long long t = 0;
  int sender = 0;
  long long novel = 0;     // mentions in V_s \ V_r
  long long mentions = 0;  // |mu(m)|
  std::optional<double> value;
};

struct TrajectoryRow {
  std::string episode_id;
  std::string condition;
  AlignmentPoint point;
};

struct ConditionAggregate {
  std::string condition;
  std::size_t episodes = 0;
  double sr = 0.0;
  double pc = 0.0;
  std::optional<double> conflict;  // mean over episodes where defined
  std::size_t conflict_episodes = 0;
  double turns = 0.0;
  double steps = 0.0;
  double oc = 0.0;
  double bc = 0.0;
  double delta_align = 0.0;
  std::optional<double> delta_align_grounded;
};

struct ReportBundle {
  bool grounded = false;
  std::vector<EpisodeRow> episodes;
  std::vector<ConditionAggregate> aggregates;
  std::map<std::string, ClassificationCounts> classification;  // per condition
  std::map<std::string, BsmReport> bsm_pooled;                 // mention-weighted
  std::map<std::string, BsmReport> bsm_unweighted;
  std::vector<InRow> in_table;
  std::vector<TrajectoryRow> trajectories;
};

json bundle_to_json(const ReportBundle& b);
ReportBundle bundle_from_json(const json& j);

struct AnalyzeOptions {
  std::optional<std::string> specs_dir;  // <dir>/<episode_id>.task.json overrides embedded specs
  bool grounded = false;
  bool audit = false;
};

// Computes the full metric suite over a set of trace files. With audit set,
// every aggregate is recomputed from its rows and internal consistency
// (Eq-style belief replay, classification partition) is verified; a failed
// audit throws ReportError.
ReportBundle analyze_traces(const std::vector<std::string>& trace_paths,
                            const AnalyzeOptions& options);

// Per-episode scores keyed by episode id, for paired comparison.
std::map<std::string, EpisodeScore> bundle_scores(const ReportBundle& b);

std::string render_table(const ReportBundle& b);
std::string render_rows(const ReportBundle& b);
std::string render_compare(const PairedDeltas& d);

}  // namespace alignsim
