#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "alignsim/action.hpp"
#include "alignsim/dialogue.hpp"
#include "alignsim/mentions.hpp"
#include "alignsim/trace.hpp"

namespace alignsim {

// |A ∩ B| / |A ∪ B|, with the empty-vs-empty case defined as 1.
double jaccard(const std::set<std::string>& a, const std::set<std::string>& b);

// A snapshot enriched with reconstructed grounded belief sets (mentions
// filtered to V_s ∪ V_r at send time before applying the belief update).
struct AlignmentSnapshot {
  long long t = 0;
  std::array<std::set<std::string>, 2> observed;
  std::array<std::set<std::string>, 2> believed;
  std::array<std::set<std::string>, 2> grounded_believed;
};

double observation_convergence(const AlignmentSnapshot& s);
double belief_convergence(const AlignmentSnapshot& s);
double alignment_gap(const AlignmentSnapshot& s, bool grounded);

// Fraction of a message's mentions the receiver has not directly observed.
// Empty mention sets have no defined value and are excluded from aggregates.
std::optional<double> information_novelty(const Message& m, const std::set<std::string>& v_sender,
                                          const std::set<std::string>& v_receiver);

struct AlignmentPoint {
  long long t = 0;
  double oc = 0.0;
  double bc = 0.0;
  double delta_align = 0.0;
  double delta_align_grounded = 0.0;
};

// A message joined with the observation sets at its timestamp.
struct MessageRecord {
  Message message;
  std::size_t buffer_index = 0;
  std::set<std::string> v_sender;
  std::set<std::string> v_receiver;
};

// Round-indexed action decisions, for conflict accounting.
struct RoundActions {
  std::array<std::optional<Action>, 2> action;
};

// One walk over a trace that everything downstream shares: snapshots with
// grounded belief reconstruction, messages joined to their send-time sets,
// per-round action pairs, and step-charge audit totals.
struct TraceAnalysis {
  std::vector<AlignmentSnapshot> snapshots;
  std::vector<MessageRecord> messages;
  std::map<long long, RoundActions> rounds;
  long long steps_charged_total = 0;
  long long steps_charged_communication = 0;
  long long steps_charged_perception = 0;

  static TraceAnalysis from_trace(const EpisodeTrace& trace);
};

std::vector<AlignmentPoint> trajectories(const EpisodeTrace& trace);
std::vector<AlignmentPoint> trajectories(const TraceAnalysis& analysis);

struct BsmStratum {
  double value = 0.0;
  long long mention_count = 0;
  long long message_count = 0;
};

struct BsmReport {
  std::optional<double> pooled;  // absent when no qualifying message exists
  long long mention_count = 0;
  long long message_count = 0;
  std::map<IntentTag, BsmStratum> per_intent;  // strata with zero mentions are absent
  bool mention_weighted = true;
};

// p_ment - p_base pooled over qualifying messages (nonempty mentions and
// nonempty sender observation set). mention_weighted pools by mention count;
// otherwise messages weigh equally.
BsmReport bsm(const EpisodeTrace& trace, bool mention_weighted = true);
BsmReport bsm(const TraceAnalysis& analysis, bool mention_weighted = true);

struct ConflictReport {
  std::optional<double> rate;  // absent when there are no joint-replan rounds
  long long joint_rounds = 0;
  long long matching_rounds = 0;
};

// Fraction of rounds where both agents decided and chose the same
// (tool, args). Wait and Done never count as matches.
ConflictReport conflict_rate(const EpisodeTrace& trace);
ConflictReport conflict_rate(const TraceAnalysis& analysis);

}  // namespace alignsim
