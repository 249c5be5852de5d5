#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "alignsim/scene.hpp"

namespace alignsim {

class TraceError : public std::runtime_error {
 public:
  explicit TraceError(const std::string& what) : std::runtime_error(what) {}
};

enum class EventKind {
  action,
  action_failure,
  observation,
  message_sent,
  message_received,
  replan,
  snapshot,
  terminal,
};

const char* event_kind_name(EventKind k);
EventKind event_kind_from_name(const std::string& s);

struct Event {
  long long t = 0;
  int agent = -1;  // -1 for episode-level events (terminal)
  EventKind kind = EventKind::action;
  json payload;

  bool operator==(const Event& o) const = default;
};

constexpr int kTraceVersion = 1;

struct TraceHeader {
  int trace_version = kTraceVersion;
  std::string episode_id;
  json config;     // serialized SimConfig plus policy names
  json scene;      // canonical scene document at episode start
  json eval_spec;  // task propositions and constraints
};

// Append-only event log; the carrier every metric is computed from.
struct EpisodeTrace {
  TraceHeader header;
  std::vector<Event> events;

  // Status recorded by the final terminal event; empty if the trace is
  // incomplete.
  std::string status() const;

  // Line-delimited canonical form: header line followed by one event per
  // line. Parsing and re-serializing is byte-identical.
  std::string to_lines() const;
  static EpisodeTrace from_lines(const std::string& text);
};

void write_trace_file(const EpisodeTrace& trace, const std::string& path);
EpisodeTrace read_trace_file(const std::string& path);

// Both agents' knowledge sets at one instant, as recorded by a snapshot
// event. Handle lists serialize sorted.
struct Snapshot {
  long long t = 0;
  std::array<std::set<std::string>, 2> observed;
  std::array<std::set<std::string>, 2> believed;
  std::array<std::string, 2> location;
  std::array<std::optional<std::string>, 2> held;
};

json snapshot_to_payload(const Snapshot& s);
Snapshot snapshot_from_payload(long long t, const json& payload);

}  // namespace alignsim
