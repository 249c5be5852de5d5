#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace alignsim {

// Entity handles are lowercase word tokens ending in an underscore-delimited
// decimal index: counter_68, toy_pineapple_0, kitchen_1.
bool is_handle(std::string_view token);

// Splits a handle into (base, index). Empty if the token is not a handle.
std::optional<std::pair<std::string, int>> parse_handle(std::string_view token);

// Extracts every maximal word token that is a handle, deduplicated in
// first-occurrence order. Prose references ("the lamp") are never resolved.
std::vector<std::string> extract_mentions(std::string_view text);

enum class HandleClass { both, only_sender, only_receiver, neither };

const char* handle_class_name(HandleClass c);

// Four-way classification of a mentioned handle against the sender's and
// receiver's observation sets at mention time.
HandleClass classify(const std::string& handle, const std::set<std::string>& v_sender,
                     const std::set<std::string>& v_receiver);

struct ClassificationCounts {
  long long both = 0;
  long long only_sender = 0;
  long long only_receiver = 0;
  long long neither = 0;

  long long total() const { return both + only_sender + only_receiver + neither; }
  ClassificationCounts& operator+=(const ClassificationCounts& o);
  bool operator==(const ClassificationCounts& o) const = default;
};

struct EpisodeTrace;

// Classifies every mention of every message in the trace using the snapshot
// recorded at the message's timestamp. Throws TraceError if a message has no
// snapshot at its timestamp.
ClassificationCounts classify_trace(const EpisodeTrace& trace);

}  // namespace alignsim
