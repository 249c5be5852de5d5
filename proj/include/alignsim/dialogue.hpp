#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "alignsim/scene.hpp"

namespace alignsim {

enum class Architecture { silent, sc, acf };

const char* architecture_name(Architecture a);
Architecture architecture_from_name(const std::string& s);

// Speech-act tags; OTHER is the fallback for untagged or unknown-tag text.
enum class IntentTag { plan, status, confirm, blocked, correct, other };

const char* intent_name(IntentTag t);
IntentTag intent_from_name(const std::string& s);

// Leading bracketed token, case-insensitive: "[STATUS] ..." -> status.
IntentTag parse_intent(const std::string& text);

struct Message {
  int sender = 0;
  long long t = 0;
  IntentTag intent = IntentTag::other;
  std::string text;
  std::vector<std::string> mentions;  // deduplicated, first-occurrence order

  bool operator==(const Message& o) const = default;
};

json message_to_json(const Message& m);
Message message_from_json(const json& j);

class ChannelUnavailableError : public std::runtime_error {
 public:
  explicit ChannelUnavailableError(const std::string& what) : std::runtime_error(what) {}
};

// Shared append-only buffer; one per episode, owned by the engine.
struct MessageBuffer {
  std::vector<Message> messages;
};

// Appends a message with extracted intent and mentions. Throws
// ChannelUnavailableError under the silent architecture. Step charging is the
// caller's concern (see charge_step).
const Message& send(MessageBuffer& buffer, int sender, const std::string& text, long long t,
                    Architecture architecture);

// Returns partner messages at index >= cursor and advances the cursor past
// everything seen, own messages included. Free of charge.
std::vector<Message> read_new(const MessageBuffer& buffer, int reader, std::size_t& cursor);

}  // namespace alignsim
