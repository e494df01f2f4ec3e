#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "strom/descriptor.hpp"
#include "strom/state.hpp"

namespace strom {

// Checker -> executor. Every versioned request carries the checker's view of
// the trace length at send time; the executor rejects anything else.

struct StartMsg {
  std::vector<std::string> dependencies;
};

struct ActMsg {
  Descriptor action;
  std::uint64_t version = 0;
  std::optional<std::int64_t> timeout_ms;
};

struct WaitMsg {
  std::int64_t time_ms = 0;
  std::uint64_t version = 0;
};

struct EndMsg {};

using CheckerMessage = std::variant<StartMsg, ActMsg, WaitMsg, EndMsg>;

// Executor -> checker. The version is the executor's trace length after
// appending the carried state; Stale carries the current length and no state.

struct EventMsg {
  Descriptor event;
  State state;
  std::uint64_t version = 0;
};

struct ActedMsg {
  State state;
  std::uint64_t version = 0;
};

struct TimeoutMsg {
  State state;
  std::uint64_t version = 0;
};

struct StaleMsg {
  std::uint64_t version = 0;
};

using ExecutorMessage = std::variant<EventMsg, ActedMsg, TimeoutMsg, StaleMsg>;

/// One message per line: a JSON object with a "tag" discriminator, no
/// embedded newlines. decode(encode(m)) == m for every valid message.
std::string encode(const CheckerMessage& msg);
std::string encode(const ExecutorMessage& msg);

/// Throw DecodeError on malformed input, unknown tags, or unknown keys.
CheckerMessage decode_checker_message(const std::string& line);
ExecutorMessage decode_executor_message(const std::string& line);

/// A request is accepted only when its version equals the executor's current
/// trace length; anything else (older or newer) is answered with Stale and
/// performs nothing, so one request causes at most one transition.
inline bool executor_accepts(std::uint64_t act_version, std::uint64_t executor_trace_length) {
  return act_version == executor_trace_length;
}

std::string message_name(const CheckerMessage& msg);
std::string message_name(const ExecutorMessage& msg);

}  // namespace strom
