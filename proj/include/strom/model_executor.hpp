#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "strom/model.hpp"
#include "strom/protocol.hpp"

namespace strom {

/// Drives a model as the system under test, one protocol session at a time.
///
/// Time is logical: the clock only advances while the checker is waiting
/// (a Wait request or an Act with a timeout), firing due occurrences in
/// timestamp order with FIFO tie-breaking. Each handle() call returns every
/// message the executor emits before it needs checker input again, so a
/// session transcript is fully determined by the request sequence.
class ModelExecutor {
public:
  explicit ModelExecutor(Model model, bool realtime = false);

  /// Processes one checker message. Throws ProtocolViolationError for
  /// Act/Wait before Start or unknown actions, UnknownDependencyError for a
  /// Start naming fields the model does not declare.
  std::vector<ExecutorMessage> handle(const CheckerMessage& msg);

  std::int64_t now() const { return now_; }
  std::uint64_t trace_length() const { return trace_len_; }
  const std::map<std::string, Value>& current_fields() const { return fields_; }

private:
  struct PendingOccurrence {
    std::int64_t due = 0;
    std::uint64_t seq = 0;   // FIFO tie-break on equal due times
    int event_index = -1;    // -1 = the built-in loaded event
  };

  void reset_session(const std::vector<std::string>& dependencies);
  State snapshot(std::vector<std::string> happened) const;
  void apply_effects(const std::vector<std::pair<std::string, ExprPtr>>& effects);
  bool event_enabled(const ModelEvent& e) const;
  void schedule(std::int64_t due, int event_index);
  std::optional<PendingOccurrence> pop_next_before(std::int64_t deadline);

  /// Advances the clock toward `deadline`; emits the first fired event, or a
  /// Timeout at the deadline if nothing fires.
  void advance_until(std::int64_t deadline, std::vector<ExecutorMessage>& out);

  Model model_;
  bool realtime_ = false;

  bool in_session_ = false;
  std::map<std::string, Value> fields_;
  std::vector<std::string> dependencies_;
  std::int64_t now_ = 0;
  std::uint64_t trace_len_ = 0;
  std::uint64_t seq_ = 0;
  std::vector<PendingOccurrence> pending_;
};

}  // namespace strom
