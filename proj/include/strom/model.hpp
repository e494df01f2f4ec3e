#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "strom/expr.hpp"
#include "strom/value.hpp"

namespace strom {

/// Guarded-command labeled transition system used as a deterministic,
/// desk-scale system under test. Field updates in one action or event fire
/// atomically: every right-hand side is evaluated against the pre-state.
struct ModelAction {
  std::string key;  // canonical descriptor form, e.g. "click(#toggle)"
  ExprPtr guard;    // null = always effective
  std::vector<std::pair<std::string, ExprPtr>> effects;
};

struct ModelEvent {
  enum class Schedule { periodic, after_action };

  std::string id;
  std::optional<std::string> subject;  // published as {"id":"changed","args":[subject]}
  ExprPtr enabled;                     // null = always
  Schedule schedule = Schedule::periodic;
  std::int64_t period_ms = 0;   // periodic
  std::int64_t delay_ms = 0;    // after_action
  std::string trigger;          // after_action: canonical action key
  std::vector<std::pair<std::string, ExprPtr>> effects;
};

struct Model {
  std::map<std::string, Value> initial_state;
  std::map<std::string, ModelAction> actions;
  std::vector<ModelEvent> events;
  std::int64_t loaded_delay_ms = 0;
};

/// Validates and compiles a model document (JSON with top-level keys
/// `state`, `actions`, `events`, `loadedDelay`; expression strings use the
/// specification expression grammar). Throws ModelError with a path into the
/// document.
Model load_model(const nlohmann::json& doc);
Model load_model_file(const std::string& path);

}  // namespace strom
