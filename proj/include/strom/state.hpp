#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "strom/value.hpp"

namespace strom {

/// One observed snapshot of the system under test: the requested fields plus
/// `happened`, the names of the actions/events that immediately produced it.
struct State {
  std::map<std::string, Value> fields;
  std::vector<std::string> happened;

  friend bool operator==(const State& a, const State& b) {
    return a.fields == b.fields && a.happened == b.happened;
  }
  friend bool operator!=(const State& a, const State& b) { return !(a == b); }

  /// Wire form: a flat object of fields with the reserved key "happened".
  nlohmann::ordered_json to_json() const;
  static State from_json(const nlohmann::json& j);
};

}  // namespace strom
