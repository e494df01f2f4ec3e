#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "strom/value.hpp"

namespace strom {

/// Uniform carrier for interaction primitives ("click" on "#toggle") and
/// event kinds ("changed" of "#remaining"). id is never empty.
struct Descriptor {
  std::string id;
  std::vector<Value> args;

  friend bool operator==(const Descriptor& a, const Descriptor& b) {
    return a.id == b.id && a.args == b.args;
  }
  friend bool operator!=(const Descriptor& a, const Descriptor& b) { return !(a == b); }

  /// Canonical display form: `id` or `id(arg1,arg2)` with string args bare.
  std::string display() const;

  nlohmann::ordered_json to_json() const;
  static Descriptor from_json(const nlohmann::json& j);
};

}  // namespace strom
