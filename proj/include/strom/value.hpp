#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "strom/errors.hpp"

namespace strom {

/// Dynamic value flowing through specs, states, and the wire: null, boolean,
/// double-precision number, string, sequence, or string-keyed map.
/// Equality is deep; numbers compare numerically.
class Value {
public:
  using Seq = std::vector<Value>;
  using Map = std::map<std::string, Value>;

  Value() : v_(nullptr) {}
  Value(std::nullptr_t) : v_(nullptr) {}
  Value(bool b) : v_(b) {}
  Value(double n) : v_(n) {}
  Value(int n) : v_(static_cast<double>(n)) {}
  Value(std::int64_t n) : v_(static_cast<double>(n)) {}
  Value(const char* s) : v_(std::string(s)) {}
  Value(std::string s) : v_(std::move(s)) {}
  Value(Seq s) : v_(std::move(s)) {}
  Value(Map m) : v_(std::move(m)) {}

  bool is_null() const { return std::holds_alternative<std::nullptr_t>(v_); }
  bool is_bool() const { return std::holds_alternative<bool>(v_); }
  bool is_number() const { return std::holds_alternative<double>(v_); }
  bool is_string() const { return std::holds_alternative<std::string>(v_); }
  bool is_seq() const { return std::holds_alternative<Seq>(v_); }
  bool is_map() const { return std::holds_alternative<Map>(v_); }

  bool as_bool() const { return expect<bool>("boolean"); }
  double as_number() const { return expect<double>("number"); }
  const std::string& as_string() const { return expect<std::string>("string"); }
  const Seq& as_seq() const { return expect<Seq>("sequence"); }
  const Map& as_map() const { return expect<Map>("map"); }

  const char* type_name() const;

  friend bool operator==(const Value& a, const Value& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

  /// JSON round-trip. Numbers are normalized to double on the way in; on the
  /// way out, integral doubles are emitted as JSON integers.
  nlohmann::ordered_json to_json() const;
  static Value from_json(const nlohmann::json& j);

  /// Compact single-line rendering (JSON syntax), used in reports.
  std::string to_display() const { return to_json().dump(); }

private:
  template <class T>
  const T& expect(const char* want) const {
    if (const T* p = std::get_if<T>(&v_)) return *p;
    throw EvalError(std::string("expected ") + want + ", got " + type_name());
  }

  std::variant<std::nullptr_t, bool, double, std::string, Seq, Map> v_;
};

/// Renders a number the way UI text would: integral values without a decimal
/// point, everything else in shortest round-trip form.
std::string number_to_string(double n);

}  // namespace strom
