#include "strom/value.hpp"

#include <cmath>
#include <sstream>

namespace strom {

const char* Value::type_name() const {
  switch (v_.index()) {
    case 0: return "null";
    case 1: return "boolean";
    case 2: return "number";
    case 3: return "string";
    case 4: return "sequence";
    default: return "map";
  }
}

std::string number_to_string(double n) {
  if (std::isfinite(n) && n == std::floor(n) && std::abs(n) < 9.007199254740992e15) {
    return std::to_string(static_cast<std::int64_t>(n));
  }
  std::ostringstream os;
  os.precision(17);
  os << n;
  return os.str();
}

nlohmann::ordered_json Value::to_json() const {
  using J = nlohmann::ordered_json;
  if (is_null()) return nullptr;
  if (is_bool()) return as_bool();
  if (is_number()) {
    double n = as_number();
    if (std::isfinite(n) && n == std::floor(n) && std::abs(n) < 9.007199254740992e15) {
      return static_cast<std::int64_t>(n);
    }
    return n;
  }
  if (is_string()) return as_string();
  if (is_seq()) {
    J arr = J::array();
    for (const Value& v : as_seq()) arr.push_back(v.to_json());
    return arr;
  }
  J obj = J::object();
  for (const auto& [k, v] : as_map()) obj[k] = v.to_json();
  return obj;
}

Value Value::from_json(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null: return Value();
    case nlohmann::json::value_t::boolean: return Value(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
    case nlohmann::json::value_t::number_unsigned:
    case nlohmann::json::value_t::number_float:
      return Value(j.get<double>());
    case nlohmann::json::value_t::string: return Value(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      Seq s;
      s.reserve(j.size());
      for (const auto& e : j) s.push_back(from_json(e));
      return Value(std::move(s));
    }
    case nlohmann::json::value_t::object: {
      Map m;
      for (auto it = j.begin(); it != j.end(); ++it) m[it.key()] = from_json(it.value());
      return Value(std::move(m));
    }
    default:
      throw EvalError("unsupported JSON value kind");
  }
}

}  // namespace strom
