#include "strom/descriptor.hpp"

#include "strom/errors.hpp"

namespace strom {

std::string Descriptor::display() const {
  if (args.empty()) return id;
  std::string s = id + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) s += ",";
    s += args[i].is_string() ? args[i].as_string() : args[i].to_display();
  }
  return s + ")";
}

nlohmann::ordered_json Descriptor::to_json() const {
  nlohmann::ordered_json j;
  j["id"] = id;
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const Value& v : args) a.push_back(v.to_json());
  j["args"] = a;
  return j;
}

Descriptor Descriptor::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("id") || !j["id"].is_string()) {
    throw DecodeError(0, "descriptor needs a string id");
  }
  Descriptor d;
  d.id = j["id"].get<std::string>();
  if (d.id.empty()) throw DecodeError(0, "descriptor id must be non-empty");
  if (j.contains("args")) {
    if (!j["args"].is_array()) throw DecodeError(0, "descriptor args must be an array");
    for (const auto& a : j["args"]) d.args.push_back(Value::from_json(a));
  }
  return d;
}

}  // namespace strom
