#include "strom/state.hpp"

#include "strom/errors.hpp"

namespace strom {

nlohmann::ordered_json State::to_json() const {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (const auto& [k, v] : fields) obj[k] = v.to_json();
  obj["happened"] = happened;
  return obj;
}

State State::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DecodeError(0, "state must be an object");
  State s;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() == "happened") {
      if (!it.value().is_array()) throw DecodeError(0, "happened must be an array");
      for (const auto& e : it.value()) {
        if (!e.is_string()) throw DecodeError(0, "happened entries must be strings");
        s.happened.push_back(e.get<std::string>());
      }
    } else {
      s.fields[it.key()] = Value::from_json(it.value());
    }
  }
  return s;
}

}  // namespace strom
