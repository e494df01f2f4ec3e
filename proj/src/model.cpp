#include "strom/model.hpp"

#include <fstream>

#include "strom/elaborate.hpp"
#include "strom/errors.hpp"
#include "strom/parser.hpp"

namespace strom {

namespace {

ExprPtr compile_expr(const std::string& source, const std::string& path) {
  try {
    return elaborate_pure_expr(*parse_expression(source));
  } catch (const Error& e) {
    throw ModelError(path, e.what());
  }
}

void check_fields_declared(const Expr& e, const std::map<std::string, Value>& declared,
                           const std::string& path) {
  std::vector<std::string> fields;
  collect_fields(e, fields);
  for (const std::string& f : fields) {
    if (!declared.count(f)) {
      throw ModelError(path, "expression reads undeclared field \"" + f + "\"");
    }
  }
}

std::vector<std::pair<std::string, ExprPtr>> load_effects(const nlohmann::json& j,
                                                          const Model& model,
                                                          const std::string& path) {
  if (!j.is_object()) throw ModelError(path, "effects must be an object of field -> expression");
  std::vector<std::pair<std::string, ExprPtr>> out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!model.initial_state.count(it.key())) {
      throw ModelError(path + "." + it.key(), "effect writes undeclared field");
    }
    if (!it.value().is_string()) {
      throw ModelError(path + "." + it.key(), "effect must be an expression string");
    }
    ExprPtr e = compile_expr(it.value().get<std::string>(), path + "." + it.key());
    check_fields_declared(*e, model.initial_state, path + "." + it.key());
    out.emplace_back(it.key(), std::move(e));
  }
  return out;
}

}  // namespace

Model load_model(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ModelError("$", "model document must be a JSON object");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string& k = it.key();
    if (k != "state" && k != "actions" && k != "events" && k != "loadedDelay") {
      throw ModelError("$." + k, "unknown top-level key");
    }
  }
  Model m;

  if (!doc.contains("state") || !doc["state"].is_object()) {
    throw ModelError("$.state", "missing state object");
  }
  for (auto it = doc["state"].begin(); it != doc["state"].end(); ++it) {
    m.initial_state[it.key()] = Value::from_json(it.value());
  }

  if (doc.contains("loadedDelay")) {
    if (!doc["loadedDelay"].is_number_integer() && !doc["loadedDelay"].is_number_unsigned()) {
      throw ModelError("$.loadedDelay", "must be integer milliseconds");
    }
    m.loaded_delay_ms = doc["loadedDelay"].get<std::int64_t>();
    if (m.loaded_delay_ms < 0) throw ModelError("$.loadedDelay", "must be non-negative");
  }

  if (doc.contains("actions")) {
    if (!doc["actions"].is_object()) throw ModelError("$.actions", "must be an object");
    for (auto it = doc["actions"].begin(); it != doc["actions"].end(); ++it) {
      const std::string path = "$.actions." + it.key();
      if (!it.value().is_object()) throw ModelError(path, "must be an object");
      ModelAction a;
      a.key = it.key();
      for (auto f = it.value().begin(); f != it.value().end(); ++f) {
        if (f.key() != "guard" && f.key() != "effects") {
          throw ModelError(path + "." + f.key(), "unknown key");
        }
      }
      if (it.value().contains("guard")) {
        if (!it.value()["guard"].is_string()) {
          throw ModelError(path + ".guard", "guard must be an expression string");
        }
        a.guard = compile_expr(it.value()["guard"].get<std::string>(), path + ".guard");
        check_fields_declared(*a.guard, m.initial_state, path + ".guard");
      }
      if (it.value().contains("effects")) {
        a.effects = load_effects(it.value()["effects"], m, path + ".effects");
      }
      m.actions[a.key] = std::move(a);
    }
  }

  if (doc.contains("events")) {
    if (!doc["events"].is_array()) throw ModelError("$.events", "must be an array");
    std::size_t i = 0;
    for (const auto& ej : doc["events"]) {
      const std::string path = "$.events[" + std::to_string(i++) + "]";
      if (!ej.is_object()) throw ModelError(path, "must be an object");
      ModelEvent e;
      for (auto f = ej.begin(); f != ej.end(); ++f) {
        const std::string& k = f.key();
        if (k != "id" && k != "subject" && k != "enabled" && k != "periodic" &&
            k != "afterAction" && k != "delay" && k != "effects") {
          throw ModelError(path + "." + k, "unknown key");
        }
      }
      if (!ej.contains("id") || !ej["id"].is_string()) {
        throw ModelError(path + ".id", "event needs a string id");
      }
      e.id = ej["id"].get<std::string>();
      if (e.id.empty() || e.id == "loaded") {
        throw ModelError(path + ".id", "invalid event id \"" + e.id + "\"");
      }
      if (ej.contains("subject")) {
        if (!ej["subject"].is_string()) throw ModelError(path + ".subject", "must be a string");
        e.subject = ej["subject"].get<std::string>();
      }
      if (ej.contains("enabled")) {
        if (!ej["enabled"].is_string()) {
          throw ModelError(path + ".enabled", "must be an expression string");
        }
        e.enabled = compile_expr(ej["enabled"].get<std::string>(), path + ".enabled");
        check_fields_declared(*e.enabled, m.initial_state, path + ".enabled");
      }
      const bool periodic = ej.contains("periodic");
      const bool after = ej.contains("afterAction");
      if (periodic == after) {
        throw ModelError(path, "event needs exactly one of periodic / afterAction");
      }
      if (periodic) {
        if (!ej["periodic"].is_number_integer() && !ej["periodic"].is_number_unsigned()) {
          throw ModelError(path + ".periodic", "must be integer milliseconds");
        }
        e.schedule = ModelEvent::Schedule::periodic;
        e.period_ms = ej["periodic"].get<std::int64_t>();
        if (e.period_ms <= 0) throw ModelError(path + ".periodic", "must be positive");
      } else {
        if (!ej["afterAction"].is_string()) {
          throw ModelError(path + ".afterAction", "must name an action");
        }
        e.schedule = ModelEvent::Schedule::after_action;
        e.trigger = ej["afterAction"].get<std::string>();
        if (!m.actions.count(e.trigger)) {
          throw ModelError(path + ".afterAction", "unknown action \"" + e.trigger + "\"");
        }
        if (ej.contains("delay")) {
          if (!ej["delay"].is_number_integer() && !ej["delay"].is_number_unsigned()) {
            throw ModelError(path + ".delay", "must be integer milliseconds");
          }
          e.delay_ms = ej["delay"].get<std::int64_t>();
          if (e.delay_ms < 0) throw ModelError(path + ".delay", "must be non-negative");
        }
      }
      if (ej.contains("effects")) e.effects = load_effects(ej["effects"], m, path + ".effects");
      m.events.push_back(std::move(e));
    }
  }
  return m;
}

Model load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("$", "cannot open model file: " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ModelError("$", std::string("invalid JSON: ") + e.what());
  }
  return load_model(doc);
}

}  // namespace strom
