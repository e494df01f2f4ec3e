#include "strom/protocol.hpp"

#include <set>

#include "strom/errors.hpp"

namespace strom {

namespace {

using J = nlohmann::ordered_json;

std::string dump_line(const J& j) { return j.dump(); }

nlohmann::json parse_line(const std::string& line) {
  try {
    return nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw DecodeError(e.byte, e.what());
  }
}

void check_keys(const nlohmann::json& j, const std::set<std::string>& allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.count(it.key())) throw DecodeError(0, "unknown key \"" + it.key() + "\"");
  }
}

std::uint64_t get_version(const nlohmann::json& j) {
  if (!j.contains("version") || !j["version"].is_number_unsigned()) {
    throw DecodeError(0, "missing or invalid version");
  }
  return j["version"].get<std::uint64_t>();
}

State get_state(const nlohmann::json& j) {
  if (!j.contains("state")) throw DecodeError(0, "missing state");
  return State::from_json(j["state"]);
}

}  // namespace

std::string encode(const CheckerMessage& msg) {
  J j;
  if (const auto* start = std::get_if<StartMsg>(&msg)) {
    j["tag"] = "Start";
    j["dependencies"] = start->dependencies;
  } else if (const auto* act = std::get_if<ActMsg>(&msg)) {
    j["tag"] = "Act";
    j["action"] = act->action.to_json();
    j["version"] = act->version;
    if (act->timeout_ms) j["timeout"] = *act->timeout_ms;
  } else if (const auto* wait = std::get_if<WaitMsg>(&msg)) {
    j["tag"] = "Wait";
    j["time"] = wait->time_ms;
    j["version"] = wait->version;
  } else {
    j["tag"] = "End";
  }
  return dump_line(j);
}

std::string encode(const ExecutorMessage& msg) {
  J j;
  if (const auto* ev = std::get_if<EventMsg>(&msg)) {
    j["tag"] = "Event";
    j["event"] = ev->event.to_json();
    j["state"] = ev->state.to_json();
    j["version"] = ev->version;
  } else if (const auto* acted = std::get_if<ActedMsg>(&msg)) {
    j["tag"] = "Acted";
    j["state"] = acted->state.to_json();
    j["version"] = acted->version;
  } else if (const auto* to = std::get_if<TimeoutMsg>(&msg)) {
    j["tag"] = "Timeout";
    j["state"] = to->state.to_json();
    j["version"] = to->version;
  } else {
    j["tag"] = "Stale";
    j["version"] = std::get<StaleMsg>(msg).version;
  }
  return dump_line(j);
}

CheckerMessage decode_checker_message(const std::string& line) {
  nlohmann::json j = parse_line(line);
  if (!j.is_object() || !j.contains("tag") || !j["tag"].is_string()) {
    throw DecodeError(0, "message must be an object with a string tag");
  }
  const std::string tag = j["tag"].get<std::string>();
  if (tag == "Start") {
    check_keys(j, {"tag", "dependencies"});
    if (!j.contains("dependencies") || !j["dependencies"].is_array()) {
      throw DecodeError(0, "Start needs a dependencies array");
    }
    StartMsg m;
    for (const auto& d : j["dependencies"]) {
      if (!d.is_string()) throw DecodeError(0, "dependencies must be strings");
      m.dependencies.push_back(d.get<std::string>());
    }
    return m;
  }
  if (tag == "Act") {
    check_keys(j, {"tag", "action", "version", "timeout"});
    if (!j.contains("action")) throw DecodeError(0, "Act needs an action");
    ActMsg m;
    m.action = Descriptor::from_json(j["action"]);
    m.version = get_version(j);
    if (j.contains("timeout")) {
      if (!j["timeout"].is_number_integer() && !j["timeout"].is_number_unsigned()) {
        throw DecodeError(0, "timeout must be integer milliseconds");
      }
      m.timeout_ms = j["timeout"].get<std::int64_t>();
    }
    return m;
  }
  if (tag == "Wait") {
    check_keys(j, {"tag", "time", "version"});
    if (!j.contains("time") || !j["time"].is_number_integer()) {
      if (!j.contains("time") || !j["time"].is_number_unsigned()) {
        throw DecodeError(0, "Wait needs integer time");
      }
    }
    WaitMsg m;
    m.time_ms = j["time"].get<std::int64_t>();
    m.version = get_version(j);
    return m;
  }
  if (tag == "End") {
    check_keys(j, {"tag"});
    return EndMsg{};
  }
  throw DecodeError(0, "unknown tag \"" + tag + "\"");
}

ExecutorMessage decode_executor_message(const std::string& line) {
  nlohmann::json j = parse_line(line);
  if (!j.is_object() || !j.contains("tag") || !j["tag"].is_string()) {
    throw DecodeError(0, "message must be an object with a string tag");
  }
  const std::string tag = j["tag"].get<std::string>();
  if (tag == "Event") {
    check_keys(j, {"tag", "event", "state", "version"});
    if (!j.contains("event")) throw DecodeError(0, "Event needs an event descriptor");
    EventMsg m;
    m.event = Descriptor::from_json(j["event"]);
    m.state = get_state(j);
    m.version = get_version(j);
    return m;
  }
  if (tag == "Acted") {
    check_keys(j, {"tag", "state", "version"});
    ActedMsg m;
    m.state = get_state(j);
    m.version = get_version(j);
    return m;
  }
  if (tag == "Timeout") {
    check_keys(j, {"tag", "state", "version"});
    TimeoutMsg m;
    m.state = get_state(j);
    m.version = get_version(j);
    return m;
  }
  if (tag == "Stale") {
    check_keys(j, {"tag", "version"});
    StaleMsg m;
    m.version = get_version(j);
    return m;
  }
  throw DecodeError(0, "unknown tag \"" + tag + "\"");
}

std::string message_name(const CheckerMessage& msg) {
  switch (msg.index()) {
    case 0: return "Start";
    case 1: return "Act";
    case 2: return "Wait";
    default: return "End";
  }
}

std::string message_name(const ExecutorMessage& msg) {
  switch (msg.index()) {
    case 0: return "Event";
    case 1: return "Acted";
    case 2: return "Timeout";
    default: return "Stale";
  }
}

}  // namespace strom
