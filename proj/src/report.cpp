#include "strom/report.hpp"

#include <sstream>

#include "strom/errors.hpp"

namespace strom {

namespace {

const char* cause_kind_name(Cause::Kind k) {
  switch (k) {
    case Cause::Kind::initial_event: return "initial";
    case Cause::Kind::action_performed: return "action";
    case Cause::Kind::event_occurred: return "event";
    default: return "timeout";
  }
}

Cause::Kind cause_kind_from(const std::string& s) {
  if (s == "initial") return Cause::Kind::initial_event;
  if (s == "action") return Cause::Kind::action_performed;
  if (s == "event") return Cause::Kind::event_occurred;
  if (s == "timeout") return Cause::Kind::timed_out;
  throw DecodeError(0, "unknown cause kind \"" + s + "\"");
}

std::string verdict_label(const RunResult& r) {
  return r.verdict ? to_string(*r.verdict) : "inconclusive";
}

void print_trace(std::ostringstream& os, const RunResult& r) {
  for (std::size_t i = 0; i < r.trace.size(); ++i) {
    const TraceEntry& e = r.trace[i];
    os << "      [" << i << "] " << cause_kind_name(e.cause.kind);
    if (e.cause.name) os << " " << *e.cause.name;
    if (r.definitive_at && *r.definitive_at == i) os << "   <- first violated state";
    os << "\n";
    if (i == 0) {
      for (const auto& [k, v] : e.state.fields) {
        os << "          " << k << " = " << v.to_display() << "\n";
      }
    } else {
      const State& prev = r.trace[i - 1].state;
      for (const auto& [k, v] : e.state.fields) {
        auto it = prev.fields.find(k);
        if (it == prev.fields.end()) {
          os << "          " << k << " = " << v.to_display() << "\n";
        } else if (it->second != v) {
          os << "          " << k << ": " << it->second.to_display() << " -> "
             << v.to_display() << "\n";
        }
      }
    }
  }
}

}  // namespace

std::string report_human(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  for (const CheckResult& cr : results) {
    std::size_t pass = 0, fail = 0, inconclusive = 0;
    for (const RunResult& r : cr.runs) {
      if (r.failed()) ++fail;
      else if (r.verdict) ++pass;
      else ++inconclusive;
    }
    const char* overall = cr.overall() == CheckResult::Overall::pass ? "PASS"
                          : cr.overall() == CheckResult::Overall::fail ? "FAIL"
                                                                       : "INCONCLUSIVE";
    os << "property " << cr.property << ": " << overall << " (" << cr.runs.size()
       << " runs: " << pass << " passed, " << fail << " failed, " << inconclusive
       << " inconclusive)\n";
    for (std::size_t i = 0; i < cr.runs.size(); ++i) {
      const RunResult& r = cr.runs[i];
      os << "  run " << i << ": " << verdict_label(r) << ", " << r.actions_taken
         << " actions, seed " << r.seed;
      if (!r.note.empty()) os << " (" << r.note << ")";
      os << "\n";
      if (r.failed()) {
        os << "    counterexample trace:\n";
        print_trace(os, r);
      }
    }
  }
  return os.str();
}

nlohmann::ordered_json report_machine(const std::vector<CheckResult>& results) {
  using J = nlohmann::ordered_json;
  J doc = J::array();
  for (const CheckResult& cr : results) {
    J item;
    item["property"] = cr.property;
    item["overall"] = cr.overall() == CheckResult::Overall::pass ? "pass"
                      : cr.overall() == CheckResult::Overall::fail ? "fail"
                                                                   : "inconclusive";
    J runs = J::array();
    for (const RunResult& r : cr.runs) {
      J run;
      run["verdict"] = verdict_label(r);
      run["seed"] = r.seed;
      run["actions_taken"] = r.actions_taken;
      if (r.definitive_at) run["definitive_at"] = *r.definitive_at;
      if (!r.note.empty()) run["note"] = r.note;
      J trace = J::array();
      for (const TraceEntry& e : r.trace) {
        J entry;
        entry["cause"] = cause_kind_name(e.cause.kind);
        if (e.cause.name) entry["name"] = *e.cause.name;
        entry["state"] = e.state.to_json();
        trace.push_back(entry);
      }
      run["trace"] = trace;
      runs.push_back(run);
    }
    item["runs"] = runs;
    doc.push_back(item);
  }
  return doc;
}

std::vector<CheckResult> parse_machine_report(const nlohmann::json& doc) {
  if (!doc.is_array()) throw DecodeError(0, "report must be an array");
  std::vector<CheckResult> out;
  for (const auto& item : doc) {
    CheckResult cr;
    cr.property = item.at("property").get<std::string>();
    for (const auto& run : item.at("runs")) {
      RunResult r;
      std::string v = run.at("verdict").get<std::string>();
      if (v == "definitely-false") r.verdict = Verdict::definitely_false;
      else if (v == "presumably-false") r.verdict = Verdict::presumably_false;
      else if (v == "presumably-true") r.verdict = Verdict::presumably_true;
      else if (v == "definitely-true") r.verdict = Verdict::definitely_true;
      else if (v == "inconclusive") r.verdict = std::nullopt;
      else throw DecodeError(0, "unknown verdict \"" + v + "\"");
      r.seed = run.at("seed").get<std::uint64_t>();
      r.actions_taken = run.at("actions_taken").get<std::uint64_t>();
      if (run.contains("definitive_at")) {
        r.definitive_at = run["definitive_at"].get<std::size_t>();
      }
      if (run.contains("note")) r.note = run["note"].get<std::string>();
      for (const auto& entry : run.at("trace")) {
        TraceEntry e;
        e.cause.kind = cause_kind_from(entry.at("cause").get<std::string>());
        if (entry.contains("name")) e.cause.name = entry["name"].get<std::string>();
        e.state = State::from_json(entry.at("state"));
        r.trace.push_back(std::move(e));
      }
      cr.runs.push_back(std::move(r));
    }
    out.push_back(std::move(cr));
  }
  return out;
}

int report_exit_code(const std::vector<CheckResult>& results) {
  bool any_fail = false, any_inconclusive = false;
  for (const CheckResult& cr : results) {
    if (cr.overall() == CheckResult::Overall::fail) any_fail = true;
    if (cr.overall() == CheckResult::Overall::inconclusive) any_inconclusive = true;
  }
  if (any_fail) return 1;
  if (any_inconclusive) return 2;
  return 0;
}

}  // namespace strom
