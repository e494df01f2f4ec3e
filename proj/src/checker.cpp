#include "strom/checker.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <thread>

#include "strom/errors.hpp"

namespace strom {

std::vector<std::string> synthesize_happened(const Cause& cause) {
  if (cause.name) return {*cause.name};
  return {};
}

CheckResult::Overall CheckResult::overall() const {
  bool inconclusive = false;
  for (const RunResult& r : runs) {
    if (r.failed()) return Overall::fail;
    if (!r.verdict) inconclusive = true;
  }
  return inconclusive ? Overall::inconclusive : Overall::pass;
}

ActDecision select_action(const State& current,
                          const std::map<std::string, ElaboratedAction>& actions,
                          const std::optional<std::vector<std::string>>& allowed,
                          std::int64_t poll_ms, Rng& rng) {
  std::vector<const ElaboratedAction*> enabled;
  for (const auto& [name, action] : actions) {  // map order keeps this deterministic
    if (allowed &&
        std::find(allowed->begin(), allowed->end(), name) == allowed->end()) {
      continue;
    }
    bool ok = true;
    if (action.guard) {
      try {
        Value v = eval_expr(*action.guard, current);
        if (!v.is_bool()) throw EvalError("guard evaluated to " + std::string(v.type_name()));
        ok = v.as_bool();
      } catch (const Error& e) {
        throw GuardEvalError(name, e.what());
      }
    }
    if (ok) enabled.push_back(&action);
  }
  if (enabled.empty()) return ActDecision{nullptr, poll_ms};
  return ActDecision{enabled[rng.below(enabled.size())], 0};
}

namespace {

std::optional<std::string> match_event(const ElaboratedSpec& spec, const Descriptor& d) {
  if (d.id == "loaded") return "loaded?";
  for (const auto& [name, ev] : spec.events) {
    if (ev.primitive == d) return name;
  }
  return std::nullopt;
}

class RunSession {
public:
  RunSession(const ElaboratedSpec& spec, const CheckConfig& check, FormulaPtr property,
             const std::vector<std::string>& deps, ExecutorConnection& conn,
             std::uint64_t seed, const RunBudget& budget, const ProgressionLimits& limits)
      : spec_(spec),
        check_(check),
        current_(std::move(property)),
        deps_(deps),
        conn_(conn),
        rng_(seed),
        budget_(budget),
        limits_(limits) {}

  RunResult run() {
    try {
      run_inner();
    } catch (...) {
      // leave the connection drained for the next session if we can
      try_settle();
      throw;
    }
    try_settle();
    result_.trace = std::move(entries_);
    result_.actions_taken = actions_taken_;
    return std::move(result_);
  }

private:
  enum class Phase { choose, await_acted, waiting };

  void run_inner() {
    conn_.send(StartMsg{deps_});
    await_initial_event();
    if (finished_) return;
    while (!finished_) {
      bool demands = has_required_next(*last_guarded_);
      if (!demands && actions_taken_ >= budget_.max_actions) {
        PresumptiveResult p = presumptive(*last_guarded_);
        finish_verdict(p.verdict, std::nullopt);
        return;
      }
      if (actions_taken_ >= budget_.hard_cap || entries_.size() >= budget_.hard_cap) {
        finish_inconclusive("hard cap reached with the formula still demanding states");
        return;
      }
      current_ = step_forward(*last_guarded_);
      if (phase_ == Phase::choose) dispatch();
      handle_message(conn_.receive());
    }
  }

  void await_initial_event() {
    int fruitless = 0;
    for (;;) {
      conn_.send(WaitMsg{budget_.poll_ms, wire_version_});
      ExecutorMessage m = conn_.receive();
      if (const auto* ev = std::get_if<EventMsg>(&m)) {
        wire_version_ = ev->version;
        if (ev->event.id == "loaded") {
          append(ev->state, Cause{Cause::Kind::initial_event, "loaded?"});
          return;
        }
        // states before the initial event are not part of the checked trace
      } else if (const auto* to = std::get_if<TimeoutMsg>(&m)) {
        wire_version_ = to->version;
        if (++fruitless >= budget_.stuck_waits) {
          finish_inconclusive("initial event never arrived");
          return;
        }
      } else if (const auto* stale = std::get_if<StaleMsg>(&m)) {
        wire_version_ = stale->version;
      } else {
        throw ProtocolViolationError("Acted before any action was requested");
      }
    }
  }

  void dispatch() {
    ActDecision d =
        select_action(entries_.back().state, spec_.actions, check_.with, budget_.poll_ms, rng_);
    if (d.action) {
      conn_.send(ActMsg{d.action->primitive, wire_version_, d.action->timeout_ms});
      awaiting_name_ = d.action->name;
      awaiting_has_timeout_ = d.action->timeout_ms.has_value();
      phase_ = Phase::await_acted;
      last_was_poll_wait_ = false;
    } else {
      conn_.send(WaitMsg{d.wait_ms, wire_version_});
      phase_ = Phase::waiting;
      waiting_attribution_ = std::nullopt;
      last_was_poll_wait_ = true;
    }
  }

  void handle_message(const ExecutorMessage& m) {
    if (const auto* acted = std::get_if<ActedMsg>(&m)) {
      if (phase_ != Phase::await_acted) {
        throw ProtocolViolationError("Acted arrived without an outstanding Act");
      }
      wire_version_ = acted->version;
      append(acted->state, Cause{Cause::Kind::action_performed, awaiting_name_});
      ++actions_taken_;
      stuck_polls_ = 0;
      if (awaiting_has_timeout_) {
        phase_ = Phase::waiting;
        waiting_attribution_ = awaiting_name_;
      } else {
        phase_ = Phase::choose;
      }
      progress();
      return;
    }
    if (const auto* ev = std::get_if<EventMsg>(&m)) {
      wire_version_ = ev->version;
      std::optional<std::string> matched = match_event(spec_, ev->event);
      std::string name = matched ? *matched : ev->event.id + "?";
      append(ev->state, Cause{Cause::Kind::event_occurred, name});
      stuck_polls_ = 0;
      progress();
      if (finished_ || phase_ == Phase::await_acted) return;
      // an event with a declared timeout asks for a fresh wait window
      if (matched) {
        auto it = spec_.events.find(*matched);
        if (it != spec_.events.end() && it->second.timeout_ms) {
          conn_.send(WaitMsg{*it->second.timeout_ms, wire_version_});
          phase_ = Phase::waiting;
          waiting_attribution_ = std::nullopt;
          last_was_poll_wait_ = false;
          return;
        }
      }
      phase_ = Phase::choose;
      return;
    }
    if (const auto* to = std::get_if<TimeoutMsg>(&m)) {
      if (phase_ != Phase::waiting) {
        throw ProtocolViolationError("Timeout arrived without an outstanding wait");
      }
      wire_version_ = to->version;
      bool unchanged =
          !entries_.empty() && entries_.back().state.fields == to->state.fields;
      append(to->state, Cause{Cause::Kind::timed_out, waiting_attribution_});
      phase_ = Phase::choose;
      progress();
      if (finished_) return;
      if (last_was_poll_wait_ && unchanged) {
        if (++stuck_polls_ >= budget_.stuck_waits) {
          finish_inconclusive("no enabled actions and no state change after " +
                              std::to_string(stuck_polls_) + " waits");
        }
      } else {
        stuck_polls_ = 0;
      }
      return;
    }
    const auto& stale = std::get<StaleMsg>(m);
    wire_version_ = stale.version;
    // the request was ignored; re-decide against the newest state
    phase_ = Phase::choose;
  }

  void append(const State& state, Cause cause) {
    TraceEntry entry;
    entry.state = state;
    entry.state.happened = synthesize_happened(cause);
    entry.cause = std::move(cause);
    entries_.push_back(std::move(entry));
  }

  void progress() {
    Simplified s;
    try {
      s = simplify(unroll(current_, entries_.back().state), limits_);
    } catch (const Error& e) {
      throw TraceEvalError(entries_.size() - 1, e.what());
    }
    if (s.is_definitive()) {
      finish_verdict(*s.definitive, entries_.size() - 1);
    } else {
      last_guarded_ = s.guarded;
    }
  }

  void finish_verdict(Verdict v, std::optional<std::size_t> definitive_at) {
    finished_ = true;
    result_.verdict = v;
    result_.definitive_at = definitive_at;
  }

  void finish_inconclusive(std::string note) {
    finished_ = true;
    result_.verdict = std::nullopt;
    result_.note = std::move(note);
  }

  // Consume replies of any request still in flight so the stream is clean
  // for the next session on this connection.
  void try_settle() {
    try {
      if (phase_ == Phase::await_acted) {
        for (;;) {
          ExecutorMessage m = conn_.receive();
          if (std::holds_alternative<StaleMsg>(m)) return;
          if (std::holds_alternative<ActedMsg>(m)) {
            if (!awaiting_has_timeout_) return;
            phase_ = Phase::waiting;
            break;
          }
        }
      }
      if (phase_ == Phase::waiting) {
        for (;;) {
          ExecutorMessage m = conn_.receive();
          if (!std::holds_alternative<ActedMsg>(m)) return;
        }
      }
    } catch (...) {
      // connection already unusable; the caller decides what to do with it
    }
  }

  const ElaboratedSpec& spec_;
  const CheckConfig& check_;
  FormulaPtr current_;
  const std::vector<std::string>& deps_;
  ExecutorConnection& conn_;
  Rng rng_;
  const RunBudget& budget_;
  const ProgressionLimits& limits_;

  std::vector<TraceEntry> entries_;
  GuardedPtr last_guarded_;
  Phase phase_ = Phase::choose;
  std::string awaiting_name_;
  bool awaiting_has_timeout_ = false;
  std::optional<std::string> waiting_attribution_;
  bool last_was_poll_wait_ = false;
  int stuck_polls_ = 0;
  std::uint64_t wire_version_ = 0;
  std::uint64_t actions_taken_ = 0;
  bool finished_ = false;
  RunResult result_;
};

}  // namespace

CheckResult run_check(const ElaboratedSpec& spec, const CheckConfig& check,
                      const std::string& property, const ConnectionFactory& make_connection,
                      const RunOptions& options) {
  auto prop_it = spec.properties.find(property);
  if (prop_it == spec.properties.end()) {
    throw Error("unknown property: " + property);
  }
  const FormulaPtr& formula = prop_it->second;
  std::set<std::string> dep_set = analyze_deps(spec, check);
  std::vector<std::string> deps(dep_set.begin(), dep_set.end());

  auto one_run = [&](std::uint64_t index, ExecutorConnection& conn) {
    std::uint64_t run_seed = Rng::derive(options.seed, index);
    RunSession session(spec, check, formula, deps, conn, run_seed, options.budget,
                       options.limits);
    RunResult r = session.run();
    r.seed = run_seed;
    return r;
  };

  CheckResult out;
  out.property = property;

  if (options.jobs <= 1) {
    std::unique_ptr<ExecutorConnection> conn = make_connection();
    for (std::uint64_t i = 0; i < options.runs; ++i) {
      out.runs.push_back(one_run(i, *conn));
      if (options.fail_fast && out.runs.back().failed()) break;
    }
    conn->send(EndMsg{});
  } else {
    std::vector<std::optional<RunResult>> slots(options.runs);
    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> stop{false};
    std::exception_ptr first_error;
    std::mutex error_mu;
    auto worker = [&] {
      try {
        std::unique_ptr<ExecutorConnection> conn = make_connection();
        for (;;) {
          std::uint64_t i = next.fetch_add(1);
          if (i >= options.runs || stop.load()) break;
          slots[i] = one_run(i, *conn);
          if (options.fail_fast && slots[i]->failed()) stop.store(true);
        }
        conn->send(EndMsg{});
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error = std::current_exception();
        stop.store(true);
      }
    };
    std::vector<std::thread> threads;
    unsigned n = std::min<std::uint64_t>(options.jobs, options.runs);
    threads.reserve(n);
    for (unsigned t = 0; t < n; ++t) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
    for (auto& slot : slots) {
      if (slot) out.runs.push_back(std::move(*slot));  // run order, gaps skipped
    }
  }
  return out;
}

Outcome replay_trace(const FormulaPtr& property, const std::vector<TraceEntry>& trace,
                     const ProgressionLimits& limits) {
  std::vector<State> states;
  states.reserve(trace.size());
  for (const TraceEntry& e : trace) states.push_back(e.state);
  return evaluate_trace(property, states, limits);
}

}  // namespace strom
