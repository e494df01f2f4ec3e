#include "strom/model_executor.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "strom/errors.hpp"

namespace strom {

ModelExecutor::ModelExecutor(Model model, bool realtime)
    : model_(std::move(model)), realtime_(realtime) {}

void ModelExecutor::reset_session(const std::vector<std::string>& dependencies) {
  for (const std::string& dep : dependencies) {
    if (!model_.initial_state.count(dep)) throw UnknownDependencyError(dep);
  }
  in_session_ = true;
  fields_ = model_.initial_state;
  dependencies_ = dependencies;
  now_ = 0;
  trace_len_ = 0;
  seq_ = 0;
  pending_.clear();
  schedule(model_.loaded_delay_ms, -1);
  for (std::size_t i = 0; i < model_.events.size(); ++i) {
    if (model_.events[i].schedule == ModelEvent::Schedule::periodic) {
      schedule(model_.events[i].period_ms, static_cast<int>(i));
    }
  }
}

State ModelExecutor::snapshot(std::vector<std::string> happened) const {
  State s;
  for (const std::string& dep : dependencies_) {
    auto it = fields_.find(dep);
    if (it == fields_.end()) throw UnknownDependencyError(dep);
    s.fields[dep] = it->second;
  }
  s.happened = std::move(happened);
  return s;
}

void ModelExecutor::apply_effects(const std::vector<std::pair<std::string, ExprPtr>>& effects) {
  // All right-hand sides see the pre-state; writes land together.
  State pre;
  pre.fields = fields_;
  std::vector<std::pair<std::string, Value>> writes;
  writes.reserve(effects.size());
  for (const auto& [field, e] : effects) writes.emplace_back(field, eval_expr(*e, pre));
  for (auto& [field, v] : writes) fields_[field] = std::move(v);
}

bool ModelExecutor::event_enabled(const ModelEvent& e) const {
  if (!e.enabled) return true;
  State s;
  s.fields = fields_;
  Value v = eval_expr(*e.enabled, s);
  if (!v.is_bool()) {
    throw EvalError("event \"" + e.id + "\" enabled-expression must be boolean");
  }
  return v.as_bool();
}

void ModelExecutor::schedule(std::int64_t due, int event_index) {
  pending_.push_back(PendingOccurrence{due, seq_++, event_index});
}

std::optional<ModelExecutor::PendingOccurrence> ModelExecutor::pop_next_before(
    std::int64_t deadline) {
  auto best = pending_.end();
  for (auto it = pending_.begin(); it != pending_.end(); ++it) {
    if (it->due > deadline) continue;
    if (best == pending_.end() || it->due < best->due ||
        (it->due == best->due && it->seq < best->seq)) {
      best = it;
    }
  }
  if (best == pending_.end()) return std::nullopt;
  PendingOccurrence occ = *best;
  pending_.erase(best);
  return occ;
}

void ModelExecutor::advance_until(std::int64_t deadline, std::vector<ExecutorMessage>& out) {
  while (auto occ = pop_next_before(deadline)) {
    if (realtime_ && occ->due > now_) {
      std::this_thread::sleep_for(std::chrono::milliseconds(occ->due - now_));
    }
    now_ = std::max(now_, occ->due);
    if (occ->event_index < 0) {
      ++trace_len_;
      out.push_back(EventMsg{Descriptor{"loaded", {}}, snapshot({"loaded"}), trace_len_});
      return;
    }
    const ModelEvent& ev = model_.events[static_cast<std::size_t>(occ->event_index)];
    if (ev.schedule == ModelEvent::Schedule::periodic) {
      schedule(occ->due + ev.period_ms, occ->event_index);
    }
    if (!event_enabled(ev)) continue;  // skipped occurrence, no emission
    apply_effects(ev.effects);
    Descriptor d;
    if (ev.subject) {
      d.id = "changed";
      d.args.push_back(Value(*ev.subject));
    } else {
      d.id = ev.id;
    }
    ++trace_len_;
    out.push_back(EventMsg{d, snapshot({d.id}), trace_len_});
    return;
  }
  // nothing fired: the requested timeout elapses
  if (realtime_ && deadline > now_) {
    std::this_thread::sleep_for(std::chrono::milliseconds(deadline - now_));
  }
  now_ = std::max(now_, deadline);
  ++trace_len_;
  out.push_back(TimeoutMsg{snapshot({}), trace_len_});
}

std::vector<ExecutorMessage> ModelExecutor::handle(const CheckerMessage& msg) {
  std::vector<ExecutorMessage> out;
  if (const auto* start = std::get_if<StartMsg>(&msg)) {
    reset_session(start->dependencies);
    return out;
  }
  if (std::get_if<EndMsg>(&msg)) {
    in_session_ = false;
    return out;
  }
  if (!in_session_) {
    throw ProtocolViolationError("request before Start");
  }
  if (const auto* act = std::get_if<ActMsg>(&msg)) {
    if (!executor_accepts(act->version, trace_len_)) {
      out.push_back(StaleMsg{trace_len_});
      return out;
    }
    auto it = model_.actions.find(act->action.display());
    if (it == model_.actions.end()) {
      throw ProtocolViolationError("unknown action \"" + act->action.display() + "\"");
    }
    const ModelAction& action = it->second;
    bool effective = true;
    if (action.guard) {
      State s;
      s.fields = fields_;
      Value g = eval_expr(*action.guard, s);
      if (!g.is_bool()) throw EvalError("action guard must be boolean");
      effective = g.as_bool();
    }
    if (effective) {
      apply_effects(action.effects);
      for (std::size_t i = 0; i < model_.events.size(); ++i) {
        const ModelEvent& ev = model_.events[i];
        if (ev.schedule == ModelEvent::Schedule::after_action && ev.trigger == action.key) {
          schedule(now_ + ev.delay_ms, static_cast<int>(i));
        }
      }
    }
    ++trace_len_;
    out.push_back(ActedMsg{snapshot({act->action.id}), trace_len_});
    if (act->timeout_ms) advance_until(now_ + *act->timeout_ms, out);
    return out;
  }
  const auto& wait = std::get<WaitMsg>(msg);
  if (!executor_accepts(wait.version, trace_len_)) {
    out.push_back(StaleMsg{trace_len_});
    return out;
  }
  advance_until(now_ + wait.time_ms, out);
  return out;
}

}  // namespace strom
