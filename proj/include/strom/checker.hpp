#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "strom/elaborate.hpp"
#include "strom/progression.hpp"
#include "strom/rng.hpp"
#include "strom/transport.hpp"

namespace strom {

struct Cause {
  enum class Kind { initial_event, action_performed, event_occurred, timed_out };
  Kind kind;
  /// Spec-side name of what produced the state ("start!", "tick?",
  /// "loaded?"). A timeout after a plain poll wait is unattributed.
  std::optional<std::string> name;
};

/// The `happened` record the cause induces on its state.
std::vector<std::string> synthesize_happened(const Cause& cause);

struct TraceEntry {
  State state;  // happened already replaced by synthesize_happened(cause)
  Cause cause;
};

struct RunBudget {
  std::uint64_t max_actions = 100;  // soft: overrun only while required-nexts remain
  std::uint64_t hard_cap = 1000;    // absolute bound on actions and trace length
  std::int64_t poll_ms = 100;       // wait issued when no action is enabled
  int stuck_waits = 10;             // fruitless polls before giving up
};

struct RunResult {
  std::optional<Verdict> verdict;  // empty = inconclusive
  std::string note;                // set for inconclusive runs
  std::vector<TraceEntry> trace;
  std::uint64_t actions_taken = 0;
  std::uint64_t seed = 0;
  std::optional<std::size_t> definitive_at;

  bool failed() const {
    return verdict && (*verdict == Verdict::definitely_false ||
                       *verdict == Verdict::presumably_false);
  }
};

struct CheckResult {
  std::string property;
  std::vector<RunResult> runs;

  enum class Overall { pass, fail, inconclusive };
  Overall overall() const;
};

struct ActDecision {
  const ElaboratedAction* action = nullptr;  // null = wait
  std::int64_t wait_ms = 0;
};

/// Uniform random choice among the allowed user actions whose guards hold in
/// `current`; a poll wait when none are enabled. Throws GuardEvalError when
/// a guard fails to evaluate.
ActDecision select_action(const State& current,
                          const std::map<std::string, ElaboratedAction>& actions,
                          const std::optional<std::vector<std::string>>& allowed,
                          std::int64_t poll_ms, Rng& rng);

struct RunOptions {
  std::uint64_t runs = 10;
  std::uint64_t seed = 0;
  RunBudget budget;
  bool fail_fast = false;
  unsigned jobs = 1;
  ProgressionLimits limits;
};

using ConnectionFactory = std::function<std::unique_ptr<ExecutorConnection>()>;

/// Checks one property of one check configuration: per run, starts a session,
/// waits for the initial `loaded` event, then alternates formula progression
/// with random action dispatch until the verdict is definitive, the budget is
/// spent, or the hard cap trips. Runs are independently seeded; with jobs > 1
/// they execute on parallel connections and are reassembled in run order.
CheckResult run_check(const ElaboratedSpec& spec, const CheckConfig& check,
                      const std::string& property, const ConnectionFactory& make_connection,
                      const RunOptions& options);

/// Offline re-evaluation of a recorded trace (replay integrity).
Outcome replay_trace(const FormulaPtr& property, const std::vector<TraceEntry>& trace,
                     const ProgressionLimits& limits = {});

}  // namespace strom
