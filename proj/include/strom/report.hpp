#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "strom/checker.hpp"

namespace strom {

/// Per-property verdicts; failing runs come with their full trace: one line
/// per step naming the action or event, plus field-by-field diffs between
/// consecutive states and the index of the first violated state.
std::string report_human(const std::vector<CheckResult>& results);

/// One self-contained document with full traces and seeds; stable field
/// names (property, verdict, seed, trace). Round-trips through
/// parse_machine_report for archival replay.
nlohmann::ordered_json report_machine(const std::vector<CheckResult>& results);
std::vector<CheckResult> parse_machine_report(const nlohmann::json& doc);

/// 0 all pass, 1 any fail, 2 no fail but inconclusive runs present.
int report_exit_code(const std::vector<CheckResult>& results);

}  // namespace strom
