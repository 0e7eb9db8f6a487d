#pragma once

#include "eplan/planner.hpp"

#include <string>

namespace eplan {

/// JSON rendering of a search result:
///   {"plan": [..] | null, "length": int | null, "horizons": int,
///    "states_expanded": int, "states_pruned": int,
///    "time_ms": {"setup": int, "search": int}}
/// With all-plans mode an extra "all_plans" array is present. Field order
/// and formatting are fixed, so equal results render byte-identically.
/// Passing zero_times drops timing noise for comparisons.
std::string result_to_json(const PlanResult& result, double setup_ms, bool zero_times = false);

/// Human-readable rendering: "plan: [a, b] (length 2)" or a no-plan line;
/// with_stats appends one line per statistic, including the initial-state
/// construction report.
std::string result_to_text(const PlanResult& result, double setup_ms, bool with_stats);

} // namespace eplan
