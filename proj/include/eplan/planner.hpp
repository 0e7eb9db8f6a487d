#pragma once

#include "eplan/domain.hpp"
#include "eplan/estate.hpp"
#include "eplan/initial.hpp"
#include "eplan/transition.hpp"

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace eplan {

struct SearchConfig {
    int max_horizon = 20;
    bool visited_check = true;
    /// Collect every distinct shortest plan. Implies exploring without the
    /// visited check, since merging revisited states would drop plans that
    /// share an intermediate state.
    bool all_plans = false;

    /// Debug hooks; both may be empty.
    std::function<void(const EState&)> on_state;                    // initial + each enqueued
    std::function<void(int horizon, std::size_t frontier_size)> on_horizon;
    WarnFn warn;
};

struct SearchStats {
    std::uint64_t states_expanded = 0; // states whose successors were generated
    std::uint64_t states_pruned = 0;   // successors dropped by the visited check
    int horizons = 0;                  // last horizon reached
    double wall_ms = 0;                // search time
    InitialBuildReport initial;
};

struct Plan {
    std::vector<std::string> steps;
    std::vector<std::vector<std::string>> all_optimal; // only in all-plans mode
    SearchStats stats;

    [[nodiscard]] std::size_t length() const { return steps.size(); }
};

struct NoPlan {
    int bound = 0; // exhausted horizon; says nothing about plan existence
    SearchStats stats;
};

using PlanResult = std::variant<Plan, NoPlan>;

bool goal_satisfied(const EState& s, const Formula& goal);

/// Breadth-first search over canonical e-states in strictly increasing
/// plan length, starting with the goal check on the initial state at
/// horizon 0. Within a horizon, ties are broken by expansion order and
/// action declaration order, so the result is deterministic. A successor
/// is pruned when its canonical digest and structure were seen before
/// (never on the digest alone).
PlanResult plan_bfs(const Domain& domain, const SearchConfig& config = {});

} // namespace eplan
