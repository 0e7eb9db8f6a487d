#include "eplan/report.hpp"

#include <json.hpp>

#include <cmath>
#include <sstream>

namespace eplan {

namespace {

nlohmann::ordered_json stats_times(const SearchStats& stats, double setup_ms, bool zero_times) {
    nlohmann::ordered_json times;
    times["setup"] = zero_times ? 0 : static_cast<std::int64_t>(std::llround(setup_ms));
    times["search"] = zero_times ? 0 : static_cast<std::int64_t>(std::llround(stats.wall_ms));
    return times;
}

} // namespace

std::string result_to_json(const PlanResult& result, double setup_ms, bool zero_times) {
    nlohmann::ordered_json out;
    const SearchStats* stats = nullptr;
    if (const Plan* plan = std::get_if<Plan>(&result)) {
        out["plan"] = plan->steps;
        out["length"] = plan->steps.size();
        stats = &plan->stats;
    } else {
        out["plan"] = nullptr;
        out["length"] = nullptr;
        stats = &std::get<NoPlan>(result).stats;
    }
    out["horizons"] = stats->horizons;
    out["states_expanded"] = stats->states_expanded;
    out["states_pruned"] = stats->states_pruned;
    out["time_ms"] = stats_times(*stats, setup_ms, zero_times);
    if (const Plan* plan = std::get_if<Plan>(&result); plan && !plan->all_optimal.empty()) {
        out["all_plans"] = plan->all_optimal;
    }
    return out.dump();
}

std::string result_to_text(const PlanResult& result, double setup_ms, bool with_stats) {
    std::ostringstream out;
    const SearchStats* stats = nullptr;
    if (const Plan* plan = std::get_if<Plan>(&result)) {
        out << "plan: [";
        for (std::size_t i = 0; i < plan->steps.size(); ++i) {
            out << (i ? ", " : "") << plan->steps[i];
        }
        out << "] (length " << plan->steps.size() << ")\n";
        for (std::size_t i = 1; i < plan->all_optimal.size(); ++i) {
            out << "alternative: [";
            const auto& alt = plan->all_optimal[i];
            for (std::size_t j = 0; j < alt.size(); ++j) {
                out << (j ? ", " : "") << alt[j];
            }
            out << "]\n";
        }
        stats = &plan->stats;
    } else {
        const NoPlan& no_plan = std::get<NoPlan>(result);
        out << "no plan found within horizon " << no_plan.bound << "\n";
        stats = &no_plan.stats;
    }
    if (with_stats) {
        out << "horizons: " << stats->horizons << "\n";
        out << "states_expanded: " << stats->states_expanded << "\n";
        out << "states_pruned: " << stats->states_pruned << "\n";
        out << "initial: uk=" << stats->initial.uk
            << " candidates=" << stats->initial.candidate_count
            << " good=" << stats->initial.good_worlds << "\n";
        out << "time_ms: setup=" << std::llround(setup_ms)
            << " search=" << std::llround(stats->wall_ms) << "\n";
    }
    return out.str();
}

} // namespace eplan
