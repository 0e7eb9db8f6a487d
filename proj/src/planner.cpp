#include "eplan/planner.hpp"

#include "eplan/action.hpp"
#include "eplan/canonical.hpp"
#include "eplan/classify.hpp"

#include <chrono>
#include <set>
#include <unordered_map>

namespace eplan {

bool goal_satisfied(const EState& s, const Formula& goal) {
    return entails(s, s.pointed(), goal);
}

namespace {

// Visited set keyed by digest; collisions fall back to structure compare.
class VisitedSet {
public:
    // Returns true when the state was not seen before.
    bool insert(const CanonicalForm& form) {
        auto& bucket = by_digest_[form.digest];
        for (const EState& seen : bucket) {
            if (seen == form.state) {
                return false;
            }
        }
        bucket.push_back(form.state);
        return true;
    }

private:
    std::unordered_map<Digest128, std::vector<EState>, Digest128Hash> by_digest_;
};

struct Node {
    EState state;
    std::vector<std::uint32_t> steps; // action indices
};

std::vector<std::string> to_names(const std::vector<std::uint32_t>& steps,
                                  const std::vector<ActionInstance>& instances) {
    std::vector<std::string> names;
    names.reserve(steps.size());
    for (std::uint32_t i : steps) {
        names.push_back(instances[i].name());
    }
    return names;
}

} // namespace

PlanResult plan_bfs(const Domain& domain, const SearchConfig& config) {
    const auto t_start = std::chrono::steady_clock::now();
    const auto elapsed_ms = [&t_start] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         t_start)
            .count();
    };

    // Warnings repeat across states; report each distinct message once.
    std::set<std::string> warned;
    WarnFn warn_once;
    if (config.warn) {
        warn_once = [&](const std::string& message) {
            if (warned.insert(message).second) {
                config.warn(message);
            }
        };
    }

    const std::vector<ActionInstance> instances = ground_action_instances(domain);
    const InitialClassification classification = classify_initially(domain);
    auto [initial_state, initial_report] = build_initial_state(domain, classification);

    SearchStats stats;
    stats.initial = initial_report;

    const bool use_visited = config.visited_check && !config.all_plans;
    VisitedSet visited;

    CanonicalForm root = canonicalize(initial_state);
    if (config.on_state) {
        config.on_state(root.state);
    }
    if (use_visited) {
        visited.insert(root);
    }

    const Formula& goal = *domain.goal();
    if (config.on_horizon) {
        config.on_horizon(0, 1);
    }
    if (goal_satisfied(root.state, goal)) {
        stats.wall_ms = elapsed_ms();
        Plan plan{{}, {}, stats};
        if (config.all_plans) {
            plan.all_optimal.push_back({});
        }
        return plan;
    }

    std::vector<Node> frontier;
    frontier.push_back(Node{std::move(root.state), {}});

    for (int horizon = 1; horizon <= config.max_horizon; ++horizon) {
        stats.horizons = horizon;
        if (config.on_horizon) {
            config.on_horizon(horizon, frontier.size());
        }
        std::vector<Node> next;
        std::vector<std::vector<std::uint32_t>> goal_hits;

        for (const Node& node : frontier) {
            ++stats.states_expanded;
            for (std::uint32_t ai = 0; ai < instances.size(); ++ai) {
                std::optional<EState> succ = apply(node.state, instances[ai], warn_once);
                if (!succ) {
                    continue;
                }
                CanonicalForm form = canonicalize(*succ);
                if (use_visited && !visited.insert(form)) {
                    ++stats.states_pruned;
                    continue;
                }
                if (config.on_state) {
                    config.on_state(form.state);
                }
                std::vector<std::uint32_t> steps = node.steps;
                steps.push_back(ai);
                if (goal_satisfied(form.state, goal)) {
                    if (!config.all_plans) {
                        stats.wall_ms = elapsed_ms();
                        return Plan{to_names(steps, instances), {}, stats};
                    }
                    goal_hits.push_back(std::move(steps));
                    continue;
                }
                next.push_back(Node{std::move(form.state), std::move(steps)});
            }
        }

        if (!goal_hits.empty()) {
            stats.wall_ms = elapsed_ms();
            Plan plan{to_names(goal_hits.front(), instances), {}, stats};
            plan.all_optimal.reserve(goal_hits.size());
            for (const auto& steps : goal_hits) {
                plan.all_optimal.push_back(to_names(steps, instances));
            }
            return plan;
        }
        if (next.empty()) {
            // Nothing new below the bound; still only a bound statement,
            // not a proof of nonexistence.
            stats.wall_ms = elapsed_ms();
            return NoPlan{horizon, stats};
        }
        frontier = std::move(next);
    }

    stats.wall_ms = elapsed_ms();
    return NoPlan{config.max_horizon, stats};
}

} // namespace eplan
