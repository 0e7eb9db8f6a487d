#include "eplan/transition.hpp"

#include "eplan/canonical.hpp"

#include <algorithm>

namespace eplan {

namespace {

void emit(const WarnFn& warn, const std::string& message) {
    if (warn) {
        warn(message);
    }
}

// Seeds plus every world reachable from them over edges labeled with
// agents in `labels`, sorted ascending.
std::vector<WorldId> label_closure(const EState& s, const std::vector<WorldId>& seeds,
                                   const AgentSet& labels) {
    std::vector<bool> in(s.world_count(), false);
    std::vector<WorldId> queue;
    for (WorldId w : seeds) {
        if (!in[w]) {
            in[w] = true;
            queue.push_back(w);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (Agent ag : labels) {
            for (WorldId v : s.successors(queue[head], ag)) {
                if (!in[v]) {
                    in[v] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

} // namespace

ObservabilityPartition resolve_observability(const EState& s, const ActionInstance& a) {
    ObservabilityPartition out;
    const std::size_t n_agents = s.signature()->agent_count();
    std::vector<bool> fully(n_agents, false);
    std::vector<bool> partial(n_agents, false);

    for (const auto& entry : a.observability()) {
        if (!entails(s, s.pointed(), *entry.condition)) {
            continue;
        }
        if (entry.cls == ObservabilityClass::Fully) {
            fully[entry.agent.id] = true;
        } else {
            partial[entry.agent.id] = true;
        }
    }

    for (std::uint32_t i = 0; i < n_agents; ++i) {
        if (fully[i] && partial[i]) {
            throw DomainError("agent '" + s.signature()->agent_names[i] +
                              "' satisfies both an observes and an aware_of condition of "
                              "action '" + a.name() + "'");
        }
        const Agent ag{i};
        if (fully[i]) {
            out.fully.push_back(ag);
        } else if (partial[i]) {
            out.partial.push_back(ag);
        } else {
            out.oblivious.push_back(ag);
        }
    }
    return out;
}

bool is_executable(const EState& s, const ActionInstance& a) {
    return entails(s, s.pointed(), *a.executability());
}

EState apply_ontic(const EState& s, const ActionInstance& a, const ObservabilityPartition& o,
                   const WarnFn& warn) {
    (void)warn;
    // Worlds rewritten by the action: everything on a fully-observant path
    // from the pointed world, the empty path included.
    const std::vector<WorldId> updated =
        label_closure(s, {s.pointed()}, o.fully);
    std::vector<bool> is_updated(s.world_count(), false);
    for (WorldId w : updated) {
        is_updated[w] = true;
    }

    EStateBuilder builder(s.signature());
    const WorldId none = static_cast<WorldId>(-1);
    std::vector<WorldId> primed(s.world_count(), none);

    for (WorldId w : updated) {
        Valuation val = s.valuation(w);
        std::vector<int> imposed(val.size(), -1);
        for (const Effect& e : a.effects()) {
            if (!entails(s, w, *e.condition)) {
                continue;
            }
            const int wanted = e.literal.positive ? 1 : 0;
            int& slot = imposed[e.literal.fluent.id];
            if (slot != -1 && slot != wanted) {
                throw DomainError("action '" + a.name() + "' imposes both values of fluent '" +
                                  s.signature()->fluent_name(e.literal.fluent) +
                                  "' on one world");
            }
            slot = wanted;
            val[e.literal.fluent.id] = e.literal.positive;
        }
        primed[w] = builder.add_world(std::move(val));
    }

    // Old worlds are kept for the beliefs of agents that did not see the
    // action; unreachable ones are pruned by the builder.
    std::vector<WorldId> old_ids(s.world_count());
    for (WorldId w = 0; w < s.world_count(); ++w) {
        old_ids[w] = builder.add_world(s.valuation(w));
    }

    const std::size_t n_agents = s.signature()->agent_count();
    for (WorldId w = 0; w < s.world_count(); ++w) {
        for (std::uint32_t ai = 0; ai < n_agents; ++ai) {
            const Agent ag{ai};
            const bool is_fully = agent_set_contains(o.fully, ag);
            for (WorldId v : s.successors(w, ag)) {
                if (is_updated[w]) {
                    if (is_fully) {
                        builder.add_edge(primed[w], ag, primed[v]);
                    } else {
                        // Partially observant agents of a world-altering
                        // action keep their old beliefs, like oblivious ones.
                        builder.add_edge(primed[w], ag, old_ids[v]);
                    }
                }
                builder.add_edge(old_ids[w], ag, old_ids[v]);
            }
        }
    }

    builder.set_pointed(primed[s.pointed()]);
    return canonicalize(builder.build()).state;
}

EState apply_epistemic(const EState& s, const ActionInstance& a, const ObservabilityPartition& o,
                       const WarnFn& warn) {
    const WorldId pointed = s.pointed();

    // Effects whose condition holds at the pointed world are active.
    std::vector<Fluent> sensed;
    std::vector<FormulaPtr> announced;
    for (const Effect& e : a.effects()) {
        if (!entails(s, pointed, *e.condition)) {
            continue;
        }
        if (a.type() == ActionType::Sensing) {
            sensed.push_back(e.sensed);
        } else {
            announced.push_back(e.announced);
        }
    }
    if (a.type() == ActionType::Sensing && sensed.empty()) {
        emit(warn, "sensing action '" + a.name() +
                       "' has no active sensed fluent at the current state");
    }

    auto consistent = [&](WorldId w) {
        if (a.type() == ActionType::Sensing) {
            for (Fluent f : sensed) {
                if (s.valuation(w)[f.id] != s.valuation(pointed)[f.id]) {
                    return false;
                }
            }
            return true;
        }
        for (const FormulaPtr& phi : announced) {
            if (!eval_propositional(*phi, s.valuation(w))) {
                return false;
            }
        }
        return true;
    };

    if (a.type() == ActionType::Announcement && !consistent(pointed)) {
        emit(warn, "announcement action '" + a.name() +
                       "' announces a formula that is false at the pointed world");
    }

    // Condition 2: on a fully-observant path and consistent.
    // Condition 3: first step partially observant, then no oblivious label.
    std::vector<bool> copied(s.world_count(), false);
    copied[pointed] = true;
    for (WorldId w : label_closure(s, {pointed}, o.fully)) {
        if (consistent(w)) {
            copied[w] = true;
        }
    }
    AgentSet non_oblivious = o.fully;
    non_oblivious.insert(non_oblivious.end(), o.partial.begin(), o.partial.end());
    non_oblivious = make_agent_set(std::move(non_oblivious));
    std::vector<WorldId> partial_seeds;
    for (Agent ag : o.partial) {
        for (WorldId v : s.successors(pointed, ag)) {
            partial_seeds.push_back(v);
        }
    }
    for (WorldId w : label_closure(s, partial_seeds, non_oblivious)) {
        copied[w] = true;
    }

    EStateBuilder builder(s.signature());
    const WorldId none = static_cast<WorldId>(-1);
    std::vector<WorldId> copy_ids(s.world_count(), none);
    for (WorldId w = 0; w < s.world_count(); ++w) {
        if (copied[w]) {
            copy_ids[w] = builder.add_world(s.valuation(w)); // inertia
        }
    }
    std::vector<WorldId> old_ids(s.world_count());
    for (WorldId w = 0; w < s.world_count(); ++w) {
        old_ids[w] = builder.add_world(s.valuation(w));
    }

    const std::size_t n_agents = s.signature()->agent_count();
    for (WorldId w = 0; w < s.world_count(); ++w) {
        for (std::uint32_t ai = 0; ai < n_agents; ++ai) {
            const Agent ag{ai};
            const bool is_fully = agent_set_contains(o.fully, ag);
            const bool is_partial = agent_set_contains(o.partial, ag);
            for (WorldId v : s.successors(w, ag)) {
                if (copied[w]) {
                    if (is_partial && copied[v]) {
                        builder.add_edge(copy_ids[w], ag, copy_ids[v]);
                    } else if (is_fully && copied[v] && consistent(w) == consistent(v)) {
                        builder.add_edge(copy_ids[w], ag, copy_ids[v]);
                    } else if (!is_fully && !is_partial) {
                        builder.add_edge(copy_ids[w], ag, old_ids[v]);
                    }
                }
                builder.add_edge(old_ids[w], ag, old_ids[v]);
            }
        }
    }

    builder.set_pointed(copy_ids[pointed]);
    return canonicalize(builder.build()).state;
}

std::optional<EState> apply(const EState& s, const ActionInstance& a, const WarnFn& warn) {
    if (!is_executable(s, a)) {
        return std::nullopt;
    }
    const ObservabilityPartition o = resolve_observability(s, a);
    if (a.type() == ActionType::Ontic) {
        return apply_ontic(s, a, o, warn);
    }
    return apply_epistemic(s, a, o, warn);
}

} // namespace eplan
