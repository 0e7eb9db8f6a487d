#include "oracles.hpp"

#include "eplan/classify.hpp"
#include "eplan/initial.hpp"

#include <algorithm>
#include <stdexcept>

namespace eplan::testing {

namespace {

// Generic satisfaction-set evaluator over any successor accessor.
template <typename SuccFn>
std::vector<bool> sat_set(std::size_t n_worlds, std::size_t n_agents,
                          const std::vector<Valuation>& vals, SuccFn succ, const Formula& f) {
    auto everyone_step = [&](const AgentSet& group, const std::vector<bool>& sat) {
        std::vector<bool> out(n_worlds, true);
        for (std::size_t w = 0; w < n_worlds; ++w) {
            for (Agent ag : group) {
                for (auto v : succ(w, ag.id)) {
                    if (!sat[static_cast<std::size_t>(v)]) {
                        out[w] = false;
                        break;
                    }
                }
                if (!out[w]) {
                    break;
                }
            }
        }
        return out;
    };
    (void)n_agents;

    switch (f.kind()) {
    case Connective::True:
        return std::vector<bool>(n_worlds, true);
    case Connective::False:
        return std::vector<bool>(n_worlds, false);
    case Connective::Atom: {
        std::vector<bool> out(n_worlds);
        for (std::size_t w = 0; w < n_worlds; ++w) {
            out[w] = vals[w][f.atom_fluent().id];
        }
        return out;
    }
    case Connective::Not: {
        std::vector<bool> out = sat_set(n_worlds, n_agents, vals, succ, *f.lhs());
        out.flip();
        return out;
    }
    case Connective::And: {
        std::vector<bool> lhs = sat_set(n_worlds, n_agents, vals, succ, *f.lhs());
        const std::vector<bool> rhs = sat_set(n_worlds, n_agents, vals, succ, *f.rhs());
        for (std::size_t w = 0; w < n_worlds; ++w) {
            lhs[w] = lhs[w] && rhs[w];
        }
        return lhs;
    }
    case Connective::Or: {
        std::vector<bool> lhs = sat_set(n_worlds, n_agents, vals, succ, *f.lhs());
        const std::vector<bool> rhs = sat_set(n_worlds, n_agents, vals, succ, *f.rhs());
        for (std::size_t w = 0; w < n_worlds; ++w) {
            lhs[w] = lhs[w] || rhs[w];
        }
        return lhs;
    }
    case Connective::Believes:
        return everyone_step(AgentSet{f.agent()}, sat_set(n_worlds, n_agents, vals, succ, *f.lhs()));
    case Connective::Everyone:
        return everyone_step(f.group(), sat_set(n_worlds, n_agents, vals, succ, *f.lhs()));
    case Connective::Common: {
        // E^1, E^2, ... up to the world count; their conjunction is the
        // common-belief set.
        std::vector<bool> level = sat_set(n_worlds, n_agents, vals, succ, *f.lhs());
        std::vector<bool> out(n_worlds, true);
        for (std::size_t k = 0; k < n_worlds; ++k) {
            level = everyone_step(f.group(), level);
            for (std::size_t w = 0; w < n_worlds; ++w) {
                out[w] = out[w] && level[w];
            }
        }
        return out;
    }
    }
    throw std::logic_error("unreachable connective");
}

} // namespace

std::vector<bool> oracle_sat_set(const EState& s, const Formula& f) {
    std::vector<Valuation> vals;
    vals.reserve(s.world_count());
    for (WorldId w = 0; w < s.world_count(); ++w) {
        vals.push_back(s.valuation(w));
    }
    return sat_set(s.world_count(), s.signature()->agent_count(), vals,
                   [&](std::size_t w, std::uint32_t ag) -> const std::vector<WorldId>& {
                       return s.successors(static_cast<WorldId>(w), Agent{ag});
                   },
                   f);
}

bool oracle_entails(const EState& s, WorldId w, const Formula& f) {
    return oracle_sat_set(s, f)[w];
}

bool oracle_bisimilar(const EState& a, const EState& b) {
    if (*a.signature() != *b.signature()) {
        throw DomainError("oracle_bisimilar: different signatures");
    }
    const std::size_t na = a.world_count();
    const std::size_t nb = b.world_count();
    const std::size_t n_agents = a.signature()->agent_count();

    std::vector<std::vector<bool>> rel(na, std::vector<bool>(nb));
    for (std::size_t u = 0; u < na; ++u) {
        for (std::size_t v = 0; v < nb; ++v) {
            rel[u][v] = a.valuation(u) == b.valuation(v);
        }
    }

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t u = 0; u < na; ++u) {
            for (std::size_t v = 0; v < nb; ++v) {
                if (!rel[u][v]) {
                    continue;
                }
                bool ok = true;
                for (std::uint32_t ag = 0; ag < n_agents && ok; ++ag) {
                    for (WorldId un : a.successors(u, Agent{ag})) {
                        bool matched = false;
                        for (WorldId vn : b.successors(v, Agent{ag})) {
                            if (rel[un][vn]) {
                                matched = true;
                                break;
                            }
                        }
                        if (!matched) {
                            ok = false;
                            break;
                        }
                    }
                    for (WorldId vn : b.successors(v, Agent{ag})) {
                        if (!ok) {
                            break;
                        }
                        bool matched = false;
                        for (WorldId un : a.successors(u, Agent{ag})) {
                            if (rel[un][vn]) {
                                matched = true;
                                break;
                            }
                        }
                        if (!matched) {
                            ok = false;
                        }
                    }
                }
                if (!ok) {
                    rel[u][v] = false;
                    changed = true;
                }
            }
        }
    }
    return rel[a.pointed()][b.pointed()];
}

std::vector<int> FlatState::successors(int w, int agent) const {
    std::vector<int> out;
    for (const auto& [from, ag, to] : edges) {
        if (from == w && ag == agent) {
            out.push_back(to);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

FlatState flat_from_estate(const EState& s) {
    FlatState fs;
    fs.sig = s.signature();
    fs.pointed = static_cast<int>(s.pointed());
    for (WorldId w = 0; w < s.world_count(); ++w) {
        fs.vals.push_back(s.valuation(w));
        for (std::uint32_t ag = 0; ag < s.signature()->agent_count(); ++ag) {
            for (WorldId v : s.successors(w, Agent{ag})) {
                fs.edges.emplace_back(static_cast<int>(w), static_cast<int>(ag),
                                      static_cast<int>(v));
            }
        }
    }
    return fs;
}

bool flat_entails(const FlatState& s, int w, const Formula& f) {
    const auto sat = sat_set(s.vals.size(), s.sig->agent_count(), s.vals,
                             [&](std::size_t from, std::uint32_t ag) {
                                 return s.successors(static_cast<int>(from),
                                                     static_cast<int>(ag));
                             },
                             f);
    return sat[static_cast<std::size_t>(w)];
}

std::vector<int> flat_observability(const FlatState& s, const ActionInstance& a) {
    std::vector<int> cls(s.sig->agent_count(), 0);
    std::vector<bool> full(s.sig->agent_count(), false);
    std::vector<bool> part(s.sig->agent_count(), false);
    for (const auto& entry : a.observability()) {
        if (!flat_entails(s, s.pointed, *entry.condition)) {
            continue;
        }
        if (entry.cls == ObservabilityClass::Fully) {
            full[entry.agent.id] = true;
        } else {
            part[entry.agent.id] = true;
        }
    }
    for (std::size_t i = 0; i < cls.size(); ++i) {
        if (full[i] && part[i]) {
            throw DomainError("oracle: agent is both fully and partially observant");
        }
        cls[i] = full[i] ? 2 : part[i] ? 1 : 0;
    }
    return cls;
}

namespace {

std::vector<bool> flat_closure(const FlatState& s, std::vector<int> seeds,
                               const std::vector<int>& cls, int min_class) {
    std::vector<bool> in(s.vals.size(), false);
    std::vector<int> queue;
    for (int w : seeds) {
        if (!in[static_cast<std::size_t>(w)]) {
            in[static_cast<std::size_t>(w)] = true;
            queue.push_back(w);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const auto& [from, ag, to] : s.edges) {
            if (from == queue[head] && cls[static_cast<std::size_t>(ag)] >= min_class &&
                !in[static_cast<std::size_t>(to)]) {
                in[static_cast<std::size_t>(to)] = true;
                queue.push_back(to);
            }
        }
    }
    return in;
}

} // namespace

std::optional<FlatState> oracle_apply(const FlatState& s, const ActionInstance& a) {
    if (!flat_entails(s, s.pointed, *a.executability())) {
        return std::nullopt;
    }
    const std::vector<int> cls = flat_observability(s, a); // 0 obl, 1 part, 2 full
    const int n = static_cast<int>(s.vals.size());

    FlatState out;
    out.sig = s.sig;
    out.vals = s.vals;   // old worlds stay in place
    out.edges = s.edges; // with all their edges

    if (a.type() == ActionType::Ontic) {
        const std::vector<bool> updated = flat_closure(s, {s.pointed}, cls, 2);
        std::vector<int> primed(s.vals.size(), -1);
        for (int w = 0; w < n; ++w) {
            if (!updated[static_cast<std::size_t>(w)]) {
                continue;
            }
            Valuation val = s.vals[static_cast<std::size_t>(w)];
            std::vector<int> imposed(val.size(), -1);
            for (const Effect& e : a.effects()) {
                if (!flat_entails(s, w, *e.condition)) {
                    continue;
                }
                const int want = e.literal.positive ? 1 : 0;
                if (imposed[e.literal.fluent.id] != -1 && imposed[e.literal.fluent.id] != want) {
                    throw DomainError("oracle: conflicting ontic effects");
                }
                imposed[e.literal.fluent.id] = want;
                val[e.literal.fluent.id] = e.literal.positive;
            }
            primed[static_cast<std::size_t>(w)] = static_cast<int>(out.vals.size());
            out.vals.push_back(std::move(val));
        }
        for (const auto& [from, ag, to] : s.edges) {
            if (primed[static_cast<std::size_t>(from)] == -1) {
                continue;
            }
            if (cls[static_cast<std::size_t>(ag)] == 2) {
                out.edges.emplace_back(primed[static_cast<std::size_t>(from)], ag,
                                       primed[static_cast<std::size_t>(to)]);
            } else {
                out.edges.emplace_back(primed[static_cast<std::size_t>(from)], ag, to);
            }
        }
        out.pointed = primed[static_cast<std::size_t>(s.pointed)];
        return out;
    }

    // Sensing / announcement.
    std::vector<Fluent> sensed;
    std::vector<FormulaPtr> announced;
    for (const Effect& e : a.effects()) {
        if (!flat_entails(s, s.pointed, *e.condition)) {
            continue;
        }
        if (a.type() == ActionType::Sensing) {
            sensed.push_back(e.sensed);
        } else {
            announced.push_back(e.announced);
        }
    }
    auto consistent = [&](int w) {
        if (a.type() == ActionType::Sensing) {
            for (Fluent f : sensed) {
                if (s.vals[static_cast<std::size_t>(w)][f.id] !=
                    s.vals[static_cast<std::size_t>(s.pointed)][f.id]) {
                    return false;
                }
            }
            return true;
        }
        for (const FormulaPtr& phi : announced) {
            if (!eval_propositional(*phi, s.vals[static_cast<std::size_t>(w)])) {
                return false;
            }
        }
        return true;
    };

    std::vector<bool> copied(s.vals.size(), false);
    copied[static_cast<std::size_t>(s.pointed)] = true;                  // condition 1
    const std::vector<bool> fully_reach = flat_closure(s, {s.pointed}, cls, 2);
    for (int w = 0; w < n; ++w) {
        if (fully_reach[static_cast<std::size_t>(w)] && consistent(w)) { // condition 2
            copied[static_cast<std::size_t>(w)] = true;
        }
    }
    std::vector<int> partial_seeds;
    for (const auto& [from, ag, to] : s.edges) {
        if (from == s.pointed && cls[static_cast<std::size_t>(ag)] == 1) {
            partial_seeds.push_back(to);
        }
    }
    const std::vector<bool> partial_reach = flat_closure(s, partial_seeds, cls, 1);
    for (int w = 0; w < n; ++w) {
        if (partial_reach[static_cast<std::size_t>(w)]) {                // condition 3
            copied[static_cast<std::size_t>(w)] = true;
        }
    }

    std::vector<int> copy_of(s.vals.size(), -1);
    for (int w = 0; w < n; ++w) {
        if (copied[static_cast<std::size_t>(w)]) {
            copy_of[static_cast<std::size_t>(w)] = static_cast<int>(out.vals.size());
            out.vals.push_back(s.vals[static_cast<std::size_t>(w)]); // inertia
        }
    }
    for (const auto& [from, ag, to] : s.edges) {
        if (copy_of[static_cast<std::size_t>(from)] == -1) {
            continue;
        }
        const int c = cls[static_cast<std::size_t>(ag)];
        if (c == 1 && copy_of[static_cast<std::size_t>(to)] != -1) {
            out.edges.emplace_back(copy_of[static_cast<std::size_t>(from)], ag,
                                   copy_of[static_cast<std::size_t>(to)]);
        } else if (c == 2 && copy_of[static_cast<std::size_t>(to)] != -1 &&
                   consistent(from) == consistent(to)) {
            out.edges.emplace_back(copy_of[static_cast<std::size_t>(from)], ag,
                                   copy_of[static_cast<std::size_t>(to)]);
        } else if (c == 0) {
            out.edges.emplace_back(copy_of[static_cast<std::size_t>(from)], ag, to);
        }
    }
    out.pointed = copy_of[static_cast<std::size_t>(s.pointed)];
    return out;
}

std::optional<std::vector<std::string>> oracle_shortest_plan(const Domain& domain, int max_len) {
    const auto instances = ground_action_instances(domain);
    auto [initial, report] = build_initial_state(domain, classify_initially(domain));
    const FlatState root = flat_from_estate(initial);
    const FormulaPtr goal = domain.goal();

    std::vector<std::string> sequence;
    // Depth-first enumeration of every executable sequence of exactly
    // `remaining` further steps.
    auto dfs = [&](auto&& self, const FlatState& s, int remaining) -> bool {
        if (remaining == 0) {
            return flat_entails(s, s.pointed, *goal);
        }
        for (const ActionInstance& inst : instances) {
            auto next = oracle_apply(s, inst);
            if (!next) {
                continue;
            }
            sequence.push_back(inst.name());
            if (self(self, *next, remaining - 1)) {
                return true;
            }
            sequence.pop_back();
        }
        return false;
    };

    for (int len = 0; len <= max_len; ++len) {
        sequence.clear();
        if (dfs(dfs, root, len)) {
            return sequence;
        }
    }
    return std::nullopt;
}

} // namespace eplan::testing
