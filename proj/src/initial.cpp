#include "eplan/initial.hpp"

namespace eplan {

namespace {

constexpr std::size_t kMaxUnknown = 24; // 2^24 candidate worlds already far past scale

} // namespace

std::pair<EState, InitialBuildReport> build_initial_state(const Domain& domain,
                                                          const InitialClassification& c) {
    const Signature& sig = *domain.signature();
    if (c.uk() > kMaxUnknown) {
        throw DomainError("too many initially-unknown fluents (" + std::to_string(c.uk()) +
                          ") to enumerate the initial state");
    }

    InitialBuildReport report;
    report.uk = c.uk();
    report.candidate_count = std::uint64_t{1} << c.uk();

    // Candidate valuations in ascending lexicographic order: the unknown
    // fluent with the smallest id is the most significant bit.
    Valuation base(sig.fluent_count(), false);
    for (std::uint32_t f = 0; f < sig.fluent_count(); ++f) {
        if (c.known[f].has_value()) {
            base[f] = *c.known[f];
        }
    }

    std::vector<Valuation> good;
    std::vector<std::uint64_t> pointed_candidates;
    for (std::uint64_t m = 0; m < report.candidate_count; ++m) {
        Valuation val = base;
        for (std::size_t j = 0; j < c.uk(); ++j) {
            val[c.unknown[j].id] = (m >> (c.uk() - 1 - j)) & 1u;
        }
        bool is_good = true;
        for (const auto& entry : c.entries) {
            if (entry.type == 3 && !eval_propositional(*entry.psi, val)) {
                is_good = false;
                break;
            }
        }
        if (!is_good) {
            continue;
        }
        bool all_type1 = true;
        for (const auto& entry : c.entries) {
            if (entry.type == 1 && !eval_propositional(*entry.psi, val)) {
                all_type1 = false;
                break;
            }
        }
        if (all_type1) {
            pointed_candidates.push_back(good.size());
        }
        good.push_back(std::move(val));
    }
    report.good_worlds = good.size();

    if (good.empty()) {
        throw DomainError("initial conditions admit no possible world");
    }
    if (pointed_candidates.empty()) {
        throw DomainError("no possible world satisfies all plain initial conditions "
                          "(unsatisfiable initial state)");
    }
    if (pointed_candidates.size() > 1) {
        throw DomainError("the plain initial conditions do not determine a unique pointed "
                          "world (" + std::to_string(pointed_candidates.size()) +
                          " candidates)");
    }

    EStateBuilder builder(domain.signature());
    for (auto& val : good) {
        builder.add_world(val);
    }

    // Complete graph per agent, minus i-edges between worlds that disagree
    // on some type-4 payload for i.
    for (std::uint32_t a = 0; a < sig.agent_count(); ++a) {
        const Agent ag{a};
        for (WorldId w1 = 0; w1 < good.size(); ++w1) {
            for (WorldId w2 = 0; w2 < good.size(); ++w2) {
                bool keep = true;
                for (const auto& entry : c.entries) {
                    if (entry.type == 4 && entry.agent == ag &&
                        eval_propositional(*entry.psi, good[w1]) !=
                            eval_propositional(*entry.psi, good[w2])) {
                        keep = false;
                        break;
                    }
                }
                if (keep) {
                    builder.add_edge(w1, ag, w2);
                }
            }
        }
    }

    builder.set_pointed(static_cast<WorldId>(pointed_candidates.front()));
    EState state = builder.build();
    report.pointed = state.pointed();
    return {std::move(state), report};
}

} // namespace eplan
