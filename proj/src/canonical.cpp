#include "eplan/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace eplan {

namespace {

using BlockId = std::uint32_t;

// Per-world signature used by one refinement round: current block plus,
// per agent, the set of successor blocks.
using Profile = std::pair<BlockId, std::vector<std::vector<BlockId>>>;

std::vector<BlockId> initial_partition_by_valuation(const std::vector<Valuation>& vals) {
    std::map<Valuation, BlockId> ranks;
    for (const auto& v : vals) {
        ranks.emplace(v, 0);
    }
    BlockId next = 0;
    for (auto& [valuation, rank] : ranks) {
        rank = next++;
    }
    std::vector<BlockId> block(vals.size());
    for (std::size_t w = 0; w < vals.size(); ++w) {
        block[w] = ranks[vals[w]];
    }
    return block;
}

// One splitting round; returns the refined partition and its block count.
template <typename SuccessorFn>
std::pair<std::vector<BlockId>, std::size_t>
refine_once(const std::vector<BlockId>& block, std::size_t n_agents, std::size_t n_nodes,
            SuccessorFn successors) {
    std::map<Profile, BlockId> ids;
    std::vector<Profile> profiles;
    profiles.reserve(n_nodes);
    for (std::size_t w = 0; w < n_nodes; ++w) {
        Profile p;
        p.first = block[w];
        p.second.resize(n_agents);
        for (std::size_t a = 0; a < n_agents; ++a) {
            std::vector<BlockId> succ_blocks;
            for (auto v : successors(w, a)) {
                succ_blocks.push_back(block[v]);
            }
            std::sort(succ_blocks.begin(), succ_blocks.end());
            succ_blocks.erase(std::unique(succ_blocks.begin(), succ_blocks.end()),
                              succ_blocks.end());
            p.second[a] = std::move(succ_blocks);
        }
        ids.emplace(p, 0);
        profiles.push_back(std::move(p));
    }
    BlockId next = 0;
    for (auto& [profile, id] : ids) {
        id = next++;
    }
    std::vector<BlockId> refined(n_nodes);
    for (std::size_t w = 0; w < n_nodes; ++w) {
        refined[w] = ids[profiles[w]];
    }
    return {std::move(refined), ids.size()};
}

template <typename SuccessorFn>
std::vector<BlockId> refine_to_fixpoint(std::vector<BlockId> block, std::size_t n_agents,
                                        std::size_t n_nodes, SuccessorFn successors) {
    std::size_t count = 1 + static_cast<std::size_t>(
                                *std::max_element(block.begin(), block.end()));
    for (;;) {
        auto [refined, refined_count] = refine_once(block, n_agents, n_nodes, successors);
        if (refined_count == count) {
            return block;
        }
        block = std::move(refined);
        count = refined_count;
    }
}

struct Quotient {
    std::vector<Valuation> valuations;                       // per block
    std::vector<std::vector<std::vector<BlockId>>> succ;     // [block][agent]
    BlockId pointed = 0;
};

Quotient build_quotient(const EState& s, const std::vector<BlockId>& block) {
    const std::size_t n_agents = s.signature()->agent_count();
    const std::size_t n_blocks =
        1 + static_cast<std::size_t>(*std::max_element(block.begin(), block.end()));
    Quotient q;
    q.valuations.resize(n_blocks);
    q.succ.assign(n_blocks, std::vector<std::vector<BlockId>>(n_agents));
    std::vector<bool> seen(n_blocks, false);
    for (WorldId w = 0; w < s.world_count(); ++w) {
        const BlockId b = block[w];
        if (seen[b]) {
            continue;
        }
        seen[b] = true;
        q.valuations[b] = s.valuation(w);
        for (std::size_t a = 0; a < n_agents; ++a) {
            std::vector<BlockId> out;
            for (WorldId v : s.successors(w, Agent{static_cast<std::uint32_t>(a)})) {
                out.push_back(block[v]);
            }
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
            q.succ[b][a] = std::move(out);
        }
    }
    q.pointed = block[s.pointed()];
    return q;
}

// A minimal pointed graph has no non-trivial automorphisms, so iterating
// the same (valuation, profile) refinement on the quotient ends with every
// node in its own singleton class; the class ranks give a canonical,
// isomorphism-invariant total order.
std::vector<BlockId> discrete_coloring(const Quotient& q, std::size_t n_agents) {
    std::vector<BlockId> color = initial_partition_by_valuation(q.valuations);
    color = refine_to_fixpoint(std::move(color), n_agents, q.valuations.size(),
                               [&](std::size_t b, std::size_t a) -> const std::vector<BlockId>& {
                                   return q.succ[b][a];
                               });
    std::vector<bool> used(q.valuations.size(), false);
    for (BlockId c : color) {
        if (used[c]) {
            throw std::logic_error("bisimulation quotient is not rigid");
        }
        used[c] = true;
    }
    return color;
}

} // namespace

CanonicalForm canonicalize(const EState& s) {
    const std::size_t n_agents = s.signature()->agent_count();

    std::vector<BlockId> block = initial_partition_by_valuation(
        [&] {
            std::vector<Valuation> vals;
            vals.reserve(s.world_count());
            for (WorldId w = 0; w < s.world_count(); ++w) {
                vals.push_back(s.valuation(w));
            }
            return vals;
        }());
    block = refine_to_fixpoint(std::move(block), n_agents, s.world_count(),
                               [&](std::size_t w, std::size_t a) -> const std::vector<WorldId>& {
                                   return s.successors(static_cast<WorldId>(w),
                                                       Agent{static_cast<std::uint32_t>(a)});
                               });

    Quotient q = build_quotient(s, block);
    const std::size_t n_blocks = q.valuations.size();
    std::vector<BlockId> color = discrete_coloring(q, n_agents);

    // Breadth-first numbering from the pointed block; successor order is
    // fixed by (agent, color), so the numbering depends only on structure.
    const BlockId unvisited = static_cast<BlockId>(-1);
    std::vector<BlockId> number(n_blocks, unvisited);
    std::vector<BlockId> bfs_order;
    bfs_order.reserve(n_blocks);
    number[q.pointed] = 0;
    bfs_order.push_back(q.pointed);
    for (std::size_t head = 0; head < bfs_order.size(); ++head) {
        const BlockId b = bfs_order[head];
        for (std::size_t a = 0; a < n_agents; ++a) {
            std::vector<BlockId> out = q.succ[b][a];
            std::sort(out.begin(), out.end(),
                      [&](BlockId x, BlockId y) { return color[x] < color[y]; });
            for (BlockId v : out) {
                if (number[v] == unvisited) {
                    number[v] = static_cast<BlockId>(bfs_order.size());
                    bfs_order.push_back(v);
                }
            }
        }
    }
    if (bfs_order.size() != n_blocks) {
        throw std::logic_error("quotient not reachable from pointed block");
    }

    EStateBuilder builder(s.signature());
    for (BlockId b : bfs_order) {
        builder.add_world(q.valuations[b]);
    }
    for (BlockId b : bfs_order) {
        for (std::size_t a = 0; a < n_agents; ++a) {
            for (BlockId v : q.succ[b][a]) {
                builder.add_edge(number[b], Agent{static_cast<std::uint32_t>(a)}, number[v]);
            }
        }
    }
    builder.set_pointed(0);

    CanonicalForm form{builder.build(), Digest128{}};
    form.digest = hash128(canonical_serialization(form.state));
    return form;
}

std::string canonical_serialization(const EState& canonical_state) {
    const EState& s = canonical_state;
    const Signature& sig = *s.signature();

    // Bit order follows fluent names sorted lexicographically.
    std::vector<std::uint32_t> fluent_order(sig.fluent_count());
    std::iota(fluent_order.begin(), fluent_order.end(), 0u);
    std::sort(fluent_order.begin(), fluent_order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return sig.fluent_names[a] < sig.fluent_names[b];
    });

    std::vector<std::string> lines;
    lines.reserve(s.world_count() + s.edge_count());
    for (WorldId w = 0; w < s.world_count(); ++w) {
        std::string line = "world " + std::to_string(w) + ": ";
        for (std::uint32_t f : fluent_order) {
            line += s.valuation(w)[f] ? '1' : '0';
        }
        lines.push_back(std::move(line));
        for (std::uint32_t a = 0; a < sig.agent_count(); ++a) {
            for (WorldId v : s.successors(w, Agent{a})) {
                lines.push_back("edge " + std::to_string(w) + " " + sig.agent_names[a] + " " +
                                std::to_string(v));
            }
        }
    }
    std::sort(lines.begin(), lines.end());

    std::string out;
    for (const auto& line : lines) {
        out += line;
        out += '\n';
    }
    return out;
}

bool bisimilar(const EState& a, const EState& b) {
    if (*a.signature() != *b.signature()) {
        throw DomainError("bisimilar: states have different signatures");
    }
    const CanonicalForm ca = canonicalize(a);
    const CanonicalForm cb = canonicalize(b);
    return ca.digest == cb.digest && ca.state == cb.state;
}

} // namespace eplan
