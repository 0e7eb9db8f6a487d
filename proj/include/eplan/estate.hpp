#pragma once

#include "eplan/formula.hpp"
#include "eplan/vocabulary.hpp"

#include <vector>

namespace eplan {

using WorldId = std::uint32_t;
using Valuation = std::vector<bool>; // one bit per fluent id

/// A pointed labeled graph over possible worlds: each world carries a
/// total fluent valuation, each edge an agent label. Every world is
/// reachable from the pointed one (the builder prunes the rest).
/// EStates are immutable values; all operations on them are pure.
class EState {
public:
    friend class EStateBuilder;

    [[nodiscard]] const SignaturePtr& signature() const { return sig_; }
    [[nodiscard]] std::size_t world_count() const { return valuations_.size(); }
    [[nodiscard]] WorldId pointed() const { return pointed_; }
    [[nodiscard]] const Valuation& valuation(WorldId w) const { return valuations_.at(w); }

    /// Successors of `w` under agent `ag`, sorted ascending.
    [[nodiscard]] const std::vector<WorldId>& successors(WorldId w, Agent ag) const {
        return successors_.at(w).at(ag.id);
    }

    [[nodiscard]] std::size_t edge_count() const;

    /// Structural identity: same valuations, edges and pointed world under
    /// the same numbering (use bisimilar() for semantic equality).
    bool operator==(const EState& other) const;

private:
    EState() = default;

    SignaturePtr sig_;
    std::vector<Valuation> valuations_;
    std::vector<std::vector<std::vector<WorldId>>> successors_; // [world][agent]
    WorldId pointed_ = 0;
};

/// Accumulates worlds and edges, then validates, prunes everything not
/// reachable from the pointed world and renumbers survivors (stable order).
class EStateBuilder {
public:
    explicit EStateBuilder(SignaturePtr sig);

    WorldId add_world(Valuation valuation);
    void add_edge(WorldId from, Agent agent, WorldId to);
    void set_pointed(WorldId w);

    [[nodiscard]] EState build() const;

private:
    SignaturePtr sig_;
    std::vector<Valuation> valuations_;
    std::vector<std::vector<std::vector<WorldId>>> successors_;
    WorldId pointed_ = 0;
    bool pointed_set_ = false;
};

/// Worlds reachable from `w` by a non-empty path labeled with agents from
/// `group`; `w` itself is included only if some path loops back to it.
/// Result sorted ascending.
std::vector<WorldId> reaches(const EState& s, WorldId w, const AgentSet& group);

/// Truth of a belief formula at world `w`:
///   - atoms by the world's valuation, connectives recursively,
///   - B(ag, phi): phi holds at every ag-successor,
///   - E(g, phi):  B(ag, phi) for every ag in g,
///   - C(g, phi):  phi holds at every world in reaches(s, w, g).
bool entails(const EState& s, WorldId w, const Formula& formula);

/// Entailment at the pointed world.
bool entails(const EState& s, const Formula& formula);

// Frame conditions of a single agent's relation.
bool is_serial(const EState& s, Agent ag);
bool is_transitive(const EState& s, Agent ag);
bool is_euclidean(const EState& s, Agent ag);
bool is_reflexive(const EState& s, Agent ag);
bool is_symmetric(const EState& s, Agent ag);

/// serial + transitive + euclidean for every agent.
bool is_kd45(const EState& s);

/// reflexive + transitive + symmetric for every agent.
bool is_s5(const EState& s);

} // namespace eplan
