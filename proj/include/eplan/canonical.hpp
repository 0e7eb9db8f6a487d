#pragma once

#include "eplan/estate.hpp"
#include "eplan/hash128.hpp"

namespace eplan {

/// Bisimulation quotient with a deterministic world numbering, plus a
/// digest of its serialization. Two states canonicalize to structurally
/// equal forms (and equal digests) exactly when they are bisimilar.
struct CanonicalForm {
    EState state;
    Digest128 digest;
};

/// Minimizes by partition refinement (coarsest bisimulation that refines
/// the valuation partition, agent labels respected), then renumbers the
/// quotient by breadth-first order from the pointed world with ties broken
/// by an iterated (valuation, edge-profile) refinement, which is discrete
/// on a minimal graph.
CanonicalForm canonicalize(const EState& s);

/// Line-based rendering of a canonical state, the digest preimage:
/// "world <i>: <bits>" with fluent bits in sorted-name order, and
/// "edge <i> <agent> <j>" per labeled edge, all lines sorted.
std::string canonical_serialization(const EState& canonical_state);

/// Semantic equality of pointed states. Throws DomainError if the two
/// states are over different signatures.
bool bisimilar(const EState& a, const EState& b);

} // namespace eplan
