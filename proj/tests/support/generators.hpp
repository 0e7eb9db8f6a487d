#pragma once

#include "eplan/domain.hpp"
#include "eplan/estate.hpp"

#include <random>
#include <string>

namespace eplan::testing {

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int lo, int hi) { // inclusive bounds
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool chance(Rng& rng, double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

SignaturePtr gen_signature(Rng& rng, int max_fluents = 4, int max_agents = 3);

/// Random pointed labeled graph; unreachable worlds pruned by the builder,
/// so the result may have fewer worlds than requested.
EState gen_state(Rng& rng, const SignaturePtr& sig, int max_worlds = 6);

/// Random belief formula with modal depth at most `max_depth`.
FormulaPtr gen_formula(Rng& rng, const Signature& sig, int max_depth, int budget = 8);

/// Random modal-free formula.
FormulaPtr gen_fluent_formula(Rng& rng, const Signature& sig, int budget = 6);

/// Bisimilar variant of `s`: world order shuffled and random worlds
/// duplicated with incoming edges redistributed among the copies.
EState gen_bisimilar_variant(Rng& rng, const EState& s);

/// Same state with a different pointed world (prunes what becomes
/// unreachable).
EState repoint(const EState& s, WorldId new_pointed);

/// Random domain whose `initially` set is a consistent theory in the
/// restricted grammar, exercising all five statement forms. Carries no
/// actions.
Domain gen_initial_domain(Rng& rng, int max_fluents = 4, int max_agents = 3);

} // namespace eplan::testing
