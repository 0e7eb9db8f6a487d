#pragma once

#include "eplan/classify.hpp"
#include "eplan/estate.hpp"

namespace eplan {

struct InitialBuildReport {
    std::size_t uk = 0;              // initially-unknown fluents
    std::uint64_t candidate_count = 0; // 2^uk
    std::size_t good_worlds = 0;     // candidates surviving type-3 filtering
    WorldId pointed = 0;
};

/// Builds the unique initial e-state:
///   (a) one candidate world per truth combination of the unknown fluents
///       (known fluents fixed everywhere), enumerated in ascending
///       valuation order;
///   (b) good worlds = candidates satisfying every type-3 formula;
///   (c) a complete relation per agent over the good worlds, minus the
///       i-labeled edges between worlds disagreeing on a type-4 psi;
///   (d) pointed = the unique good world satisfying all type-1 formulas.
///
/// Type-5 formulas contribute nothing to the construction.
///
/// Throws DomainError when no good world exists, when no good world or
/// more than one satisfies the type-1 formulas, or when uk is too large
/// to enumerate.
std::pair<EState, InitialBuildReport> build_initial_state(const Domain& domain,
                                                          const InitialClassification& c);

} // namespace eplan
