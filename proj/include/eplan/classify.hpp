#pragma once

#include "eplan/domain.hpp"

#include <optional>
#include <vector>

namespace eplan {

/// How one `initially` formula shapes the initial state. `psi` is the
/// fluent-formula payload of types 3-5; types 4 and 5 also carry the agent.
///   type 1: phi                         (fluent formula; pins the pointed world)
///   type 2: C(lit)                      (fluent initially known)
///   type 3: C(psi), psi not a literal   (filters good worlds)
///   type 4: C(B(i,psi) or B(i,not psi)) (agent i knows whether psi; edge filter)
///   type 5: C(not B(i,psi) and not B(i,not psi)) (no construction effect)
struct ClassifiedInitially {
    FormulaPtr formula;
    int type = 0;
    Literal known_literal{}; // type 2
    FormulaPtr psi;          // types 3-5
    Agent agent{};           // types 4-5
};

struct InitialClassification {
    std::vector<ClassifiedInitially> entries;
    std::vector<std::optional<bool>> known; // per fluent id; nullopt = unknown
    std::vector<Fluent> unknown;            // ascending id order

    [[nodiscard]] std::size_t uk() const { return unknown.size(); }
};

/// Checks the `initially` set against the restricted grammar above and
/// partitions fluents into initially-known (with value) and
/// initially-unknown. The group of every C must be the full agent set.
///
/// Throws DomainError when a formula matches none of the five shapes, when
/// a fluent is fixed to both values, or when a fluent occurs in no formula
/// of types 2-4.
InitialClassification classify_initially(const Domain& domain);

} // namespace eplan
