#pragma once

#include "eplan/action.hpp"
#include "eplan/estate.hpp"

#include <functional>
#include <optional>

namespace eplan {

/// The three observability classes partition the agent set.
struct ObservabilityPartition {
    AgentSet fully;
    AgentSet partial;
    AgentSet oblivious;
};

using WarnFn = std::function<void(const std::string&)>;

/// Evaluates the observability conditions at the pointed world. An agent
/// is fully observant if one of its `observes` conditions holds, partially
/// observant if one of its `aware_of` conditions holds, oblivious
/// otherwise. An agent whose `observes` and `aware_of` conditions hold at
/// the same time is a domain bug: DomainError.
ObservabilityPartition resolve_observability(const EState& s, const ActionInstance& a);

bool is_executable(const EState& s, const ActionInstance& a);

/// Successor state of an ontic action. The effects rewrite the pointed
/// world and every world reachable from it over fully-observant labels;
/// oblivious agents keep edges into the unmodified old worlds. The result
/// is canonical. Throws DomainError when two active effects impose
/// opposite values on one world.
EState apply_ontic(const EState& s, const ActionInstance& a, const ObservabilityPartition& o,
                   const WarnFn& warn = {});

/// Successor state of a sensing or announcement action, built from the
/// worlds that satisfy one of:
///   1. being the pointed world,
///   2. lying on a fully-observant path and agreeing with the action's
///      active effects,
///   3. lying on a path that starts with a partially-observant label and
///      contains no oblivious label.
/// Valuations are copied unchanged. Fully-observant edges additionally
/// require both endpoints to agree with the effects or both to disagree;
/// oblivious agents keep edges into the old worlds. The result is
/// canonical.
EState apply_epistemic(const EState& s, const ActionInstance& a, const ObservabilityPartition& o,
                       const WarnFn& warn = {});

/// Full transition function: empty result when the action is not
/// executable at the pointed world, otherwise the dispatched successor.
std::optional<EState> apply(const EState& s, const ActionInstance& a, const WarnFn& warn = {});

} // namespace eplan
