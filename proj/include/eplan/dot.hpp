#pragma once

#include "eplan/estate.hpp"

#include <string>

namespace eplan {

/// Graphviz rendering of an e-state: one node per world labeled with its
/// id and true fluents (sorted by name), a doubled border on the pointed
/// world, and one directed edge per (from, agent, to) labeled with the
/// agent. Output is identical across runs for the same state.
std::string export_dot(const EState& s);

} // namespace eplan
