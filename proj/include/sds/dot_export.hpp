#pragma once

#include <iosfwd>
#include <string>

#include "sds/phase_space.hpp"

namespace sds {

// Graphviz rendering of a phase space: one node per state labeled with its
// bit string, one edge from each state to its successor (fixed points show as
// self-loops). States without preimage carry a goe marker attribute.
void write_dot(std::ostream& out, const PhaseSpace& ps);

std::string dot_string(const PhaseSpace& ps);

}  // namespace sds
