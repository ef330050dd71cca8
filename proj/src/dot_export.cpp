#include "sds/dot_export.hpp"

#include <ostream>
#include <sstream>

#include "sds/state.hpp"

namespace sds {

void write_dot(std::ostream& out, const PhaseSpace& ps) {
    out << "digraph phase_space {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=box, fontname=\"monospace\"];\n";
    for (std::uint64_t s = 0; s < ps.size(); ++s) {
        out << "  s" << s << " [label=\""
            << format_state(static_cast<state_t>(s), ps.n) << "\"";
        if (ps.in_degree[s] == 0) {
            out << ", goe=true, style=dashed";
        }
        out << "];\n";
    }
    for (std::uint64_t s = 0; s < ps.size(); ++s) {
        out << "  s" << s << " -> s" << ps.successor[s] << ";\n";
    }
    out << "}\n";
}

std::string dot_string(const PhaseSpace& ps) {
    std::ostringstream out;
    write_dot(out, ps);
    return out.str();
}

}  // namespace sds
