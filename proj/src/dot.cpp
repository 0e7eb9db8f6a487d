#include "eplan/dot.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace eplan {

std::string export_dot(const EState& s) {
    const Signature& sig = *s.signature();

    std::vector<std::uint32_t> fluent_order(sig.fluent_count());
    std::iota(fluent_order.begin(), fluent_order.end(), 0u);
    std::sort(fluent_order.begin(), fluent_order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return sig.fluent_names[a] < sig.fluent_names[b];
    });

    std::ostringstream out;
    out << "digraph estate {\n";
    out << "  rankdir=LR;\n";
    for (WorldId w = 0; w < s.world_count(); ++w) {
        out << "  w" << w << " [label=\"w" << w << " [";
        bool first = true;
        for (std::uint32_t f : fluent_order) {
            if (s.valuation(w)[f]) {
                if (!first) {
                    out << ' ';
                }
                out << sig.fluent_names[f];
                first = false;
            }
        }
        out << "]\"";
        if (w == s.pointed()) {
            out << ", peripheries=2";
        }
        out << "];\n";
    }
    for (WorldId w = 0; w < s.world_count(); ++w) {
        for (std::uint32_t a = 0; a < sig.agent_count(); ++a) {
            for (WorldId v : s.successors(w, Agent{a})) {
                out << "  w" << w << " -> w" << v << " [label=\"" << sig.agent_names[a]
                    << "\"];\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace eplan
