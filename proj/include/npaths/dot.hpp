#pragma once

// Graphviz DOT writer for Hasse graphs. Output is deterministic: nodes by
// (weight, lexicographic parts), one edge line per cover pair in the same
// order.

#include "npaths/hasse.hpp"

#include <sstream>
#include <string>

namespace npaths {

inline std::string export_dot(const HasseGraph& g) {
    std::ostringstream os;
    os << "digraph hasse {\n";
    os << "  rankdir=BT;\n";
    for (const Composition& p : g.nodes) os << "  \"" << p.str() << "\";\n";
    for (const auto& [lo, hi] : g.edges) os << "  \"" << lo.str() << "\" -> \"" << hi.str() << "\";\n";
    os << "}\n";
    return os.str();
}

}  // namespace npaths
