#pragma once

// Hasse diagram of a composition poset restricted to weight <= max_weight.

#include "npaths/composition.hpp"

#include <utility>
#include <vector>

namespace npaths {

struct HasseGraph {
    Poset poset;
    int max_weight;
    std::vector<Composition> nodes;                             // sorted
    std::vector<std::pair<Composition, Composition>> edges;     // (lower, upper), sorted

    bool operator==(const HasseGraph&) const = default;
};

inline HasseGraph hasse_graph(Poset poset, int max_weight) {
    if (max_weight < 0) throw std::invalid_argument("max_weight must be >= 0");
    HasseGraph g{poset, max_weight, compositions_up_to(max_weight), {}};
    for (const Composition& p : g.nodes) {
        if (p.weight() == max_weight) continue;
        for (const Composition& q : covers(poset, p)) g.edges.emplace_back(p, q);
    }
    // nodes are generated sorted and covers() is sorted, so edges are already
    // ordered by (lower, upper)
    return g;
}

}  // namespace npaths
