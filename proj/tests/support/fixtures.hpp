#pragma once
// Standard small graphs shared across tests.

#include <vector>

#include "rotorlab/graph.hpp"

namespace fixtures {

using rotorlab::BidirectedGraph;
using rotorlab::Divisor;
using rotorlab::Drc;
using rotorlab::RibbonDigraph;
using rotorlab::RotorConfiguration;

inline RibbonDigraph directed_3cycle() { return RibbonDigraph::make({{1}, {2}, {0}}); }

// a -> b once, b -> a twice; per = (2, 1).
inline RibbonDigraph lopsided_pair() { return RibbonDigraph::make({{1}, {0, 0}}); }

inline BidirectedGraph single_edge() {
    return rotorlab::import_undirected(2, {{0, 1}}, {{0}, {0}});
}

// Bidirected triangle with out-lists a:[b,c], b:[c,a], c:[a,b].
inline BidirectedGraph triangle() {
    return rotorlab::import_undirected(3, {{0, 1}, {1, 2}, {2, 0}},
                                       {{0, 2}, {1, 0}, {2, 1}});
}

// K4 edge order: e0={0,1} e1={0,2} e2={0,3} e3={1,2} e4={1,3} e5={2,3}.
inline const std::vector<std::pair<int, int>>& k4_edges() {
    static const std::vector<std::pair<int, int>> e{{0, 1}, {0, 2}, {0, 3},
                                                    {1, 2}, {1, 3}, {2, 3}};
    return e;
}

// Rotation system read off a plane drawing of K4 (vertex 0 central); 4 faces.
inline BidirectedGraph k4_planar() {
    return rotorlab::import_undirected(4, k4_edges(),
                                       {{0, 1, 2}, {3, 0, 4}, {5, 1, 3}, {4, 2, 5}});
}

inline Drc one_chip(const RibbonDigraph& g, int v, RotorConfiguration rho) {
    Divisor x(g.vertex_count(), 0);
    x[v] = 1;
    return {std::move(x), std::move(rho)};
}

}  // namespace fixtures
