#pragma once

#include "flowrec/graph.hpp"

namespace flowrec::testing {

// Two vertices, three parallel edges 1 -> 2 (ids e1=1, e2=2, e3=3).
inline OrientedMultigraph g1() {
    return OrientedMultigraph::from_arcs(2, {{1, 2}, {1, 2}, {1, 2}});
}

// Directed triangle with doubled second and third edge:
// a: 1->2, b: 2->3, b': 2->3, c: 3->1, c': 3->1 (ids 1..5).
inline OrientedMultigraph g2() {
    return OrientedMultigraph::from_arcs(3, {{1, 2}, {2, 3}, {2, 3}, {3, 1}, {3, 1}});
}

// Directed 3-cycle.
inline OrientedMultigraph triangle() {
    return OrientedMultigraph::from_arcs(3, {{1, 2}, {2, 3}, {3, 1}});
}

inline OrientedMultigraph single_edge() { return OrientedMultigraph::from_arcs(2, {{1, 2}}); }

inline OrientedMultigraph single_loop() { return OrientedMultigraph::from_arcs(1, {{1, 1}}); }

inline OrientedMultigraph edgeless(int n) { return OrientedMultigraph::from_arcs(n, {}); }

// Path on three vertices: 1 -> 2 -> 3.
inline OrientedMultigraph path2() { return OrientedMultigraph::from_arcs(3, {{1, 2}, {2, 3}}); }

// Directed triangle with a pendant edge 1 -> 4.
inline OrientedMultigraph triangle_with_pendant() {
    return OrientedMultigraph::from_arcs(4, {{1, 2}, {2, 3}, {3, 1}, {1, 4}});
}

} // namespace flowrec::testing
