#pragma once

#include <vector>

#include "flowrec/graph.hpp"

namespace flowrec {

// Every oriented multigraph with 1..max_vertices labeled vertices and up to
// max_edges edges, one per multiset of directed edge types (u, v) with
// u, v in 1..n. Deterministic generation order: vertex count, then edge
// count, then lexicographic on the sorted arc list.
std::vector<OrientedMultigraph> exhaustive_corpus(int max_vertices, int max_edges);

// Seeded family of random multigraphs: vertex and edge counts and the arcs
// themselves are drawn from a fixed-seed mt19937_64, so the family is
// reproducible byte for byte.
std::vector<OrientedMultigraph> random_corpus(int count, int max_vertices, int max_edges,
                                              unsigned long long seed);

} // namespace flowrec
