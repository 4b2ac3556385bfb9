#pragma once

#include <map>
#include <vector>

#include "flowrec/assignment.hpp"
#include "flowrec/graph.hpp"
#include "flowrec/limits.hpp"
#include "flowrec/polynomial.hpp"

namespace flowrec {

// Fundamental cycle matrix of a spanning forest T. Row i belongs to the
// co-tree edge cotree[i] and is supported on the unique undirected cycle in
// G[T + cotree[i]], with the signs of the unique cycle orientation that
// keeps cotree[i] forward; the entry at cotree[i] itself is +1. Rows are
// indexed by canonical edge position and span ker A_G over the integers.
struct CycleBasisMatrix {
    std::vector<int> forest;
    std::vector<int> cotree;
    std::vector<std::vector<int>> rows;
};

// Breadth-first forest from the smallest vertex of each component,
// tie-broken by edge identity. Returned sorted by edge identity.
std::vector<int> default_spanning_forest(const OrientedMultigraph& g);

CycleBasisMatrix cycle_basis(const OrientedMultigraph& g);
// Throws if forest is not a spanning forest of g.
CycleBasisMatrix cycle_basis(const OrientedMultigraph& g, const std::vector<int>& forest);

// Vertex coloring with values in {0,...,modulus-1}.
struct Coloring {
    int modulus = 1;
    std::map<int, int> values;
    friend bool operator==(const Coloring&, const Coloring&) = default;
};

// True iff the signed sum of t around every undirected cycle vanishes
// mod t.modulus; checked on a fundamental cycle basis.
bool is_tension(const OrientedMultigraph& g, const ModularAssignment& t);

// Number of nowhere-zero Z_l-tensions, parametrized by the values on a
// spanning forest.
Int count_nowhere_zero_tensions(const OrientedMultigraph& g, int modulus,
                                const ScanLimits& limits = {});
// Full l^|E| scan; the slow oracle for the parametrized count.
Int count_nowhere_zero_tensions_exhaustive(const OrientedMultigraph& g, int modulus,
                                           const ScanLimits& limits = {});

enum class PolyMethod { Enumerate, DeletionContraction };

// Degree |V| - c(G) polynomial counting nowhere-zero Z_l-tensions.
ExactPolynomial tension_polynomial(const OrientedMultigraph& g,
                                   PolyMethod method = PolyMethod::DeletionContraction,
                                   const ScanLimits& limits = {});

// l^c(G) times the tension polynomial.
ExactPolynomial chromatic_polynomial(const OrientedMultigraph& g,
                                     PolyMethod method = PolyMethod::DeletionContraction,
                                     const ScanLimits& limits = {});

// t(uv) = c(u) - c(v) mod l.
ModularAssignment coloring_tension(const OrientedMultigraph& g, const Coloring& coloring);

// All l^c(G) colorings inducing the tension t, ordered lexicographically by
// the root colors in canonical vertex order. Throws if t is not a tension.
std::vector<Coloring> tension_colorings(const OrientedMultigraph& g, const ModularAssignment& t,
                                        const ScanLimits& limits = {});

} // namespace flowrec
