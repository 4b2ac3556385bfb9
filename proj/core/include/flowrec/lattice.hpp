#pragma once

#include <utility>
#include <vector>

#include "flowrec/exact.hpp"
#include "flowrec/graph.hpp"
#include "flowrec/limits.hpp"
#include "flowrec/orientations.hpp"
#include "flowrec/polynomial.hpp"

namespace flowrec {

// Right-hand side b of the slice P(b) = { p : A p = b, 0 <= p <= 1 },
// indexed in canonical vertex order. Feasible means the open slice is
// nonempty, equivalently b = A e_sigma for a totally cyclic reorientation.
struct FeasibleRHS {
    std::vector<long long> b;
    auto operator<=>(const FeasibleRHS&) const = default;
};

// Face of P(b) given by p_e = 0 on sigma_minus, 0 < p_e < 1 on sigma_zero
// and p_e = 1 on sigma_plus.
struct FacePartition {
    std::vector<int> sigma_minus;
    std::vector<int> sigma_zero;
    std::vector<int> sigma_plus;
};

// All feasible b, deduplicated, in lexicographic order.
std::vector<FeasibleRHS> feasible_b_set(const OrientedMultigraph& g,
                                        const ScanLimits& limits = {});

enum class Openness { Open, Closed };

// Number of integer f with A f = k b and 0 < f_e < k (open, k >= 1) or
// 0 <= f_e <= k (closed, k >= 0). Enumerates co-tree coordinates and solves
// the forest coordinates through the cycle basis.
Int count_fiber_points(const OrientedMultigraph& g, const FeasibleRHS& b, long long k,
                       Openness openness, const ScanLimits& limits = {});

// Box-scan oracle for count_fiber_points: walks all of {lo..hi}^E.
Int count_fiber_points_exhaustive(const OrientedMultigraph& g, const FeasibleRHS& b, long long k,
                                  Openness openness, const ScanLimits& limits = {});

// The fiber points themselves, in lexicographic order of canonical edge
// coordinates.
std::vector<std::vector<long long>> fiber_lattice_points(const OrientedMultigraph& g,
                                                         const FeasibleRHS& b, long long k,
                                                         Openness openness,
                                                         const ScanLimits& limits = {});

// Ehrhart polynomial of the closed slice P(b), interpolated from the counts
// at k = 0..xi(G). Degree xi(G), constant term 1.
ExactPolynomial ehrhart_polynomial(const OrientedMultigraph& g, const FeasibleRHS& b,
                                   const ScanLimits& limits = {});

// Open count at k equals (-1)^xi times the closed polynomial at -k.
bool check_ehrhart_macdonald(const OrientedMultigraph& g, const FeasibleRHS& b, long long k,
                             const ScanLimits& limits = {});

// For each feasible b the in-degree sequence (D + b0 - 2b)/2 of any totally
// cyclic reorientation with A e_sigma = b, where D is the undirected degree
// vector and b0 = A * 1. Pairs are ordered by b.
std::vector<std::pair<FeasibleRHS, std::vector<long long>>> indegree_map(
    const OrientedMultigraph& g, const ScanLimits& limits = {});

// Classifies a point of k * P(b) into the face partition it spans.
FacePartition face_partition(const OrientedMultigraph& g, const std::vector<long long>& point,
                             long long k);

// Lattice points of the open (k-dilated) cube in the co-tree coordinates
// that avoid every hyperplane (h C)_e = 0 mod k for forest edges e; equals
// the nowhere-zero Z_k-flow count for any spanning forest.
Int inside_out_flow_count(const OrientedMultigraph& g, const std::vector<int>& forest,
                          long long k, const ScanLimits& limits = {});

// Forest-coordinate analogue for tensions: open cube points over the forest
// whose implied co-tree values stay nonzero mod l.
Int inside_out_tension_count(const OrientedMultigraph& g, const std::vector<int>& forest,
                             long long modulus, const ScanLimits& limits = {});

} // namespace flowrec
