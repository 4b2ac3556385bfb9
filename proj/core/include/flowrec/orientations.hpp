#pragma once

#include <vector>

#include "flowrec/graph.hpp"
#include "flowrec/limits.hpp"

namespace flowrec {

// A set of edge identities to flip, kept sorted. The characteristic vector
// e_sigma lives in {0,1}^E in canonical edge order.
struct Reorientation {
    std::vector<int> flipped;
    friend bool operator==(const Reorientation&, const Reorientation&) = default;
};

// True iff every edge lies on a directed cycle; equivalently every weakly
// connected component is strongly connected.
bool is_totally_cyclic(const OrientedMultigraph& g);

// True iff the graph has no directed cycle. Any loop makes this false.
bool is_acyclic(const OrientedMultigraph& g);

// The same predicates on bare arc lists over vertex positions 0..n-1, the
// cheap working form for 2^|E| reorientation scans.
bool totally_cyclic_arcs(int vertex_count, const std::vector<std::pair<int, int>>& arcs);
bool acyclic_arcs(int vertex_count, const std::vector<std::pair<int, int>>& arcs);

enum class OrientationClass { TotallyCyclic, Acyclic };

// All sigma subseteq E whose reorientation is totally cyclic (resp.
// acyclic), in lexicographic order of characteristic vectors.
std::vector<Reorientation> enumerate_reorientations(const OrientedMultigraph& g,
                                                    OrientationClass mode,
                                                    const ScanLimits& limits = {});

// The unique S with G[S] totally cyclic and G/S acyclic: the union of all
// directed cycles. Returned as sorted edge identities.
std::vector<int> cyclic_part(const OrientedMultigraph& g);

// Two totally cyclic reorientations are equivalent iff one is obtained from
// the other by reversing directed cycles; decided via A*e_sigma = A*e_sigma'.
// Throws if an input is not totally cyclic.
bool cycle_reversal_equivalent(const OrientedMultigraph& g, const Reorientation& sigma,
                               const Reorientation& sigma_prime);

// A * e_sigma in canonical vertex order.
std::vector<long long> incidence_image(const OrientedMultigraph& g, const Reorientation& sigma);

} // namespace flowrec
