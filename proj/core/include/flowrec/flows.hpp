#pragma once

#include "flowrec/assignment.hpp"
#include "flowrec/graph.hpp"
#include "flowrec/limits.hpp"
#include "flowrec/polynomial.hpp"
#include "flowrec/tensions.hpp"

namespace flowrec {

// True iff inflow minus outflow vanishes mod f.modulus at every vertex.
// Loops contribute zero net flow.
bool is_flow(const OrientedMultigraph& g, const ModularAssignment& f);

// Number of nowhere-zero Z_k-flows, enumerated over co-tree coordinates of
// a fundamental cycle basis ((k-1)^xi points instead of k^|E|).
Int count_nowhere_zero_flows(const OrientedMultigraph& g, int modulus,
                             const ScanLimits& limits = {});

// Full k^|E| residue scan; the slow oracle for the basis-accelerated count.
Int count_nowhere_zero_flows_exhaustive(const OrientedMultigraph& g, int modulus,
                                        const ScanLimits& limits = {});

// Degree xi(G) polynomial counting nowhere-zero Z_k-flows. Both methods
// agree coefficient for coefficient.
ExactPolynomial flow_polynomial(const OrientedMultigraph& g,
                                PolyMethod method = PolyMethod::DeletionContraction,
                                const ScanLimits& limits = {});

// Unique extension to G of a flow on G/e or on G\e (e neither loop nor
// coloop). Extensions of flows on G\e get f(e) = 0.
ModularAssignment lift_flow(const OrientedMultigraph& g, int edge_id,
                            const ModularAssignment& minor_flow);

} // namespace flowrec
