#pragma once

#include <map>
#include <string>
#include <vector>

#include "flowrec/assignment.hpp"
#include "flowrec/exact.hpp"
#include "flowrec/graph.hpp"
#include "flowrec/limits.hpp"
#include "flowrec/orientations.hpp"

namespace flowrec {

// Direct combinatorial counters. These are the right-hand sides of the
// executable theorem checks, so they stay brute force on purpose: full
// residue scans plus subset scans, no basis acceleration, no sharing with
// the polynomial engines beyond graph operations.

// A Z_k-flow f together with a totally cyclic reorientation sigma of
// G/supp(f) with sigma inside E minus supp(f).
struct FlowPair {
    ModularAssignment flow;
    Reorientation sigma;
};

// A Z_l-tension t together with an acyclic reorientation sigma of
// G\supp(t) with sigma inside E minus supp(t).
struct TensionPair {
    ModularAssignment tension;
    Reorientation sigma;
};

// A Z_k-flow and Z_l-tension with disjoint supports plus an arbitrary
// reorientation of the untouched edges.
struct TutteTriple {
    ModularAssignment flow;
    ModularAssignment tension;
    Reorientation sigma;
};

// Number of FlowPair values; equals (-1)^xi phi(-k).
Int count_flow_pairs(const OrientedMultigraph& g, int k, const ScanLimits& limits = {});
// The same count grouped by |supp(f)|.
std::map<int, Int> flow_pair_census(const OrientedMultigraph& g, int k,
                                    const ScanLimits& limits = {});
std::vector<FlowPair> enumerate_flow_pairs(const OrientedMultigraph& g, int k,
                                           const ScanLimits& limits = {});

// Number of TensionPair values; equals (-1)^(|V|-c) tau(-l).
Int count_tension_pairs(const OrientedMultigraph& g, int l, const ScanLimits& limits = {});

// Number of (l-coloring, compatible acyclic reorientation) pairs; equals
// (-1)^|V| chi(-l) and l^c times the tension pair count. A reorientation is
// compatible when colors never decrease from tail to head.
Int count_stanley_pairs(const OrientedMultigraph& g, int l, const ScanLimits& limits = {});

// Number of TutteTriple values; equals t_G(1+l, 1+k).
Int count_tutte_triples(const OrientedMultigraph& g, int l, int k,
                        const ScanLimits& limits = {});
std::vector<TutteTriple> enumerate_tutte_triples(const OrientedMultigraph& g, int l, int k,
                                                 const ScanLimits& limits = {});

// sum over S subseteq T subseteq E of 2^|T\S| phi_{G[S]}(k) tau_{G/T}(l);
// equals t_G(1+l, 1+k).
Int reiner_sum(const OrientedMultigraph& g, int l, int k, const ScanLimits& limits = {});

// The unique S for which the triple splits: f lives on G[S] with sigma
// inside S totally cyclic on (G[S])/supp(f), while t lives on G/S with
// sigma outside S acyclic on (G/S)\supp(t). Throws on an invalid triple.
std::vector<int> unique_split_witness(const OrientedMultigraph& g, const TutteTriple& triple);

// One line of the pair-count recursion check: for every edge, the clause it
// falls under and both sides of that clause.
struct RecursionClause {
    std::string name;
    Int lhs;
    Int rhs;
    bool pass = false;
};

// Verifies the deletion-contraction recursion of the flow-pair count
// clause by clause: empty -> 1, coloop -> 0, loop -> (k+1) times the
// deletion, ordinary -> deletion plus contraction.
std::vector<RecursionClause> appendix_recursion_clauses(const OrientedMultigraph& g, int k,
                                                        const ScanLimits& limits = {});
bool appendix_recursion_check(const OrientedMultigraph& g, int k, const ScanLimits& limits = {});

} // namespace flowrec
