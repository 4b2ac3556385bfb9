#include "flowrec/reciprocity.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

namespace flowrec {

namespace {

using Arcs = std::vector<std::pair<int, int>>;

Arcs arcs_of(const OrientedMultigraph& g) {
    Arcs arcs;
    arcs.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
        arcs.emplace_back(g.vertex_index(e.tail), g.vertex_index(e.head));
    }
    return arcs;
}

// One assignment produced by a residue scan; mask flags the support over
// canonical edge positions.
struct ScanAssignment {
    std::vector<int> values;
    unsigned mask = 0;
};

// All Z_k-flows of g by a full k^|E| scan with a direct conservation check.
std::vector<ScanAssignment> scan_flows(const OrientedMultigraph& g, int k,
                                       const ScanLimits& limits) {
    if (k < 1) throw std::invalid_argument("modulus must be positive");
    const int m = g.edge_count();
    require_scan_points(saturating_pow(static_cast<unsigned long long>(k),
                                       static_cast<unsigned>(m)),
                        limits, "flow scan");
    const Arcs arcs = arcs_of(g);
    std::vector<ScanAssignment> flows;
    std::vector<int> values(static_cast<size_t>(m), 0);
    for (;;) {
        std::vector<long long> net(static_cast<size_t>(g.vertex_count()), 0);
        for (int j = 0; j < m; ++j) {
            const auto& [tail, head] = arcs[static_cast<size_t>(j)];
            if (tail == head) continue;
            net[static_cast<size_t>(head)] += values[static_cast<size_t>(j)];
            net[static_cast<size_t>(tail)] -= values[static_cast<size_t>(j)];
        }
        if (std::all_of(net.begin(), net.end(),
                        [&](long long v) { return reduce_mod(v, k) == 0; })) {
            unsigned mask = 0;
            for (int j = 0; j < m; ++j) {
                if (values[static_cast<size_t>(j)] != 0) mask |= 1u << j;
            }
            flows.push_back({values, mask});
        }
        int digit = m - 1;
        while (digit >= 0 && values[static_cast<size_t>(digit)] == k - 1) {
            values[static_cast<size_t>(digit)] = 0;
            --digit;
        }
        if (digit < 0) break;
        ++values[static_cast<size_t>(digit)];
    }
    return flows;
}

// Precomputed breadth-first skeleton for testing assignments against the
// potential-difference characterization of tensions.
struct PotentialSkeleton {
    // Visit order; each entry is (vertex, incoming edge position, true when
    // the vertex was entered through the edge tail).
    struct Step {
        int vertex;
        int edge_position;
        bool entered_at_head;
    };
    std::vector<Step> steps; // roots carry edge_position = -1
};

PotentialSkeleton potential_skeleton(const OrientedMultigraph& g) {
    const Arcs arcs = arcs_of(g);
    const int n = g.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> incident(static_cast<size_t>(n));
    for (int j = 0; j < g.edge_count(); ++j) {
        const auto& [tail, head] = arcs[static_cast<size_t>(j)];
        incident[static_cast<size_t>(tail)].emplace_back(j, head);
        if (tail != head) incident[static_cast<size_t>(head)].emplace_back(j, tail);
    }
    PotentialSkeleton skeleton;
    std::vector<char> visited(static_cast<size_t>(n), 0);
    for (int root = 0; root < n; ++root) {
        if (visited[static_cast<size_t>(root)]) continue;
        visited[static_cast<size_t>(root)] = 1;
        skeleton.steps.push_back({root, -1, false});
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int at = queue.front();
            queue.pop_front();
            for (const auto& [edge_position, other] : incident[static_cast<size_t>(at)]) {
                if (visited[static_cast<size_t>(other)]) continue;
                visited[static_cast<size_t>(other)] = 1;
                const bool entered_at_head =
                    arcs[static_cast<size_t>(edge_position)].second == other;
                skeleton.steps.push_back({other, edge_position, entered_at_head});
                queue.push_back(other);
            }
        }
    }
    return skeleton;
}

// All Z_l-tensions of g by a full l^|E| scan; an assignment is a tension
// iff it is the coboundary of some vertex potential.
std::vector<ScanAssignment> scan_tensions(const OrientedMultigraph& g, int l,
                                          const ScanLimits& limits) {
    if (l < 1) throw std::invalid_argument("modulus must be positive");
    const int m = g.edge_count();
    require_scan_points(saturating_pow(static_cast<unsigned long long>(l),
                                       static_cast<unsigned>(m)),
                        limits, "tension scan");
    const Arcs arcs = arcs_of(g);
    const PotentialSkeleton skeleton = potential_skeleton(g);
    std::vector<ScanAssignment> tensions;
    std::vector<int> values(static_cast<size_t>(m), 0);
    std::vector<int> potential(static_cast<size_t>(g.vertex_count()), 0);
    for (;;) {
        // Integrate t along the skeleton: t(uv) = p(u) - p(v).
        for (const PotentialSkeleton::Step& step : skeleton.steps) {
            if (step.edge_position < 0) {
                potential[static_cast<size_t>(step.vertex)] = 0;
                continue;
            }
            const auto& [tail, head] = arcs[static_cast<size_t>(step.edge_position)];
            const int t = values[static_cast<size_t>(step.edge_position)];
            potential[static_cast<size_t>(step.vertex)] =
                step.entered_at_head
                    ? reduce_mod(potential[static_cast<size_t>(tail)] - t, l)
                    : reduce_mod(potential[static_cast<size_t>(head)] + t, l);
        }
        bool tension = true;
        for (int j = 0; j < m && tension; ++j) {
            const auto& [tail, head] = arcs[static_cast<size_t>(j)];
            tension = reduce_mod(static_cast<long long>(potential[static_cast<size_t>(tail)]) -
                                     potential[static_cast<size_t>(head)] -
                                     values[static_cast<size_t>(j)],
                                 l) == 0;
        }
        if (tension) {
            unsigned mask = 0;
            for (int j = 0; j < m; ++j) {
                if (values[static_cast<size_t>(j)] != 0) mask |= 1u << j;
            }
            tensions.push_back({values, mask});
        }
        int digit = m - 1;
        while (digit >= 0 && values[static_cast<size_t>(digit)] == l - 1) {
            values[static_cast<size_t>(digit)] = 0;
            --digit;
        }
        if (digit < 0) break;
        ++values[static_cast<size_t>(digit)];
    }
    return tensions;
}

ModularAssignment assignment_from_scan(const OrientedMultigraph& g, int modulus,
                                       const std::vector<int>& values) {
    ModularAssignment a;
    a.modulus = modulus;
    for (int j = 0; j < g.edge_count(); ++j) {
        a.values[g.edges()[static_cast<size_t>(j)].id] = values[static_cast<size_t>(j)];
    }
    return a;
}

std::vector<int> ids_of_mask(const OrientedMultigraph& g, unsigned mask) {
    std::vector<int> ids;
    for (int j = 0; j < g.edge_count(); ++j) {
        if (mask & (1u << j)) ids.push_back(g.edges()[static_cast<size_t>(j)].id);
    }
    return ids;
}

// Number of sigma subseteq E(minor) whose reorientation satisfies the
// predicate, plus optionally the sigmas themselves.
template <typename Predicate>
long long count_reorientations_of(const OrientedMultigraph& minor, Predicate predicate,
                                  std::vector<std::vector<int>>* collect) {
    const int m = minor.edge_count();
    const Arcs base = arcs_of(minor);
    long long count = 0;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        Arcs arcs = base;
        for (int j = 0; j < m; ++j) {
            if (mask & (1u << j)) {
                std::swap(arcs[static_cast<size_t>(j)].first,
                          arcs[static_cast<size_t>(j)].second);
            }
        }
        if (predicate(minor.vertex_count(), arcs)) {
            ++count;
            if (collect) collect->push_back(ids_of_mask(minor, mask));
        }
    }
    return count;
}

// Nowhere-zero Z_k-flow count of g by scanning {1..k-1}^E directly.
long long count_nowhere_zero_flows_scan(const OrientedMultigraph& g, int k,
                                        const ScanLimits& limits) {
    const int m = g.edge_count();
    if (m == 0) return 1;
    if (k == 1) return 0;
    require_scan_points(saturating_pow(static_cast<unsigned long long>(k - 1),
                                       static_cast<unsigned>(m)),
                        limits, "nowhere-zero flow scan");
    const Arcs arcs = arcs_of(g);
    std::vector<int> values(static_cast<size_t>(m), 1);
    long long count = 0;
    for (;;) {
        std::vector<long long> net(static_cast<size_t>(g.vertex_count()), 0);
        for (int j = 0; j < m; ++j) {
            const auto& [tail, head] = arcs[static_cast<size_t>(j)];
            if (tail == head) continue;
            net[static_cast<size_t>(head)] += values[static_cast<size_t>(j)];
            net[static_cast<size_t>(tail)] -= values[static_cast<size_t>(j)];
        }
        if (std::all_of(net.begin(), net.end(),
                        [&](long long v) { return reduce_mod(v, k) == 0; })) {
            ++count;
        }
        int digit = m - 1;
        while (digit >= 0 && values[static_cast<size_t>(digit)] == k - 1) {
            values[static_cast<size_t>(digit)] = 1;
            --digit;
        }
        if (digit < 0) break;
        ++values[static_cast<size_t>(digit)];
    }
    return count;
}

// Nowhere-zero Z_l-tension count of g by scanning {1..l-1}^E with the
// potential-difference test.
long long count_nowhere_zero_tensions_scan(const OrientedMultigraph& g, int l,
                                           const ScanLimits& limits) {
    const int m = g.edge_count();
    if (m == 0) return 1;
    if (l == 1) return 0;
    require_scan_points(saturating_pow(static_cast<unsigned long long>(l - 1),
                                       static_cast<unsigned>(m)),
                        limits, "nowhere-zero tension scan");
    const Arcs arcs = arcs_of(g);
    const PotentialSkeleton skeleton = potential_skeleton(g);
    std::vector<int> values(static_cast<size_t>(m), 1);
    std::vector<int> potential(static_cast<size_t>(g.vertex_count()), 0);
    long long count = 0;
    for (;;) {
        for (const PotentialSkeleton::Step& step : skeleton.steps) {
            if (step.edge_position < 0) {
                potential[static_cast<size_t>(step.vertex)] = 0;
                continue;
            }
            const auto& [tail, head] = arcs[static_cast<size_t>(step.edge_position)];
            const int t = values[static_cast<size_t>(step.edge_position)];
            potential[static_cast<size_t>(step.vertex)] =
                step.entered_at_head
                    ? reduce_mod(potential[static_cast<size_t>(tail)] - t, l)
                    : reduce_mod(potential[static_cast<size_t>(head)] + t, l);
        }
        bool tension = true;
        for (int j = 0; j < m && tension; ++j) {
            const auto& [tail, head] = arcs[static_cast<size_t>(j)];
            tension = reduce_mod(static_cast<long long>(potential[static_cast<size_t>(tail)]) -
                                     potential[static_cast<size_t>(head)] -
                                     values[static_cast<size_t>(j)],
                                 l) == 0;
        }
        if (tension) ++count;
        int digit = m - 1;
        while (digit >= 0 && values[static_cast<size_t>(digit)] == l - 1) {
            values[static_cast<size_t>(digit)] = 1;
            --digit;
        }
        if (digit < 0) break;
        ++values[static_cast<size_t>(digit)];
    }
    return count;
}

} // namespace

std::map<int, Int> flow_pair_census(const OrientedMultigraph& g, int k,
                                    const ScanLimits& limits) {
    require_subset_scan(g.edge_count(), limits, "count_flow_pairs");
    std::map<int, Int> census;
    for (const ScanAssignment& flow : scan_flows(g, k, limits)) {
        const std::vector<int> support = ids_of_mask(g, flow.mask);
        const OrientedMultigraph contracted = contract_edges(g, support);
        const long long sigmas =
            count_reorientations_of(contracted, totally_cyclic_arcs, nullptr);
        census[static_cast<int>(support.size())] += to_int(sigmas);
    }
    return census;
}

Int count_flow_pairs(const OrientedMultigraph& g, int k, const ScanLimits& limits) {
    Int total(0);
    for (const auto& [size, count] : flow_pair_census(g, k, limits)) total += count;
    return total;
}

std::vector<FlowPair> enumerate_flow_pairs(const OrientedMultigraph& g, int k,
                                           const ScanLimits& limits) {
    require_subset_scan(g.edge_count(), limits, "enumerate_flow_pairs");
    std::vector<FlowPair> pairs;
    for (const ScanAssignment& flow : scan_flows(g, k, limits)) {
        const std::vector<int> support = ids_of_mask(g, flow.mask);
        const OrientedMultigraph contracted = contract_edges(g, support);
        std::vector<std::vector<int>> sigmas;
        count_reorientations_of(contracted, totally_cyclic_arcs, &sigmas);
        for (std::vector<int>& sigma : sigmas) {
            pairs.push_back(
                {assignment_from_scan(g, k, flow.values), Reorientation{std::move(sigma)}});
        }
    }
    return pairs;
}

Int count_tension_pairs(const OrientedMultigraph& g, int l, const ScanLimits& limits) {
    require_subset_scan(g.edge_count(), limits, "count_tension_pairs");
    Int total(0);
    for (const ScanAssignment& tension : scan_tensions(g, l, limits)) {
        const std::vector<int> support = ids_of_mask(g, tension.mask);
        const OrientedMultigraph deleted = delete_edges(g, support);
        total += to_int(count_reorientations_of(deleted, acyclic_arcs, nullptr));
    }
    return total;
}

Int count_stanley_pairs(const OrientedMultigraph& g, int l, const ScanLimits& limits) {
    if (l < 1) throw std::invalid_argument("modulus must be positive");
    const int n = g.vertex_count();
    const int m = g.edge_count();
    require_subset_scan(m, limits, "count_stanley_pairs");
    require_scan_points(
        saturating_mul(saturating_pow(static_cast<unsigned long long>(l),
                                      static_cast<unsigned>(n)),
                       saturating_pow(2, static_cast<unsigned>(m))),
        limits, "count_stanley_pairs");

    // Acyclic reorientations do not depend on the coloring; precompute
    // their arc lists once.
    const Arcs base = arcs_of(g);
    std::vector<Arcs> acyclic;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        Arcs arcs = base;
        for (int j = 0; j < m; ++j) {
            if (mask & (1u << j)) {
                std::swap(arcs[static_cast<size_t>(j)].first,
                          arcs[static_cast<size_t>(j)].second);
            }
        }
        if (acyclic_arcs(n, arcs)) acyclic.push_back(std::move(arcs));
    }

    std::vector<int> colors(static_cast<size_t>(n), 0);
    long long count = 0;
    for (;;) {
        for (const Arcs& arcs : acyclic) {
            bool compatible = true;
            for (const auto& [tail, head] : arcs) {
                if (colors[static_cast<size_t>(tail)] > colors[static_cast<size_t>(head)]) {
                    compatible = false;
                    break;
                }
            }
            if (compatible) ++count;
        }
        int digit = n - 1;
        while (digit >= 0 && colors[static_cast<size_t>(digit)] == l - 1) {
            colors[static_cast<size_t>(digit)] = 0;
            --digit;
        }
        if (digit < 0) break;
        ++colors[static_cast<size_t>(digit)];
    }
    return to_int(count);
}

Int count_tutte_triples(const OrientedMultigraph& g, int l, int k, const ScanLimits& limits) {
    const int m = g.edge_count();
    require_subset_scan(m, limits, "count_tutte_triples");
    const std::vector<ScanAssignment> flows = scan_flows(g, k, limits);
    const std::vector<ScanAssignment> tensions = scan_tensions(g, l, limits);
    Int total(0);
    for (const ScanAssignment& flow : flows) {
        for (const ScanAssignment& tension : tensions) {
            if ((flow.mask & tension.mask) != 0) continue;
            const int free_edges = m - std::popcount(flow.mask | tension.mask);
            total += to_int(1ll << free_edges);
        }
    }
    return total;
}

std::vector<TutteTriple> enumerate_tutte_triples(const OrientedMultigraph& g, int l, int k,
                                                 const ScanLimits& limits) {
    const int m = g.edge_count();
    require_subset_scan(m, limits, "enumerate_tutte_triples");
    std::vector<TutteTriple> triples;
    for (const ScanAssignment& flow : scan_flows(g, k, limits)) {
        for (const ScanAssignment& tension : scan_tensions(g, l, limits)) {
            if ((flow.mask & tension.mask) != 0) continue;
            const unsigned free = ((1u << m) - 1) & ~(flow.mask | tension.mask);
            unsigned sigma = 0;
            for (;;) {
                triples.push_back({assignment_from_scan(g, k, flow.values),
                                   assignment_from_scan(g, l, tension.values),
                                   Reorientation{ids_of_mask(g, sigma)}});
                if (sigma == free) break;
                sigma = (sigma - free) & free; // next submask of free
            }
        }
    }
    return triples;
}

Int reiner_sum(const OrientedMultigraph& g, int l, int k, const ScanLimits& limits) {
    const int m = g.edge_count();
    require_subset_scan(m, limits, "reiner_sum");
    require_scan_points(saturating_pow(3, static_cast<unsigned>(m)), limits, "reiner_sum");
    const std::vector<int> ids = g.edge_ids();

    // Flow counts of G[S] and tension counts of G/T, one subset at a time.
    std::vector<Int> flow_of_subset(1u << m);
    std::vector<Int> tension_of_contraction(1u << m);
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        const std::vector<int> subset = ids_of_mask(g, mask);
        flow_of_subset[mask] =
            to_int(count_nowhere_zero_flows_scan(restrict_edges(g, subset), k, limits));
        tension_of_contraction[mask] =
            to_int(count_nowhere_zero_tensions_scan(contract_edges(g, subset), l, limits));
    }

    Int total(0);
    for (unsigned t_mask = 0; t_mask < (1u << m); ++t_mask) {
        if (tension_of_contraction[t_mask] == 0) continue;
        unsigned s_mask = t_mask;
        for (;;) {
            total += to_int(1ll << std::popcount(t_mask & ~s_mask)) * flow_of_subset[s_mask] *
                     tension_of_contraction[t_mask];
            if (s_mask == 0) break;
            s_mask = (s_mask - 1) & t_mask;
        }
    }
    return total;
}

std::vector<int> unique_split_witness(const OrientedMultigraph& g, const TutteTriple& triple) {
    // Validate the triple before splitting.
    std::vector<long long> net(static_cast<size_t>(g.vertex_count()), 0);
    require_carrier(g, triple.flow, "unique_split_witness flow");
    require_carrier(g, triple.tension, "unique_split_witness tension");
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) continue;
        const int value = triple.flow.values.at(e.id);
        net[static_cast<size_t>(g.vertex_index(e.head))] += value;
        net[static_cast<size_t>(g.vertex_index(e.tail))] -= value;
    }
    if (!std::all_of(net.begin(), net.end(), [&](long long v) {
            return reduce_mod(v, triple.flow.modulus) == 0;
        })) {
        throw std::invalid_argument("unique_split_witness: not a flow");
    }
    const std::vector<int> flow_support = triple.flow.support();
    const std::vector<int> tension_support = triple.tension.support();
    for (int id : flow_support) {
        if (triple.tension.values.at(id) != 0) {
            throw std::invalid_argument("unique_split_witness: supports are not disjoint");
        }
    }
    for (int id : triple.sigma.flipped) {
        if (triple.flow.values.at(id) != 0 || triple.tension.values.at(id) != 0) {
            throw std::invalid_argument("unique_split_witness: sigma touches a support");
        }
    }

    // S = supp(f) together with the cyclic part of the reoriented
    // contract-supp(f), delete-supp(t) minor.
    OrientedMultigraph minor = contract_edges(g, flow_support);
    minor = delete_edges(minor, tension_support);
    minor = reorient(minor, triple.sigma.flipped);
    std::vector<int> split = cyclic_part(minor);
    split.insert(split.end(), flow_support.begin(), flow_support.end());
    std::sort(split.begin(), split.end());
    return split;
}

std::vector<RecursionClause> appendix_recursion_clauses(const OrientedMultigraph& g, int k,
                                                        const ScanLimits& limits) {
    std::vector<RecursionClause> clauses;
    const Int whole = count_flow_pairs(g, k, limits);
    if (g.edge_count() == 0) {
        clauses.push_back({"empty edge set", whole, Int(1), whole == Int(1)});
        return clauses;
    }
    for (const Edge& e : g.edges()) {
        RecursionClause clause;
        switch (classify_edge(g, e.id)) {
        case EdgeKind::Coloop:
            clause.name = "e=" + std::to_string(e.id) + " coloop";
            clause.rhs = Int(0);
            break;
        case EdgeKind::Loop:
            clause.name = "e=" + std::to_string(e.id) + " loop";
            clause.rhs = Int(k + 1) * count_flow_pairs(delete_edges(g, {e.id}), k, limits);
            break;
        case EdgeKind::Ordinary:
            clause.name = "e=" + std::to_string(e.id) + " ordinary";
            clause.rhs = count_flow_pairs(delete_edges(g, {e.id}), k, limits) +
                         count_flow_pairs(contract_edges(g, {e.id}), k, limits);
            break;
        }
        clause.lhs = whole;
        clause.pass = clause.lhs == clause.rhs;
        clauses.push_back(std::move(clause));
    }
    return clauses;
}

bool appendix_recursion_check(const OrientedMultigraph& g, int k, const ScanLimits& limits) {
    const std::vector<RecursionClause> clauses = appendix_recursion_clauses(g, k, limits);
    return std::all_of(clauses.begin(), clauses.end(),
                       [](const RecursionClause& clause) { return clause.pass; });
}

} // namespace flowrec
