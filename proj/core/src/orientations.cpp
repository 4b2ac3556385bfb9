#include "flowrec/orientations.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace flowrec {

namespace {

// Arc list over vertex positions 0..n-1; the cheap working form for the
// 2^|E| scans.
using Arcs = std::vector<std::pair<int, int>>;

Arcs arcs_of(const OrientedMultigraph& g) {
    Arcs arcs;
    arcs.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
        arcs.emplace_back(g.vertex_index(e.tail), g.vertex_index(e.head));
    }
    return arcs;
}

std::vector<int> weak_components(int n, const Arcs& arcs) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [u, v] : arcs) parent[find(u)] = find(v);
    std::vector<int> label(n);
    for (int i = 0; i < n; ++i) label[i] = find(i);
    return label;
}

std::vector<char> directed_reach(int n, const Arcs& arcs, int source, bool backward) {
    std::vector<std::vector<int>> adjacency(n);
    for (const auto& [u, v] : arcs) {
        if (backward) {
            adjacency[v].push_back(u);
        } else {
            adjacency[u].push_back(v);
        }
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{source};
    seen[source] = 1;
    while (!stack.empty()) {
        const int at = stack.back();
        stack.pop_back();
        for (int next : adjacency[at]) {
            if (!seen[next]) {
                seen[next] = 1;
                stack.push_back(next);
            }
        }
    }
    return seen;
}

} // namespace

bool totally_cyclic_arcs(int n, const Arcs& arcs) {
    const std::vector<int> component = weak_components(n, arcs);
    std::vector<int> representative(n, -1);
    for (int i = 0; i < n; ++i) {
        if (representative[component[i]] < 0) representative[component[i]] = i;
    }
    for (int i = 0; i < n; ++i) {
        if (representative[component[i]] != i) continue;
        const std::vector<char> forward = directed_reach(n, arcs, i, false);
        const std::vector<char> backward = directed_reach(n, arcs, i, true);
        for (int j = 0; j < n; ++j) {
            if (component[j] == component[i] && (!forward[j] || !backward[j])) return false;
        }
    }
    return true;
}

bool acyclic_arcs(int n, const Arcs& arcs) {
    // Kahn's algorithm; a loop keeps its vertex at positive in-degree.
    std::vector<std::vector<int>> adjacency(n);
    std::vector<int> in_degree(n, 0);
    for (const auto& [u, v] : arcs) {
        adjacency[u].push_back(v);
        ++in_degree[v];
    }
    std::vector<int> stack;
    for (int i = 0; i < n; ++i) {
        if (in_degree[i] == 0) stack.push_back(i);
    }
    int removed = 0;
    while (!stack.empty()) {
        const int at = stack.back();
        stack.pop_back();
        ++removed;
        for (int next : adjacency[at]) {
            if (--in_degree[next] == 0) stack.push_back(next);
        }
    }
    return removed == n;
}

bool is_totally_cyclic(const OrientedMultigraph& g) {
    return totally_cyclic_arcs(g.vertex_count(), arcs_of(g));
}

bool is_acyclic(const OrientedMultigraph& g) {
    return acyclic_arcs(g.vertex_count(), arcs_of(g));
}

std::vector<Reorientation> enumerate_reorientations(const OrientedMultigraph& g,
                                                    OrientationClass mode,
                                                    const ScanLimits& limits) {
    const int m = g.edge_count();
    require_subset_scan(m, limits, "enumerate_reorientations");
    const int n = g.vertex_count();
    const Arcs base = arcs_of(g);
    std::vector<Reorientation> found;
    // Bit m-1-j of the mask flags edge position j, so counting masks upward
    // walks the characteristic vectors in lexicographic order.
    for (unsigned long long mask = 0; mask < (1ull << m); ++mask) {
        Arcs arcs = base;
        std::vector<int> flipped;
        for (int j = 0; j < m; ++j) {
            if (mask & (1ull << (m - 1 - j))) {
                std::swap(arcs[static_cast<size_t>(j)].first, arcs[static_cast<size_t>(j)].second);
                flipped.push_back(g.edges()[static_cast<size_t>(j)].id);
            }
        }
        const bool keep = mode == OrientationClass::TotallyCyclic ? totally_cyclic_arcs(n, arcs)
                                                                  : acyclic_arcs(n, arcs);
        if (keep) found.push_back(Reorientation{std::move(flipped)});
    }
    return found;
}

std::vector<int> cyclic_part(const OrientedMultigraph& g) {
    const int n = g.vertex_count();
    const Arcs arcs = arcs_of(g);
    // An edge lies on a directed cycle iff its head reaches its tail.
    std::vector<std::vector<char>> reach(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) reach[static_cast<size_t>(i)] = directed_reach(n, arcs, i, false);
    std::vector<int> part;
    for (size_t j = 0; j < arcs.size(); ++j) {
        const auto& [tail, head] = arcs[j];
        if (reach[static_cast<size_t>(head)][static_cast<size_t>(tail)]) {
            part.push_back(g.edges()[j].id);
        }
    }
    std::sort(part.begin(), part.end());
    return part;
}

std::vector<long long> incidence_image(const OrientedMultigraph& g, const Reorientation& sigma) {
    std::vector<long long> image(static_cast<size_t>(g.vertex_count()), 0);
    for (int id : sigma.flipped) {
        const Edge& e = g.edge(id);
        if (e.is_loop()) continue;
        image[static_cast<size_t>(g.vertex_index(e.tail))] -= 1;
        image[static_cast<size_t>(g.vertex_index(e.head))] += 1;
    }
    return image;
}

bool cycle_reversal_equivalent(const OrientedMultigraph& g, const Reorientation& sigma,
                               const Reorientation& sigma_prime) {
    if (!is_totally_cyclic(reorient(g, sigma.flipped)) ||
        !is_totally_cyclic(reorient(g, sigma_prime.flipped))) {
        throw std::invalid_argument("cycle_reversal_equivalent: input is not totally cyclic");
    }
    return incidence_image(g, sigma) == incidence_image(g, sigma_prime);
}

} // namespace flowrec
