#include "flowrec/tensions.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace flowrec {

namespace {

struct IncidentEdge {
    int edge_position;
    int other_vertex_position;
};

// Incidence lists in edge-identity order, which is what the deterministic
// BFS tie-break needs.
std::vector<std::vector<IncidentEdge>> incident_lists(const OrientedMultigraph& g) {
    std::vector<std::vector<IncidentEdge>> incident(static_cast<size_t>(g.vertex_count()));
    std::vector<int> order(static_cast<size_t>(g.edge_count()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return g.edges()[static_cast<size_t>(a)].id < g.edges()[static_cast<size_t>(b)].id;
    });
    for (int j : order) {
        const Edge& e = g.edges()[static_cast<size_t>(j)];
        const int t = g.vertex_index(e.tail);
        const int h = g.vertex_index(e.head);
        incident[static_cast<size_t>(t)].push_back({j, h});
        if (t != h) incident[static_cast<size_t>(h)].push_back({j, t});
    }
    return incident;
}

} // namespace

std::vector<int> default_spanning_forest(const OrientedMultigraph& g) {
    const auto incident = incident_lists(g);
    std::vector<char> visited(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<int> forest;

    std::vector<int> vertex_order = g.vertices();
    std::sort(vertex_order.begin(), vertex_order.end());
    for (int root : vertex_order) {
        const int root_position = g.vertex_index(root);
        if (visited[static_cast<size_t>(root_position)]) continue;
        visited[static_cast<size_t>(root_position)] = 1;
        std::deque<int> queue{root_position};
        while (!queue.empty()) {
            const int at = queue.front();
            queue.pop_front();
            for (const IncidentEdge& ie : incident[static_cast<size_t>(at)]) {
                if (visited[static_cast<size_t>(ie.other_vertex_position)]) continue;
                visited[static_cast<size_t>(ie.other_vertex_position)] = 1;
                forest.push_back(g.edges()[static_cast<size_t>(ie.edge_position)].id);
                queue.push_back(ie.other_vertex_position);
            }
        }
    }
    std::sort(forest.begin(), forest.end());
    return forest;
}

CycleBasisMatrix cycle_basis(const OrientedMultigraph& g) {
    return cycle_basis(g, default_spanning_forest(g));
}

CycleBasisMatrix cycle_basis(const OrientedMultigraph& g, const std::vector<int>& forest) {
    std::set<int> forest_set;
    for (int id : forest) {
        if (!g.has_edge(id)) {
            throw std::invalid_argument("cycle_basis: unknown edge identity " + std::to_string(id));
        }
        if (!forest_set.insert(id).second) {
            throw std::invalid_argument("cycle_basis: repeated forest edge " + std::to_string(id));
        }
    }
    // Forest check: no undirected cycle within T.
    {
        std::vector<int> parent(static_cast<size_t>(g.vertex_count()));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<size_t>(x)] != x) {
                x = parent[static_cast<size_t>(x)] =
                    parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            }
            return x;
        };
        for (int id : forest_set) {
            const Edge& e = g.edge(id);
            const int a = find(g.vertex_index(e.tail));
            const int b = find(g.vertex_index(e.head));
            if (a == b) throw std::invalid_argument("cycle_basis: edge set is not a forest");
            parent[static_cast<size_t>(a)] = b;
        }
    }
    if (static_cast<int>(forest_set.size()) != g.vertex_count() - component_count(g)) {
        throw std::invalid_argument("cycle_basis: forest is not spanning");
    }

    // Forest adjacency for path walks.
    std::vector<std::vector<IncidentEdge>> forest_adjacency(static_cast<size_t>(g.vertex_count()));
    for (int id : forest_set) {
        const Edge& e = g.edge(id);
        const int t = g.vertex_index(e.tail);
        const int h = g.vertex_index(e.head);
        forest_adjacency[static_cast<size_t>(t)].push_back({g.edge_index(id), h});
        forest_adjacency[static_cast<size_t>(h)].push_back({g.edge_index(id), t});
    }

    CycleBasisMatrix basis;
    basis.forest.assign(forest_set.begin(), forest_set.end());
    for (const Edge& e : g.edges()) {
        if (!forest_set.count(e.id)) basis.cotree.push_back(e.id);
    }
    std::sort(basis.cotree.begin(), basis.cotree.end());

    for (int cotree_id : basis.cotree) {
        const Edge& f = g.edge(cotree_id);
        std::vector<int> row(static_cast<size_t>(g.edge_count()), 0);
        row[static_cast<size_t>(g.edge_index(cotree_id))] = 1;

        // Walk the forest path head(f) -> tail(f); together with f this is
        // the fundamental cycle, traversed in the direction of f.
        const int source = g.vertex_index(f.head);
        const int target = g.vertex_index(f.tail);
        if (source != target) {
            std::vector<int> previous_vertex(static_cast<size_t>(g.vertex_count()), -1);
            std::vector<int> previous_edge(static_cast<size_t>(g.vertex_count()), -1);
            std::deque<int> queue{source};
            previous_vertex[static_cast<size_t>(source)] = source;
            while (!queue.empty()) {
                const int at = queue.front();
                queue.pop_front();
                if (at == target) break;
                for (const IncidentEdge& ie : forest_adjacency[static_cast<size_t>(at)]) {
                    if (previous_vertex[static_cast<size_t>(ie.other_vertex_position)] >= 0) continue;
                    previous_vertex[static_cast<size_t>(ie.other_vertex_position)] = at;
                    previous_edge[static_cast<size_t>(ie.other_vertex_position)] = ie.edge_position;
                    queue.push_back(ie.other_vertex_position);
                }
            }
            for (int at = target; at != source; at = previous_vertex[static_cast<size_t>(at)]) {
                const int edge_position = previous_edge[static_cast<size_t>(at)];
                const Edge& walked = g.edges()[static_cast<size_t>(edge_position)];
                const int from = previous_vertex[static_cast<size_t>(at)];
                // +1 when the walk from..at agrees with the edge orientation.
                row[static_cast<size_t>(edge_position)] =
                    (g.vertex_index(walked.tail) == from) ? 1 : -1;
            }
        }
        basis.rows.push_back(std::move(row));
    }
    return basis;
}

bool is_tension(const OrientedMultigraph& g, const ModularAssignment& t) {
    require_carrier(g, t, "is_tension");
    const CycleBasisMatrix basis = cycle_basis(g);
    std::vector<int> values(static_cast<size_t>(g.edge_count()));
    for (int j = 0; j < g.edge_count(); ++j) {
        values[static_cast<size_t>(j)] = t.values.at(g.edges()[static_cast<size_t>(j)].id);
    }
    for (const std::vector<int>& row : basis.rows) {
        long long sum = 0;
        for (int j = 0; j < g.edge_count(); ++j) {
            sum += static_cast<long long>(row[static_cast<size_t>(j)]) *
                   values[static_cast<size_t>(j)];
        }
        if (reduce_mod(sum, t.modulus) != 0) return false;
    }
    return true;
}

namespace {

// Forest-parametrized scan shared by the tension count and, with the
// all-zero base case, the edgeless special cases.
Int count_tensions_by_forest(const OrientedMultigraph& g, int modulus, const ScanLimits& limits) {
    const CycleBasisMatrix basis = cycle_basis(g);
    const int forest_size = static_cast<int>(basis.forest.size());
    // Over Z_1 the all-zero assignment is the only candidate and it is
    // nowhere-zero only on the edgeless graph.
    if (modulus == 1) return g.edge_count() == 0 ? Int(1) : Int(0);
    require_scan_points(saturating_pow(static_cast<unsigned long long>(modulus - 1),
                                       static_cast<unsigned>(forest_size)),
                        limits, "count_nowhere_zero_tensions");

    // slot of each forest edge in the odometer, by canonical edge position.
    std::vector<int> forest_slot_of_position(static_cast<size_t>(g.edge_count()), -1);
    for (int s = 0; s < forest_size; ++s) {
        forest_slot_of_position[static_cast<size_t>(g.edge_index(basis.forest[static_cast<size_t>(s)]))] = s;
    }
    // Each co-tree row as (forest slot, sign) pairs.
    struct Entry {
        int slot;
        int sign;
    };
    std::vector<std::vector<Entry>> row_entries;
    row_entries.reserve(basis.rows.size());
    for (const std::vector<int>& row : basis.rows) {
        std::vector<Entry> entries;
        for (int j = 0; j < g.edge_count(); ++j) {
            const int slot = forest_slot_of_position[static_cast<size_t>(j)];
            if (slot >= 0 && row[static_cast<size_t>(j)] != 0) {
                entries.push_back({slot, row[static_cast<size_t>(j)]});
            }
        }
        row_entries.push_back(std::move(entries));
    }

    std::vector<int> forest_values(static_cast<size_t>(forest_size), 1);
    long long count = 0;
    for (;;) {
        bool nowhere_zero = true;
        for (const auto& entries : row_entries) {
            long long sum = 0;
            for (const Entry& entry : entries) {
                sum += static_cast<long long>(entry.sign) *
                       forest_values[static_cast<size_t>(entry.slot)];
            }
            // Implied co-tree value is -sum; nonzero mod l is what matters.
            if (reduce_mod(sum, modulus) == 0) {
                nowhere_zero = false;
                break;
            }
        }
        if (nowhere_zero) ++count;

        int digit = forest_size - 1;
        while (digit >= 0 && forest_values[static_cast<size_t>(digit)] == modulus - 1) {
            forest_values[static_cast<size_t>(digit)] = 1;
            --digit;
        }
        if (digit < 0) break;
        ++forest_values[static_cast<size_t>(digit)];
    }
    return to_int(count);
}

ExactPolynomial tension_polynomial_by_recursion(const OrientedMultigraph& g) {
    if (g.edge_count() == 0) return ExactPolynomial::constant(Rat(1));
    // Loops kill every nowhere-zero tension; a coloop contributes a factor
    // (l-1); otherwise branch on the ordinary edge of smallest identity.
    int coloop = -1;
    int smallest_ordinary = -1;
    for (const Edge& e : g.edges()) {
        switch (classify_edge(g, e.id)) {
        case EdgeKind::Loop: return {};
        case EdgeKind::Coloop:
            if (coloop < 0) coloop = e.id;
            break;
        case EdgeKind::Ordinary:
            if (smallest_ordinary < 0 || e.id < smallest_ordinary) smallest_ordinary = e.id;
            break;
        }
    }
    if (coloop >= 0) {
        const ExactPolynomial factor(std::vector<Rat>{Rat(-1), Rat(1)});
        return factor * tension_polynomial_by_recursion(delete_edges(g, {coloop}));
    }
    return tension_polynomial_by_recursion(delete_edges(g, {smallest_ordinary})) -
           tension_polynomial_by_recursion(contract_edges(g, {smallest_ordinary}));
}

} // namespace

Int count_nowhere_zero_tensions(const OrientedMultigraph& g, int modulus,
                                const ScanLimits& limits) {
    if (modulus < 1) throw std::invalid_argument("modulus must be positive");
    return count_tensions_by_forest(g, modulus, limits);
}

Int count_nowhere_zero_tensions_exhaustive(const OrientedMultigraph& g, int modulus,
                                           const ScanLimits& limits) {
    if (modulus < 1) throw std::invalid_argument("modulus must be positive");
    const int m = g.edge_count();
    require_scan_points(saturating_pow(static_cast<unsigned long long>(modulus),
                                       static_cast<unsigned>(m)),
                        limits, "count_nowhere_zero_tensions_exhaustive");
    const CycleBasisMatrix basis = cycle_basis(g);
    std::vector<int> values(static_cast<size_t>(m), 0);
    long long count = 0;
    for (;;) {
        bool candidate = std::all_of(values.begin(), values.end(), [](int v) { return v != 0; });
        if (m == 0) candidate = true;
        if (candidate) {
            bool tension = true;
            for (const std::vector<int>& row : basis.rows) {
                long long sum = 0;
                for (int j = 0; j < m; ++j) {
                    sum += static_cast<long long>(row[static_cast<size_t>(j)]) *
                           values[static_cast<size_t>(j)];
                }
                if (reduce_mod(sum, modulus) != 0) {
                    tension = false;
                    break;
                }
            }
            if (tension) ++count;
        }
        int digit = m - 1;
        while (digit >= 0 && values[static_cast<size_t>(digit)] == modulus - 1) {
            values[static_cast<size_t>(digit)] = 0;
            --digit;
        }
        if (digit < 0) break;
        ++values[static_cast<size_t>(digit)];
    }
    return to_int(count);
}

ExactPolynomial tension_polynomial(const OrientedMultigraph& g, PolyMethod method,
                                   const ScanLimits& limits) {
    if (method == PolyMethod::DeletionContraction) {
        return tension_polynomial_by_recursion(g);
    }
    const int degree = g.vertex_count() - component_count(g);
    std::vector<std::pair<Int, Rat>> points;
    for (int l = degree + 1; l <= 2 * degree + 1; ++l) {
        points.emplace_back(Int(l), Rat(count_nowhere_zero_tensions(g, l, limits)));
    }
    ExactPolynomial p = interpolate(points);
    if (!p.integer_coefficients()) {
        throw std::logic_error("tension polynomial interpolation produced non-integer coefficients");
    }
    return p;
}

ExactPolynomial chromatic_polynomial(const OrientedMultigraph& g, PolyMethod method,
                                     const ScanLimits& limits) {
    return tension_polynomial(g, method, limits).shifted(component_count(g));
}

ModularAssignment coloring_tension(const OrientedMultigraph& g, const Coloring& coloring) {
    if (coloring.modulus < 1) throw std::invalid_argument("coloring modulus must be positive");
    for (int v : g.vertices()) {
        if (!coloring.values.count(v)) {
            throw std::invalid_argument("coloring_tension: vertex " + std::to_string(v) +
                                        " is uncolored");
        }
    }
    ModularAssignment t;
    t.modulus = coloring.modulus;
    for (const Edge& e : g.edges()) {
        t.values[e.id] = reduce_mod(static_cast<long long>(coloring.values.at(e.tail)) -
                                        coloring.values.at(e.head),
                                    coloring.modulus);
    }
    return t;
}

std::vector<Coloring> tension_colorings(const OrientedMultigraph& g, const ModularAssignment& t,
                                        const ScanLimits& limits) {
    if (!is_tension(g, t)) {
        throw std::invalid_argument("tension_colorings: assignment is not a tension");
    }
    const int modulus = t.modulus;
    const auto incident = incident_lists(g);

    // Component roots in canonical vertex order, plus the color offset of
    // every vertex relative to its root.
    std::vector<int> roots;
    std::vector<int> offset(static_cast<size_t>(g.vertex_count()), -1);
    std::vector<int> root_slot(static_cast<size_t>(g.vertex_count()), -1);
    for (int i = 0; i < g.vertex_count(); ++i) {
        if (offset[static_cast<size_t>(i)] >= 0) continue;
        const int slot = static_cast<int>(roots.size());
        roots.push_back(i);
        offset[static_cast<size_t>(i)] = 0;
        root_slot[static_cast<size_t>(i)] = slot;
        std::deque<int> queue{i};
        while (!queue.empty()) {
            const int at = queue.front();
            queue.pop_front();
            for (const IncidentEdge& ie : incident[static_cast<size_t>(at)]) {
                const int next = ie.other_vertex_position;
                if (offset[static_cast<size_t>(next)] >= 0) continue;
                const Edge& e = g.edges()[static_cast<size_t>(ie.edge_position)];
                const int tv = t.values.at(e.id);
                // t(uv) = c(u) - c(v): walking tail->head subtracts t.
                const int at_is_tail = g.vertex_index(e.tail) == at;
                offset[static_cast<size_t>(next)] =
                    reduce_mod(offset[static_cast<size_t>(at)] + (at_is_tail ? -tv : tv), modulus);
                root_slot[static_cast<size_t>(next)] = slot;
                queue.push_back(next);
            }
        }
    }

    require_scan_points(saturating_pow(static_cast<unsigned long long>(modulus),
                                       static_cast<unsigned>(roots.size())),
                        limits, "tension_colorings");

    std::vector<Coloring> colorings;
    std::vector<int> root_colors(roots.size(), 0);
    for (;;) {
        Coloring c;
        c.modulus = modulus;
        for (int i = 0; i < g.vertex_count(); ++i) {
            c.values[g.vertices()[static_cast<size_t>(i)]] =
                reduce_mod(root_colors[static_cast<size_t>(root_slot[static_cast<size_t>(i)])] +
                               offset[static_cast<size_t>(i)],
                           modulus);
        }
        colorings.push_back(std::move(c));

        int digit = static_cast<int>(roots.size()) - 1;
        while (digit >= 0 && root_colors[static_cast<size_t>(digit)] == modulus - 1) {
            root_colors[static_cast<size_t>(digit)] = 0;
            --digit;
        }
        if (digit < 0) break;
        ++root_colors[static_cast<size_t>(digit)];
    }
    return colorings;
}

} // namespace flowrec
