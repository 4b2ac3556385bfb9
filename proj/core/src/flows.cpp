#include "flowrec/flows.hpp"

#include <algorithm>
#include <stdexcept>

namespace flowrec {

bool is_flow(const OrientedMultigraph& g, const ModularAssignment& f) {
    require_carrier(g, f, "is_flow");
    std::vector<long long> net(static_cast<size_t>(g.vertex_count()), 0);
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) continue;
        const int value = f.values.at(e.id);
        net[static_cast<size_t>(g.vertex_index(e.head))] += value;
        net[static_cast<size_t>(g.vertex_index(e.tail))] -= value;
    }
    return std::all_of(net.begin(), net.end(),
                       [&](long long v) { return reduce_mod(v, f.modulus) == 0; });
}

Int count_nowhere_zero_flows(const OrientedMultigraph& g, int modulus, const ScanLimits& limits) {
    if (modulus < 1) throw std::invalid_argument("modulus must be positive");
    const CycleBasisMatrix basis = cycle_basis(g);
    const int xi = static_cast<int>(basis.cotree.size());
    if (modulus == 1 || xi == 0) {
        // Only the all-zero flow remains; nowhere-zero iff there are no edges.
        return g.edge_count() == 0 ? Int(1) : Int(0);
    }
    require_scan_points(saturating_pow(static_cast<unsigned long long>(modulus - 1),
                                       static_cast<unsigned>(xi)),
                        limits, "count_nowhere_zero_flows");

    // Tree slots: flow values on forest edges, updated incrementally as the
    // co-tree odometer h walks {1..k-1}^xi. Co-tree coordinates equal h and
    // are nonzero by construction.
    std::vector<int> tree_slot_of_position(static_cast<size_t>(g.edge_count()), -1);
    const int tree_size = static_cast<int>(basis.forest.size());
    for (int s = 0; s < tree_size; ++s) {
        tree_slot_of_position[static_cast<size_t>(g.edge_index(basis.forest[static_cast<size_t>(s)]))] = s;
    }
    struct Entry {
        int slot;
        int sign;
    };
    std::vector<std::vector<Entry>> row_entries(static_cast<size_t>(xi));
    for (int r = 0; r < xi; ++r) {
        for (int j = 0; j < g.edge_count(); ++j) {
            const int slot = tree_slot_of_position[static_cast<size_t>(j)];
            const int sign = basis.rows[static_cast<size_t>(r)][static_cast<size_t>(j)];
            if (slot >= 0 && sign != 0) row_entries[static_cast<size_t>(r)].push_back({slot, sign});
        }
    }

    std::vector<int> tree_values(static_cast<size_t>(tree_size), 0);
    int zero_slots = tree_size;
    auto apply_row = [&](int r, int delta) {
        for (const Entry& entry : row_entries[static_cast<size_t>(r)]) {
            int& value = tree_values[static_cast<size_t>(entry.slot)];
            if (value == 0) --zero_slots;
            value = reduce_mod(static_cast<long long>(value) + entry.sign * delta, modulus);
            if (value == 0) ++zero_slots;
        }
    };

    std::vector<int> h(static_cast<size_t>(xi), 1);
    for (int r = 0; r < xi; ++r) apply_row(r, 1);

    long long count = 0;
    for (;;) {
        if (zero_slots == 0) ++count;
        int digit = xi - 1;
        // Rolling a digit from k-1 back to 1 shifts it by 2-k = 2 (mod k).
        while (digit >= 0 && h[static_cast<size_t>(digit)] == modulus - 1) {
            h[static_cast<size_t>(digit)] = 1;
            apply_row(digit, 2 % modulus);
            --digit;
        }
        if (digit < 0) break;
        ++h[static_cast<size_t>(digit)];
        apply_row(digit, 1);
    }
    return to_int(count);
}

Int count_nowhere_zero_flows_exhaustive(const OrientedMultigraph& g, int modulus,
                                        const ScanLimits& limits) {
    if (modulus < 1) throw std::invalid_argument("modulus must be positive");
    const int m = g.edge_count();
    require_scan_points(saturating_pow(static_cast<unsigned long long>(modulus),
                                       static_cast<unsigned>(m)),
                        limits, "count_nowhere_zero_flows_exhaustive");
    std::vector<int> values(static_cast<size_t>(m), 0);
    long long count = 0;
    for (;;) {
        const bool nowhere_zero =
            std::all_of(values.begin(), values.end(), [](int v) { return v != 0; });
        if (nowhere_zero || m == 0) {
            std::vector<long long> net(static_cast<size_t>(g.vertex_count()), 0);
            for (int j = 0; j < m; ++j) {
                const Edge& e = g.edges()[static_cast<size_t>(j)];
                if (e.is_loop()) continue;
                net[static_cast<size_t>(g.vertex_index(e.head))] += values[static_cast<size_t>(j)];
                net[static_cast<size_t>(g.vertex_index(e.tail))] -= values[static_cast<size_t>(j)];
            }
            if (std::all_of(net.begin(), net.end(),
                            [&](long long v) { return reduce_mod(v, modulus) == 0; })) {
                ++count;
            }
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

namespace {

ExactPolynomial flow_polynomial_by_recursion(const OrientedMultigraph& g) {
    if (g.edge_count() == 0) return ExactPolynomial::constant(Rat(1));
    // A coloop kills every nowhere-zero flow; a loop contributes a factor
    // (k-1); otherwise branch on the ordinary edge of smallest identity.
    int loop = -1;
    int smallest_ordinary = -1;
    for (const Edge& e : g.edges()) {
        switch (classify_edge(g, e.id)) {
        case EdgeKind::Coloop: return {};
        case EdgeKind::Loop:
            if (loop < 0) loop = e.id;
            break;
        case EdgeKind::Ordinary:
            if (smallest_ordinary < 0 || e.id < smallest_ordinary) smallest_ordinary = e.id;
            break;
        }
    }
    if (loop >= 0) {
        const ExactPolynomial factor(std::vector<Rat>{Rat(-1), Rat(1)});
        return factor * flow_polynomial_by_recursion(delete_edges(g, {loop}));
    }
    return flow_polynomial_by_recursion(contract_edges(g, {smallest_ordinary})) -
           flow_polynomial_by_recursion(delete_edges(g, {smallest_ordinary}));
}

} // namespace

ExactPolynomial flow_polynomial(const OrientedMultigraph& g, PolyMethod method,
                                const ScanLimits& limits) {
    if (method == PolyMethod::DeletionContraction) {
        return flow_polynomial_by_recursion(g);
    }
    const int degree = cyclotomic_number(g);
    std::vector<std::pair<Int, Rat>> points;
    for (int k = degree + 1; k <= 2 * degree + 1; ++k) {
        points.emplace_back(Int(k), Rat(count_nowhere_zero_flows(g, k, limits)));
    }
    ExactPolynomial p = interpolate(points);
    if (!p.integer_coefficients()) {
        throw std::logic_error("flow polynomial interpolation produced non-integer coefficients");
    }
    return p;
}

ModularAssignment lift_flow(const OrientedMultigraph& g, int edge_id,
                            const ModularAssignment& minor_flow) {
    const EdgeKind kind = classify_edge(g, edge_id);
    if (kind != EdgeKind::Ordinary) {
        throw std::invalid_argument("lift_flow: edge " + std::to_string(edge_id) + " is a " +
                                    to_string(kind));
    }
    if (minor_flow.values.count(edge_id) ||
        minor_flow.values.size() != static_cast<size_t>(g.edge_count()) - 1) {
        throw std::invalid_argument("lift_flow: assignment must cover exactly E minus the edge");
    }
    for (const auto& [id, value] : minor_flow.values) {
        if (!g.has_edge(id)) {
            throw std::invalid_argument("lift_flow: stray edge " + std::to_string(id));
        }
        (void)value;
    }
    // The one consistent choice is f(e) = (A* f)_u, the net flow at the tail
    // with e's column removed. For a flow off G\e this is zero.
    const Edge& e = g.edge(edge_id);
    long long net_at_tail = 0;
    for (const Edge& other : g.edges()) {
        if (other.id == edge_id || other.is_loop()) continue;
        const int value = minor_flow.values.at(other.id);
        if (other.head == e.tail) net_at_tail += value;
        if (other.tail == e.tail) net_at_tail -= value;
    }
    ModularAssignment lifted = minor_flow;
    lifted.values[edge_id] = reduce_mod(net_at_tail, minor_flow.modulus);
    if (!is_flow(g, lifted)) {
        throw std::invalid_argument("lift_flow: input is not a flow on G/e or G\\e");
    }
    return lifted;
}

} // namespace flowrec
