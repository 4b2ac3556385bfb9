#include "flowrec/lattice.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "flowrec/tensions.hpp"

namespace flowrec {

namespace {

// Smallest totally cyclic reorientation (in enumeration order) whose
// incidence image is b; empty if b is infeasible.
bool find_witness(const OrientedMultigraph& g, const FeasibleRHS& b, const ScanLimits& limits,
                  Reorientation& witness) {
    for (const Reorientation& sigma :
         enumerate_reorientations(g, OrientationClass::TotallyCyclic, limits)) {
        if (incidence_image(g, sigma) == b.b) {
            witness = sigma;
            return true;
        }
    }
    return false;
}

void check_dilation(long long k, Openness openness, const char* what) {
    if (openness == Openness::Open && k < 1) {
        throw std::invalid_argument(std::string(what) + ": open counts need k >= 1");
    }
    if (openness == Openness::Closed && k < 0) {
        throw std::invalid_argument(std::string(what) + ": closed counts need k >= 0");
    }
}

// Walks the integer points of the fiber { f : A f = k b, lo <= f_e <= hi }
// through co-tree coordinates: f = k e_sigma + h C for h in Z^cotree.
void for_each_fiber_point(const OrientedMultigraph& g, const FeasibleRHS& b, long long k,
                          Openness openness, const ScanLimits& limits,
                          const std::function<void(const std::vector<long long>&)>& visit) {
    check_dilation(k, openness, "count_fiber_points");
    if (b.b.size() != static_cast<size_t>(g.vertex_count())) {
        throw std::invalid_argument("fiber: b length does not match vertex count");
    }
    Reorientation witness;
    if (!find_witness(g, b, limits, witness)) {
        throw std::invalid_argument("fiber: b is not feasible");
    }
    const long long lo = openness == Openness::Open ? 1 : 0;
    const long long hi = openness == Openness::Open ? k - 1 : k;
    const int m = g.edge_count();

    std::vector<long long> base(static_cast<size_t>(m), 0);
    for (int id : witness.flipped) base[static_cast<size_t>(g.edge_index(id))] = k;

    const CycleBasisMatrix basis = cycle_basis(g);
    const int xi = static_cast<int>(basis.cotree.size());
    std::vector<int> cotree_positions;
    for (int id : basis.cotree) cotree_positions.push_back(g.edge_index(id));
    std::vector<int> forest_positions;
    for (int id : basis.forest) forest_positions.push_back(g.edge_index(id));

    if (hi < lo) {
        // Open dilate of a positive-dimensional slice at k = 1 is empty.
        if (xi == 0 && m == 0) visit(base);
        return;
    }
    require_scan_points(saturating_pow(static_cast<unsigned long long>(hi - lo + 1),
                                       static_cast<unsigned>(xi)),
                        limits, "count_fiber_points");

    std::vector<long long> point(static_cast<size_t>(m), 0);
    std::vector<long long> target(static_cast<size_t>(xi), lo);
    for (;;) {
        bool inside = true;
        for (int r = 0; r < xi; ++r) {
            point[static_cast<size_t>(cotree_positions[static_cast<size_t>(r)])] =
                target[static_cast<size_t>(r)];
        }
        // Forest coordinates follow from f = base + sum h_r row_r with
        // h_r = target_r - base at the co-tree position.
        for (int position : forest_positions) {
            long long value = base[static_cast<size_t>(position)];
            for (int r = 0; r < xi; ++r) {
                const int coefficient =
                    basis.rows[static_cast<size_t>(r)][static_cast<size_t>(position)];
                if (coefficient == 0) continue;
                const long long h =
                    target[static_cast<size_t>(r)] -
                    base[static_cast<size_t>(cotree_positions[static_cast<size_t>(r)])];
                value += coefficient * h;
            }
            if (value < lo || value > hi) {
                inside = false;
                break;
            }
            point[static_cast<size_t>(position)] = value;
        }
        if (inside) visit(point);

        int digit = xi - 1;
        while (digit >= 0 && target[static_cast<size_t>(digit)] == hi) {
            target[static_cast<size_t>(digit)] = lo;
            --digit;
        }
        if (digit < 0) break;
        ++target[static_cast<size_t>(digit)];
    }
}

} // namespace

std::vector<FeasibleRHS> feasible_b_set(const OrientedMultigraph& g, const ScanLimits& limits) {
    std::set<std::vector<long long>> images;
    for (const Reorientation& sigma :
         enumerate_reorientations(g, OrientationClass::TotallyCyclic, limits)) {
        images.insert(incidence_image(g, sigma));
    }
    std::vector<FeasibleRHS> bs;
    bs.reserve(images.size());
    for (const std::vector<long long>& image : images) bs.push_back(FeasibleRHS{image});
    return bs;
}

Int count_fiber_points(const OrientedMultigraph& g, const FeasibleRHS& b, long long k,
                       Openness openness, const ScanLimits& limits) {
    long long count = 0;
    for_each_fiber_point(g, b, k, openness, limits,
                         [&](const std::vector<long long>&) { ++count; });
    return to_int(count);
}

Int count_fiber_points_exhaustive(const OrientedMultigraph& g, const FeasibleRHS& b, long long k,
                                  Openness openness, const ScanLimits& limits) {
    check_dilation(k, openness, "count_fiber_points_exhaustive");
    if (b.b.size() != static_cast<size_t>(g.vertex_count())) {
        throw std::invalid_argument("fiber: b length does not match vertex count");
    }
    const long long lo = openness == Openness::Open ? 1 : 0;
    const long long hi = openness == Openness::Open ? k - 1 : k;
    const int m = g.edge_count();
    if (hi < lo) return m == 0 && std::all_of(b.b.begin(), b.b.end(), [](long long v) {
               return v == 0;
           })
               ? Int(1)
               : Int(0);
    require_scan_points(saturating_pow(static_cast<unsigned long long>(hi - lo + 1),
                                       static_cast<unsigned>(m)),
                        limits, "count_fiber_points_exhaustive");
    std::vector<long long> point(static_cast<size_t>(m), lo);
    long long count = 0;
    for (;;) {
        std::vector<long long> image = incidence_apply(g, point);
        bool match = true;
        for (size_t i = 0; i < image.size(); ++i) {
            if (image[i] != k * b.b[i]) {
                match = false;
                break;
            }
        }
        if (match) ++count;
        int digit = m - 1;
        while (digit >= 0 && point[static_cast<size_t>(digit)] == hi) {
            point[static_cast<size_t>(digit)] = lo;
            --digit;
        }
        if (digit < 0) break;
        ++point[static_cast<size_t>(digit)];
    }
    return to_int(count);
}

std::vector<std::vector<long long>> fiber_lattice_points(const OrientedMultigraph& g,
                                                         const FeasibleRHS& b, long long k,
                                                         Openness openness,
                                                         const ScanLimits& limits) {
    std::vector<std::vector<long long>> points;
    for_each_fiber_point(g, b, k, openness, limits,
                         [&](const std::vector<long long>& point) { points.push_back(point); });
    std::sort(points.begin(), points.end());
    return points;
}

ExactPolynomial ehrhart_polynomial(const OrientedMultigraph& g, const FeasibleRHS& b,
                                   const ScanLimits& limits) {
    const int xi = cyclotomic_number(g);
    std::vector<std::pair<Int, Rat>> samples;
    for (int k = 0; k <= xi; ++k) {
        samples.emplace_back(Int(k), Rat(count_fiber_points(g, b, k, Openness::Closed, limits)));
    }
    return interpolate(samples);
}

bool check_ehrhart_macdonald(const OrientedMultigraph& g, const FeasibleRHS& b, long long k,
                             const ScanLimits& limits) {
    if (k < 1) throw std::invalid_argument("check_ehrhart_macdonald: k must be positive");
    const Int open = count_fiber_points(g, b, k, Openness::Open, limits);
    const ExactPolynomial closed = ehrhart_polynomial(g, b, limits);
    const Rat reflected = Rat(parity_sign(cyclotomic_number(g))) * closed.evaluate(to_int(-k));
    return Rat(open) == reflected;
}

std::vector<std::pair<FeasibleRHS, std::vector<long long>>> indegree_map(
    const OrientedMultigraph& g, const ScanLimits& limits) {
    const GraphInvariants inv = invariants(g);
    std::vector<long long> ones(static_cast<size_t>(g.edge_count()), 1);
    const std::vector<long long> b0 = incidence_apply(g, ones);

    std::vector<std::pair<FeasibleRHS, std::vector<long long>>> table;
    for (const FeasibleRHS& b : feasible_b_set(g, limits)) {
        std::vector<long long> in_degree(static_cast<size_t>(g.vertex_count()), 0);
        for (int i = 0; i < g.vertex_count(); ++i) {
            const long long degree = inv.in_degree[static_cast<size_t>(i)] +
                                     inv.out_degree[static_cast<size_t>(i)];
            const long long numerator = degree + b0[static_cast<size_t>(i)] -
                                        2 * b.b[static_cast<size_t>(i)];
            if (numerator % 2 != 0) {
                throw std::logic_error("indegree_map: parity violation");
            }
            in_degree[static_cast<size_t>(i)] = numerator / 2;
        }
        table.emplace_back(b, std::move(in_degree));
    }
    return table;
}

FacePartition face_partition(const OrientedMultigraph& g, const std::vector<long long>& point,
                             long long k) {
    if (point.size() != static_cast<size_t>(g.edge_count())) {
        throw std::invalid_argument("face_partition: point length does not match edge count");
    }
    FacePartition face;
    for (int j = 0; j < g.edge_count(); ++j) {
        const long long value = point[static_cast<size_t>(j)];
        if (value < 0 || value > k) {
            throw std::invalid_argument("face_partition: point is outside the dilated cube");
        }
        const int id = g.edges()[static_cast<size_t>(j)].id;
        if (value == 0) {
            face.sigma_minus.push_back(id);
        } else if (value == k) {
            face.sigma_plus.push_back(id);
        } else {
            face.sigma_zero.push_back(id);
        }
    }
    std::sort(face.sigma_minus.begin(), face.sigma_minus.end());
    std::sort(face.sigma_zero.begin(), face.sigma_zero.end());
    std::sort(face.sigma_plus.begin(), face.sigma_plus.end());
    return face;
}

Int inside_out_flow_count(const OrientedMultigraph& g, const std::vector<int>& forest,
                          long long k, const ScanLimits& limits) {
    if (k < 1) throw std::invalid_argument("inside_out_flow_count: k must be positive");
    const CycleBasisMatrix basis = cycle_basis(g, forest);
    const int xi = static_cast<int>(basis.cotree.size());
    const int forest_size = static_cast<int>(basis.forest.size());
    if (k == 1 && xi > 0) return Int(0);
    require_scan_points(saturating_pow(static_cast<unsigned long long>(k - 1),
                                       static_cast<unsigned>(xi)),
                        limits, "inside_out_flow_count");

    // Column of the basis matrix at every forest position.
    std::vector<int> forest_positions;
    for (int id : basis.forest) forest_positions.push_back(g.edge_index(id));

    std::vector<long long> h(static_cast<size_t>(xi), 1);
    long long count = 0;
    for (;;) {
        bool off_arrangement = true;
        for (int s = 0; s < forest_size && off_arrangement; ++s) {
            long long sum = 0;
            for (int r = 0; r < xi; ++r) {
                sum += h[static_cast<size_t>(r)] *
                       basis.rows[static_cast<size_t>(r)]
                                 [static_cast<size_t>(forest_positions[static_cast<size_t>(s)])];
            }
            if (sum % k == 0) off_arrangement = false;
        }
        if (off_arrangement) ++count;

        int digit = xi - 1;
        while (digit >= 0 && h[static_cast<size_t>(digit)] == k - 1) {
            h[static_cast<size_t>(digit)] = 1;
            --digit;
        }
        if (digit < 0) break;
        ++h[static_cast<size_t>(digit)];
    }
    return to_int(count);
}

Int inside_out_tension_count(const OrientedMultigraph& g, const std::vector<int>& forest,
                             long long modulus, const ScanLimits& limits) {
    if (modulus < 1) throw std::invalid_argument("inside_out_tension_count: modulus must be positive");
    const CycleBasisMatrix basis = cycle_basis(g, forest);
    const int xi = static_cast<int>(basis.cotree.size());
    const int forest_size = static_cast<int>(basis.forest.size());
    if (modulus == 1 && forest_size > 0) return Int(0);
    require_scan_points(saturating_pow(static_cast<unsigned long long>(modulus - 1),
                                       static_cast<unsigned>(forest_size)),
                        limits, "inside_out_tension_count");

    std::vector<int> forest_positions;
    for (int id : basis.forest) forest_positions.push_back(g.edge_index(id));

    std::vector<long long> values(static_cast<size_t>(forest_size), 1);
    long long count = 0;
    for (;;) {
        bool off_arrangement = true;
        for (int r = 0; r < xi && off_arrangement; ++r) {
            long long implied = 0;
            for (int s = 0; s < forest_size; ++s) {
                implied -= values[static_cast<size_t>(s)] *
                           basis.rows[static_cast<size_t>(r)]
                                     [static_cast<size_t>(forest_positions[static_cast<size_t>(s)])];
            }
            if (implied % modulus == 0) off_arrangement = false;
        }
        if (off_arrangement) ++count;

        int digit = forest_size - 1;
        while (digit >= 0 && values[static_cast<size_t>(digit)] == modulus - 1) {
            values[static_cast<size_t>(digit)] = 1;
            --digit;
        }
        if (digit < 0) break;
        ++values[static_cast<size_t>(digit)];
    }
    return to_int(count);
}

} // namespace flowrec
