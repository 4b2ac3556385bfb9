#include "flowrec/tutte.hpp"

#include <stdexcept>

namespace flowrec {

namespace {

struct BranchChoice {
    int loop = -1;
    int coloop = -1;
    int smallest_ordinary = -1;
};

BranchChoice pick_edge(const OrientedMultigraph& g) {
    BranchChoice choice;
    for (const Edge& e : g.edges()) {
        switch (classify_edge(g, e.id)) {
        case EdgeKind::Loop:
            if (choice.loop < 0) choice.loop = e.id;
            break;
        case EdgeKind::Coloop:
            if (choice.coloop < 0) choice.coloop = e.id;
            break;
        case EdgeKind::Ordinary:
            if (choice.smallest_ordinary < 0 || e.id < choice.smallest_ordinary) {
                choice.smallest_ordinary = e.id;
            }
            break;
        }
    }
    return choice;
}

} // namespace

BivariatePolynomial tutte_polynomial(const OrientedMultigraph& g) {
    if (g.edge_count() == 0) return BivariatePolynomial::constant(Int(1));
    const BranchChoice choice = pick_edge(g);
    if (choice.loop >= 0) {
        return BivariatePolynomial::variable_y() * tutte_polynomial(delete_edges(g, {choice.loop}));
    }
    if (choice.coloop >= 0) {
        return BivariatePolynomial::variable_x() *
               tutte_polynomial(delete_edges(g, {choice.coloop}));
    }
    return tutte_polynomial(delete_edges(g, {choice.smallest_ordinary})) +
           tutte_polynomial(contract_edges(g, {choice.smallest_ordinary}));
}

Int tutte_value(const OrientedMultigraph& g, const Int& x, const Int& y) {
    if (g.edge_count() == 0) return Int(1);
    const BranchChoice choice = pick_edge(g);
    if (choice.loop >= 0) {
        if (y == 0) return Int(0);
        return y * tutte_value(delete_edges(g, {choice.loop}), x, y);
    }
    if (choice.coloop >= 0) {
        if (x == 0) return Int(0);
        return x * tutte_value(delete_edges(g, {choice.coloop}), x, y);
    }
    return tutte_value(delete_edges(g, {choice.smallest_ordinary}), x, y) +
           tutte_value(contract_edges(g, {choice.smallest_ordinary}), x, y);
}

Rat tg_evaluate(const OrientedMultigraph& g, const TGParams& params) {
    if (params.sigma_f == 0 || params.tau_f == 0) {
        throw std::invalid_argument("tg_evaluate: structure constants must be nonzero");
    }
    const unsigned long xi = static_cast<unsigned long>(cyclotomic_number(g));
    const unsigned long rank =
        static_cast<unsigned long>(g.vertex_count() - component_count(g));
    const BivariatePolynomial t = tutte_polynomial(g);
    const Rat x = params.coloop_value / Rat(params.tau_f);
    const Rat y = params.loop_value / Rat(params.sigma_f);
    return Rat(pow_int(params.sigma_f, xi)) * Rat(pow_int(params.tau_f, rank)) * t.evaluate(x, y);
}

Int specialize(const OrientedMultigraph& g, TutteSpecialization which, long long argument) {
    if (argument < 0) throw std::invalid_argument("specialize: argument must be non-negative");
    if (which == TutteSpecialization::Flow) {
        return tutte_value(g, Int(0), to_int(1 + argument));
    }
    return tutte_value(g, to_int(1 + argument), Int(0));
}

Int convolution(const OrientedMultigraph& g, long long l, long long k,
                const ScanLimits& limits) {
    if (l < 0 || k < 0) throw std::invalid_argument("convolution: l and k must be non-negative");
    const int m = g.edge_count();
    require_subset_scan(m, limits, "convolution");
    const std::vector<int> ids = g.edge_ids();
    Int sum(0);
    for (unsigned long long mask = 0; mask < (1ull << m); ++mask) {
        std::vector<int> subset;
        for (int j = 0; j < m; ++j) {
            if (mask & (1ull << j)) subset.push_back(ids[static_cast<size_t>(j)]);
        }
        const Int flow_side =
            tutte_value(prune_isolated(restrict_edges(g, subset)), Int(0), to_int(1 + k));
        if (flow_side == 0) continue;
        const Int tension_side =
            tutte_value(prune_isolated(contract_edges(g, subset)), to_int(1 + l), Int(0));
        sum += flow_side * tension_side;
    }
    return sum;
}

} // namespace flowrec
