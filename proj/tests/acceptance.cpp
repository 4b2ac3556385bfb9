// Acceptance suite: one pass/fail line per criterion, nonzero exit status
// if anything fails. Runs the full identity checks over the exhaustive
// corpus (|V| <= 3, |E| <= 4) plus fifty seeded random graphs
// (|V| <= 5, |E| <= 7).

#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "flowrec/corpus.hpp"
#include "flowrec/flows.hpp"
#include "flowrec/graph.hpp"
#include "flowrec/lattice.hpp"
#include "flowrec/orientations.hpp"
#include "flowrec/reciprocity.hpp"
#include "flowrec/tensions.hpp"
#include "flowrec/tutte.hpp"

using namespace flowrec;

namespace {

constexpr unsigned long long kCorpusSeed = 1729;

OrientedMultigraph g1() { return OrientedMultigraph::from_arcs(2, {{1, 2}, {1, 2}, {1, 2}}); }

OrientedMultigraph g2() {
    return OrientedMultigraph::from_arcs(3, {{1, 2}, {2, 3}, {2, 3}, {3, 1}, {3, 1}});
}

std::vector<OrientedMultigraph> acceptance_corpus() {
    std::vector<OrientedMultigraph> corpus = exhaustive_corpus(3, 4);
    for (OrientedMultigraph& g : random_corpus(50, 5, 7, kCorpusSeed)) {
        corpus.push_back(std::move(g));
    }
    return corpus;
}

class Runner {
public:
    void criterion(int number, const std::string& name, const std::function<bool()>& body) {
        bool pass = false;
        std::string note;
        try {
            pass = body();
        } catch (const std::exception& error) {
            note = std::string(" (") + error.what() + ")";
        }
        std::printf("criterion %2d [%s] %s%s\n", number, pass ? "PASS" : "FAIL", name.c_str(),
                    note.c_str());
        if (!pass) ++failures_;
    }

    int failures() const { return failures_; }

private:
    int failures_ = 0;
};

ExactPolynomial interpolated(const std::vector<std::pair<long long, Int>>& samples) {
    std::vector<std::pair<Int, Rat>> points;
    for (const auto& [x, y] : samples) points.emplace_back(to_int(x), Rat(y));
    return interpolate(points);
}

// Exhaustive split test used by criterion 10.
bool split_is_unique(const OrientedMultigraph& g, const TutteTriple& triple,
                     const std::vector<int>& witness) {
    const std::vector<int> ids = g.edge_ids();
    int matches = 0;
    for (unsigned mask = 0; mask < (1u << ids.size()); ++mask) {
        std::vector<int> subset;
        for (size_t j = 0; j < ids.size(); ++j) {
            if (mask & (1u << j)) subset.push_back(ids[j]);
        }
        std::vector<int> sigma_in, sigma_out;
        for (int id : triple.sigma.flipped) {
            const bool inside = std::find(subset.begin(), subset.end(), id) != subset.end();
            (inside ? sigma_in : sigma_out).push_back(id);
        }
        bool ok = true;
        for (int id : triple.flow.support()) {
            if (std::find(subset.begin(), subset.end(), id) == subset.end()) ok = false;
        }
        for (int id : triple.tension.support()) {
            if (std::find(subset.begin(), subset.end(), id) != subset.end()) ok = false;
        }
        if (ok) {
            const OrientedMultigraph inside = restrict_edges(g, subset);
            ModularAssignment flow_in{triple.flow.modulus, {}};
            for (int id : subset) flow_in.values[id] = triple.flow.values.at(id);
            ok = is_flow(inside, flow_in) &&
                 is_totally_cyclic(
                     reorient(contract_edges(inside, triple.flow.support()), sigma_in));
        }
        if (ok) {
            const OrientedMultigraph outside = contract_edges(g, subset);
            ModularAssignment tension_out{triple.tension.modulus, {}};
            for (const Edge& e : outside.edges()) {
                tension_out.values[e.id] = triple.tension.values.at(e.id);
            }
            ok = is_tension(outside, tension_out) &&
                 is_acyclic(reorient(delete_edges(outside, triple.tension.support()), sigma_out));
        }
        if (ok) {
            ++matches;
            if (subset != witness) return false;
        }
    }
    return matches == 1;
}

} // namespace

int main() {
    Runner runner;
    const std::vector<OrientedMultigraph> corpus = acceptance_corpus();

    runner.criterion(1, "flow polynomial of G1 identical by all four routes", [&] {
        const ExactPolynomial expected(std::vector<Rat>{Rat(2), Rat(-3), Rat(1)});
        const ExactPolynomial by_enumeration = flow_polynomial(g1(), PolyMethod::Enumerate);
        const ExactPolynomial by_recursion =
            flow_polynomial(g1(), PolyMethod::DeletionContraction);

        std::vector<std::pair<long long, Int>> fiber_sums, inside_out;
        for (long long k = 2; k <= 5; ++k) {
            Int total(0);
            for (const FeasibleRHS& b : feasible_b_set(g1())) {
                total += count_fiber_points(g1(), b, k, Openness::Open);
            }
            fiber_sums.emplace_back(k, total);
            inside_out.emplace_back(k, inside_out_flow_count(g1(), {1}, k));
        }
        return by_enumeration == expected && by_recursion == expected &&
               interpolated(fiber_sums) == expected && interpolated(inside_out) == expected;
    });

    runner.criterion(2, "flow polynomial of G2 and its four feasible b's", [&] {
        const ExactPolynomial expected(std::vector<Rat>{Rat(-4), Rat(8), Rat(-5), Rat(1)});
        return flow_polynomial(g2(), PolyMethod::Enumerate) == expected &&
               flow_polynomial(g2(), PolyMethod::DeletionContraction) == expected &&
               feasible_b_set(g2()).size() == 4;
    });

    runner.criterion(3, "Z_4 flows, totally cyclic reorientations and B of G1", [&] {
        const std::vector<FeasibleRHS> bs = feasible_b_set(g1());
        return count_nowhere_zero_flows(g1(), 4) == Int(6) &&
               enumerate_reorientations(g1(), OrientationClass::TotallyCyclic).size() == 6 &&
               bs.size() == 2 && bs[0].b == std::vector<long long>{-2, 2} &&
               bs[1].b == std::vector<long long>{-1, 1};
    });

    runner.criterion(4, "modular flow reciprocity over the corpus, k = 1..3", [&] {
        for (const OrientedMultigraph& g : corpus) {
            const ExactPolynomial phi = flow_polynomial(g);
            const Rat sign(parity_sign(cyclotomic_number(g)));
            for (int k = 1; k <= 3; ++k) {
                if (Rat(count_flow_pairs(g, k)) != sign * phi.evaluate(to_int(-k))) return false;
            }
        }
        // Census of G1 by support size: (k-1)(k-2) + 6(k-1) + 6.
        for (int k = 1; k <= 3; ++k) {
            std::map<int, Int> census = flow_pair_census(g1(), k);
            if (census[0] != Int(6)) return false;
            if (census[1] != Int(0)) return false;
            if (census[2] != to_int(6 * (k - 1))) return false;
            if (census[3] != to_int((k - 1) * (k - 2))) return false;
        }
        return true;
    });

    runner.criterion(5, "tension reciprocity and Stanley factorization, l = 1..3", [&] {
        for (const OrientedMultigraph& g : corpus) {
            const ExactPolynomial tau = tension_polynomial(g);
            const ExactPolynomial chi = chromatic_polynomial(g);
            const int c = component_count(g);
            const Rat tension_sign(parity_sign(g.vertex_count() - c));
            const Rat coloring_sign(parity_sign(g.vertex_count()));
            for (int l = 1; l <= 3; ++l) {
                const Int pairs = count_tension_pairs(g, l);
                const Int stanley = count_stanley_pairs(g, l);
                if (Rat(pairs) != tension_sign * tau.evaluate(to_int(-l))) return false;
                if (stanley != pow_int(Int(l), static_cast<unsigned long>(c)) * pairs) {
                    return false;
                }
                if (Rat(stanley) != coloring_sign * chi.evaluate(to_int(-l))) return false;
            }
        }
        return true;
    });

    runner.criterion(6, "Tutte triples, convolution and Reiner sum, l, k = 1..2", [&] {
        for (const OrientedMultigraph& g : corpus) {
            const BivariatePolynomial t = tutte_polynomial(g);
            for (int l = 1; l <= 2; ++l) {
                for (int k = 1; k <= 2; ++k) {
                    const Int direct = t.evaluate(to_int(1 + l), to_int(1 + k));
                    if (count_tutte_triples(g, l, k) != direct) return false;
                    if (convolution(g, l, k) != direct) return false;
                    if (reiner_sum(g, l, k) != direct) return false;
                }
            }
            if (count_tutte_triples(g, 1, 1) != to_int(1ll << g.edge_count())) return false;
        }
        return true;
    });

    runner.criterion(7, "Ehrhart-Macdonald reciprocity, volumes and constant terms", [&] {
        for (const OrientedMultigraph& g : corpus) {
            const std::vector<FeasibleRHS> bs = feasible_b_set(g);
            const Rat sign(parity_sign(cyclotomic_number(g)));
            Rat volume(0);
            for (const FeasibleRHS& b : bs) {
                const ExactPolynomial closed = ehrhart_polynomial(g, b);
                if (closed.coefficient(0) != Rat(1)) return false;
                volume += closed.leading_coefficient();
                for (long long k = 1; k <= 3; ++k) {
                    const Int open = count_fiber_points(g, b, k, Openness::Open);
                    if (Rat(open) != sign * closed.evaluate(to_int(-k))) return false;
                }
            }
            if (!bs.empty() && volume != Rat(1)) return false;
        }
        return true;
    });

    runner.criterion(8, "pair-count recursion clauses for every edge, k = 1..2", [&] {
        for (const OrientedMultigraph& g : corpus) {
            for (int k = 1; k <= 2; ++k) {
                if (!appendix_recursion_check(g, k)) return false;
            }
        }
        return true;
    });

    runner.criterion(9, "in-degree bijection and the Gioan count", [&] {
        for (const OrientedMultigraph& g : corpus) {
            const auto table = indegree_map(g);
            std::set<std::vector<long long>> image;
            for (const auto& [b, indegree] : table) image.insert(indegree);
            if (image.size() != table.size()) return false;

            std::set<std::vector<long long>> direct;
            for (const Reorientation& sigma :
                 enumerate_reorientations(g, OrientationClass::TotallyCyclic)) {
                direct.insert(invariants(reorient(g, sigma.flipped)).in_degree);
            }
            if (image != direct) return false;

            const Rat count(static_cast<unsigned long>(table.size()));
            const Rat via_flow = Rat(parity_sign(cyclotomic_number(g))) *
                                 flow_polynomial(g).evaluate(Int(0));
            if (count != via_flow) return false;
            if (count != Rat(tutte_value(g, Int(0), Int(1)))) return false;
        }
        return true;
    });

    runner.criterion(10, "uniqueness of the cyclic part and of the triple split (|E| <= 5)", [&] {
        for (const OrientedMultigraph& g : corpus) {
            if (g.edge_count() > 5) continue;
            const std::vector<int> ids = g.edge_ids();

            // Exactly one S has G[S] totally cyclic and G/S acyclic.
            const std::vector<int> part = cyclic_part(g);
            int witnesses = 0;
            for (unsigned mask = 0; mask < (1u << ids.size()); ++mask) {
                std::vector<int> subset;
                for (size_t j = 0; j < ids.size(); ++j) {
                    if (mask & (1u << j)) subset.push_back(ids[j]);
                }
                if (is_totally_cyclic(restrict_edges(g, subset)) &&
                    is_acyclic(contract_edges(g, subset))) {
                    ++witnesses;
                    if (subset != part) return false;
                }
            }
            if (witnesses != 1) return false;

            // Every triple over Z_2 x Z_2 splits at exactly one S.
            for (const TutteTriple& triple : enumerate_tutte_triples(g, 2, 2)) {
                if (!split_is_unique(g, triple, unique_split_witness(g, triple))) return false;
            }
        }
        return true;
    });

    if (runner.failures() == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", runner.failures());
    return 1;
}
