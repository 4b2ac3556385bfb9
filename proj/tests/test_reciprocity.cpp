#include "doctest.h"

#include <map>
#include <set>

#include "fixtures.hpp"
#include "flowrec/corpus.hpp"
#include "flowrec/flows.hpp"
#include "flowrec/lattice.hpp"
#include "flowrec/reciprocity.hpp"
#include "flowrec/tensions.hpp"
#include "flowrec/tutte.hpp"

using namespace flowrec;
using namespace flowrec::testing;

TEST_CASE("flow pair counts of the running examples") {
    CHECK(count_flow_pairs(g1(), 2) == Int(12));
    CHECK(count_flow_pairs(g1(), 1) == Int(6));
    CHECK(count_flow_pairs(g2(), 1) == Int(18));
    for (int k = 1; k <= 3; ++k) {
        CHECK(count_flow_pairs(g2(), k) == to_int((k + 1) * (k + 2) * (k + 2)));
    }

    // Census by support size: the zero flow pairs with the 6 totally cyclic
    // reorientations, supports of size two contribute 6(k-1), full support
    // gives the nowhere-zero count.
    for (int k = 1; k <= 3; ++k) {
        const std::map<int, Int> census = flow_pair_census(g1(), k);
        std::map<int, Int> expected;
        expected[0] = Int(6);
        if (k > 1) {
            expected[2] = to_int(6 * (k - 1));
            if (k > 2) expected[3] = to_int((k - 1) * (k - 2));
        }
        CHECK(census == expected);
    }
}

TEST_CASE("flow pair reciprocity over the corpus") {
    std::vector<OrientedMultigraph> graphs = exhaustive_corpus(3, 4);
    for (const OrientedMultigraph& g : random_corpus(15, 5, 7, 5)) graphs.push_back(g);
    for (const OrientedMultigraph& g : graphs) {
        const ExactPolynomial phi = flow_polynomial(g);
        const Int sign = parity_sign(cyclotomic_number(g));
        for (int k = 1; k <= 3; ++k) {
            CHECK(Rat(count_flow_pairs(g, k)) == Rat(sign) * phi.evaluate(to_int(-k)));
        }
    }
}

TEST_CASE("flow pairs are the closed fiber points in disguise") {
    // The proof's bijection: f in k P(b) maps to (f mod k, { e : f_e = k }),
    // inverted by lifting sigma back to value k.
    for (const OrientedMultigraph& g : exhaustive_corpus(3, 4)) {
        for (int k = 1; k <= 3; ++k) {
            std::set<std::vector<long long>> points;
            for (const FeasibleRHS& b : feasible_b_set(g)) {
                for (const auto& point : fiber_lattice_points(g, b, k, Openness::Closed)) {
                    CHECK(points.insert(point).second);
                }
            }
            std::set<std::pair<std::map<int, int>, std::vector<int>>> pairs;
            for (const FlowPair& pair : enumerate_flow_pairs(g, k)) {
                pairs.emplace(pair.flow.values, pair.sigma.flipped);
            }
            CHECK(points.size() == pairs.size());
            for (const std::vector<long long>& point : points) {
                std::map<int, int> residues;
                std::vector<int> at_top;
                for (int j = 0; j < g.edge_count(); ++j) {
                    const int id = g.edges()[static_cast<size_t>(j)].id;
                    const long long v = point[static_cast<size_t>(j)];
                    residues[id] = static_cast<int>(v % k);
                    if (v == k) at_top.push_back(id);
                }
                CHECK(pairs.count({residues, at_top}) == 1);

                // Inversion: sigma pins the coordinates that sit at k.
                std::vector<long long> rebuilt(static_cast<size_t>(g.edge_count()));
                for (int j = 0; j < g.edge_count(); ++j) {
                    const int id = g.edges()[static_cast<size_t>(j)].id;
                    const bool top =
                        std::find(at_top.begin(), at_top.end(), id) != at_top.end();
                    rebuilt[static_cast<size_t>(j)] = top ? k : residues[id];
                }
                CHECK(rebuilt == point);
            }
        }
    }
}

TEST_CASE("tension pair counts") {
    CHECK(count_tension_pairs(triangle(), 1) == Int(6));
    for (int l = 1; l <= 3; ++l) {
        CHECK(count_tension_pairs(single_edge(), l) == to_int(l + 1));
    }
    CHECK(count_tension_pairs(single_loop(), 2) == Int(0));

    for (const OrientedMultigraph& g : exhaustive_corpus(3, 4)) {
        const ExactPolynomial tau = tension_polynomial(g);
        const Int sign = parity_sign(g.vertex_count() - component_count(g));
        for (int l = 1; l <= 3; ++l) {
            CHECK(Rat(count_tension_pairs(g, l)) == Rat(sign) * tau.evaluate(to_int(-l)));
        }
    }
}

TEST_CASE("Stanley pairs") {
    CHECK(count_stanley_pairs(triangle(), 1) == Int(6));
    CHECK(count_stanley_pairs(edgeless(3), 2) == Int(8));
    CHECK(count_stanley_pairs(single_edge(), 1) == Int(2));

    for (const OrientedMultigraph& g : exhaustive_corpus(3, 4)) {
        const ExactPolynomial chi = chromatic_polynomial(g);
        const Int sign = parity_sign(g.vertex_count());
        for (int l = 1; l <= 3; ++l) {
            const Int stanley = count_stanley_pairs(g, l);
            CHECK(Rat(stanley) == Rat(sign) * chi.evaluate(to_int(-l)));
            CHECK(stanley == pow_int(Int(l), static_cast<unsigned long>(component_count(g))) *
                                 count_tension_pairs(g, l));
        }
    }
}

TEST_CASE("Tutte triple counts equal the rank evaluations") {
    CHECK(count_tutte_triples(g1(), 1, 1) == Int(8));
    CHECK(count_tutte_triples(edgeless(2), 2, 2) == Int(1));
    for (const OrientedMultigraph& g : {g1(), g2(), triangle(), single_loop()}) {
        CHECK(count_tutte_triples(g, 1, 1) == to_int(1ll << g.edge_count()));
    }

    for (const OrientedMultigraph& g : exhaustive_corpus(3, 4)) {
        const BivariatePolynomial t = tutte_polynomial(g);
        for (int l = 1; l <= 2; ++l) {
            for (int k = 1; k <= 2; ++k) {
                const Int expected = t.evaluate(to_int(1 + l), to_int(1 + k));
                CHECK(count_tutte_triples(g, l, k) == expected);
                CHECK(convolution(g, l, k) == expected);
                CHECK(reiner_sum(g, l, k) == expected);
            }
        }
    }
}

TEST_CASE("Reiner double sum on the examples") {
    CHECK(reiner_sum(edgeless(3), 1, 1) == Int(1));
    CHECK(reiner_sum(g1(), 1, 1) == Int(8));
    CHECK(reiner_sum(triangle(), 2, 2) ==
          tutte_polynomial(triangle()).evaluate(Int(3), Int(3)));
}

TEST_CASE("unique split witness") {
    const OrientedMultigraph g = g1();
    // Zero flow and tension, sigma = {1} totally cyclic: S is everything.
    TutteTriple cyclic{make_assignment(g, 2, {0, 0, 0}), make_assignment(g, 2, {0, 0, 0}),
                       Reorientation{{1}}};
    CHECK(unique_split_witness(g, cyclic) == std::vector<int>{1, 2, 3});

    // Zero flow and tension, sigma empty: G1 itself is acyclic, S is empty.
    TutteTriple acyclic{make_assignment(g, 2, {0, 0, 0}), make_assignment(g, 2, {0, 0, 0}),
                        Reorientation{{}}};
    CHECK(unique_split_witness(g, acyclic).empty());

    TutteTriple bad{make_assignment(g, 2, {1, 0, 0}), make_assignment(g, 2, {0, 0, 0}),
                    Reorientation{{}}};
    CHECK_THROWS_AS(unique_split_witness(g, bad), std::invalid_argument);
}

TEST_CASE("the split witness is the unique valid split") {
    for (const OrientedMultigraph& g : exhaustive_corpus(2, 4)) {
        const std::vector<int> ids = g.edge_ids();
        for (const TutteTriple& triple : enumerate_tutte_triples(g, 2, 2)) {
            const std::vector<int> witness = unique_split_witness(g, triple);
            int matches = 0;
            for (unsigned mask = 0; mask < (1u << ids.size()); ++mask) {
                std::vector<int> subset;
                for (size_t j = 0; j < ids.size(); ++j) {
                    if (mask & (1u << j)) subset.push_back(ids[j]);
                }
                // Split test: flow lives inside S, tension outside, sigma
                // splits into a totally cyclic and an acyclic part.
                std::vector<int> sigma_in, sigma_out;
                for (int id : triple.sigma.flipped) {
                    (std::find(subset.begin(), subset.end(), id) != subset.end() ? sigma_in
                                                                                 : sigma_out)
                        .push_back(id);
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
                         is_totally_cyclic(reorient(
                             contract_edges(inside, triple.flow.support()), sigma_in));
                }
                if (ok) {
                    const OrientedMultigraph outside = contract_edges(g, subset);
                    ModularAssignment tension_out{triple.tension.modulus, {}};
                    for (const Edge& e : outside.edges()) {
                        tension_out.values[e.id] = triple.tension.values.at(e.id);
                    }
                    ok = is_tension(outside, tension_out) &&
                         is_acyclic(reorient(
                             delete_edges(outside, triple.tension.support()), sigma_out));
                }
                if (ok) {
                    ++matches;
                    CHECK(subset == witness);
                }
            }
            CHECK(matches == 1);
        }
    }
}

TEST_CASE("appendix recursion for the pair count") {
    // For G1 at k = 2: 12 = R(G without e) + R(G contract e) = 3 + 9.
    const auto clauses = appendix_recursion_clauses(g1(), 2);
    REQUIRE(clauses.size() == 3);
    for (const RecursionClause& clause : clauses) {
        CHECK(clause.lhs == Int(12));
        CHECK(clause.pass);
    }
    CHECK(count_flow_pairs(delete_edges(g1(), {1}), 2) == Int(3));
    CHECK(count_flow_pairs(contract_edges(g1(), {1}), 2) == Int(9));

    // Base, loop and coloop clauses.
    CHECK(appendix_recursion_check(edgeless(2), 3));
    CHECK(appendix_recursion_check(single_loop(), 2));
    CHECK(appendix_recursion_check(single_edge(), 2));
    CHECK(appendix_recursion_check(triangle_with_pendant(), 2));

    for (const OrientedMultigraph& g : exhaustive_corpus(3, 3)) {
        for (int k = 1; k <= 2; ++k) CHECK(appendix_recursion_check(g, k));
    }
}
