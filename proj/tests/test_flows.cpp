#include "doctest.h"

#include "fixtures.hpp"
#include "flowrec/corpus.hpp"
#include "flowrec/flows.hpp"

using namespace flowrec;
using namespace flowrec::testing;

TEST_CASE("flow conservation") {
    const OrientedMultigraph g = g1();
    CHECK(is_flow(g, make_assignment(g, 4, {1, 1, 2})));
    CHECK(is_flow(g, make_assignment(g, 4, {0, 0, 0})));
    CHECK_FALSE(is_flow(g, make_assignment(g, 4, {1, 1, 1})));
    CHECK_FALSE(is_flow(single_edge(), make_assignment(single_edge(), 3, {1})));
    CHECK(is_flow(single_loop(), make_assignment(single_loop(), 3, {2})));

    ModularAssignment missing;
    missing.modulus = 4;
    missing.values = {{1, 1}};
    CHECK_THROWS_AS(is_flow(g, missing), std::invalid_argument);
}

TEST_CASE("nowhere-zero flow counts of the running examples") {
    CHECK(count_nowhere_zero_flows(g1(), 4) == Int(6));
    CHECK(count_nowhere_zero_flows(g2(), 3) == Int(2));
    CHECK(count_nowhere_zero_flows(single_edge(), 5) == Int(0));
    CHECK(count_nowhere_zero_flows(path2(), 5) == Int(0));
    CHECK(count_nowhere_zero_flows(edgeless(2), 3) == Int(1));
    CHECK(count_nowhere_zero_flows(g1(), 1) == Int(0));
    CHECK(count_nowhere_zero_flows(edgeless(1), 1) == Int(1));
}

TEST_CASE("basis-accelerated count agrees with the exhaustive scan") {
    for (const OrientedMultigraph& g : exhaustive_corpus(3, 4)) {
        for (int k = 1; k <= 4; ++k) {
            CHECK(count_nowhere_zero_flows(g, k) == count_nowhere_zero_flows_exhaustive(g, k));
        }
    }
    for (const OrientedMultigraph& g : random_corpus(20, 5, 7, 7)) {
        for (int k = 2; k <= 3; ++k) {
            CHECK(count_nowhere_zero_flows(g, k) == count_nowhere_zero_flows_exhaustive(g, k));
        }
    }
}

TEST_CASE("flow polynomials of the running examples") {
    const ExactPolynomial phi1 = flow_polynomial(g1());
    CHECK(phi1.to_string() == "2 - 3*k + k^2");
    CHECK(flow_polynomial(g1(), PolyMethod::Enumerate) == phi1);

    const ExactPolynomial phi2 = flow_polynomial(g2());
    CHECK(phi2.to_string() == "-4 + 8*k - 5*k^2 + k^3"); // (k-1)(k-2)^2
    CHECK(flow_polynomial(g2(), PolyMethod::Enumerate) == phi2);

    CHECK(flow_polynomial(edgeless(3)).to_string() == "1");
    CHECK(flow_polynomial(single_edge()).is_zero());
    CHECK(flow_polynomial(single_loop()).to_string() == "-1 + k");
}

TEST_CASE("flow polynomial properties") {
    for (const OrientedMultigraph& g : exhaustive_corpus(3, 4)) {
        const ExactPolynomial phi = flow_polynomial(g);
        CHECK(phi.integer_coefficients());
        // Evaluations count flows.
        for (int k = 1; k <= 5; ++k) {
            CHECK(Rat(count_nowhere_zero_flows(g, k)) == phi.evaluate(Int(k)));
        }
        // Degree and leading coefficient on coloop-free graphs.
        bool has_coloop = false;
        for (const Edge& e : g.edges()) {
            if (classify_edge(g, e.id) == EdgeKind::Coloop) has_coloop = true;
        }
        if (has_coloop) {
            CHECK(phi.is_zero());
        } else {
            CHECK(phi.degree() == cyclotomic_number(g));
            CHECK(phi.leading_coefficient() == Rat(1));
        }
    }
}

TEST_CASE("both flow polynomial methods agree on the exhaustive corpus") {
    // |V| <= 4, |E| <= 6 as the method-agreement bed.
    for (const OrientedMultigraph& g : exhaustive_corpus(4, 6)) {
        CHECK(flow_polynomial(g, PolyMethod::Enumerate) ==
              flow_polynomial(g, PolyMethod::DeletionContraction));
    }
}

TEST_CASE("flow restriction and lifting across a minor") {
    // Contracting e1 of G1 leaves two loops; any values lift uniquely.
    const OrientedMultigraph g = g1();
    ModularAssignment on_contraction;
    on_contraction.modulus = 3;
    on_contraction.values = {{2, 1}, {3, 2}};
    const ModularAssignment lifted = lift_flow(g, 1, on_contraction);
    CHECK(lifted.values.at(1) == 0);
    CHECK(is_flow(g, lifted));

    // The all-zero flow on G minus e lifts to the all-zero flow.
    ModularAssignment zero;
    zero.modulus = 4;
    zero.values = {{2, 0}, {3, 0}};
    CHECK(lift_flow(g, 1, zero).values.at(1) == 0);

    CHECK_THROWS_AS(lift_flow(single_loop(), 1, ModularAssignment{3, {}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(lift_flow(single_edge(), 1, ModularAssignment{3, {}}),
                    std::invalid_argument);
}

TEST_CASE("projection and unique lifting over the corpus") {
    for (const OrientedMultigraph& g : exhaustive_corpus(3, 4)) {
        for (const Edge& e : g.edges()) {
            if (classify_edge(g, e.id) != EdgeKind::Ordinary) continue;
            const OrientedMultigraph contracted = contract_edges(g, {e.id});
            const OrientedMultigraph deleted = delete_edges(g, {e.id});
            const int k = 3;
            // Walk all flows of G by restriction through the odometer of
            // the exhaustive scan: use all assignments and filter.
            std::vector<int> values(static_cast<size_t>(g.edge_count()), 0);
            for (;;) {
                std::vector<long long> widened(values.begin(), values.end());
                const ModularAssignment f = make_assignment(g, k, widened);
                if (is_flow(g, f)) {
                    ModularAssignment restricted = f;
                    restricted.values.erase(e.id);
                    // Projection: always a flow on G/e; on G\e iff f(e) = 0.
                    CHECK(is_flow(contracted, restricted));
                    CHECK(is_flow(deleted, restricted) == (f.values.at(e.id) == 0));
                    // Lifting is unique: every candidate value other than
                    // the lifted one fails.
                    const ModularAssignment lifted = lift_flow(g, e.id, restricted);
                    CHECK(lifted == f);
                    int valid = 0;
                    for (int candidate = 0; candidate < k; ++candidate) {
                        ModularAssignment probe = restricted;
                        probe.values[e.id] = candidate;
                        if (is_flow(g, probe)) ++valid;
                    }
                    CHECK(valid == 1);
                }
                int digit = g.edge_count() - 1;
                while (digit >= 0 && values[static_cast<size_t>(digit)] == k - 1) {
                    values[static_cast<size_t>(digit)] = 0;
                    --digit;
                }
                if (digit < 0) break;
                ++values[static_cast<size_t>(digit)];
            }
        }
    }
}

TEST_CASE("scan caps are enforced") {
    ScanLimits limits;
    limits.max_scan_points = 10;
    CHECK_THROWS_AS(count_nowhere_zero_flows_exhaustive(g2(), 5, limits), CapExceeded);
}
