#include <benchmark/benchmark.h>

#include "flowrec/corpus.hpp"
#include "flowrec/flows.hpp"
#include "flowrec/lattice.hpp"
#include "flowrec/orientations.hpp"
#include "flowrec/reciprocity.hpp"
#include "flowrec/tensions.hpp"
#include "flowrec/tutte.hpp"

namespace {

using namespace flowrec;

// Doubled directed triangle: 3 vertices, 6 edges, xi = 4.
OrientedMultigraph doubled_triangle() {
    return OrientedMultigraph::from_arcs(3, {{1, 2}, {1, 2}, {2, 3}, {2, 3}, {3, 1}, {3, 1}});
}

void BM_FlowPolynomialRecursion(benchmark::State& state) {
    const OrientedMultigraph g = doubled_triangle();
    for (auto _ : state) {
        benchmark::DoNotOptimize(flow_polynomial(g, PolyMethod::DeletionContraction));
    }
}
BENCHMARK(BM_FlowPolynomialRecursion);

void BM_FlowPolynomialEnumerate(benchmark::State& state) {
    const OrientedMultigraph g = doubled_triangle();
    for (auto _ : state) {
        benchmark::DoNotOptimize(flow_polynomial(g, PolyMethod::Enumerate));
    }
}
BENCHMARK(BM_FlowPolynomialEnumerate);

void BM_CountFlowsBasis(benchmark::State& state) {
    const OrientedMultigraph g = doubled_triangle();
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_nowhere_zero_flows(g, k));
    }
}
BENCHMARK(BM_CountFlowsBasis)->Arg(5)->Arg(9)->Arg(17);

void BM_CountFlowsExhaustive(benchmark::State& state) {
    const OrientedMultigraph g = doubled_triangle();
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_nowhere_zero_flows_exhaustive(g, k));
    }
}
BENCHMARK(BM_CountFlowsExhaustive)->Arg(5)->Arg(9);

void BM_TuttePolynomial(benchmark::State& state) {
    const OrientedMultigraph g = doubled_triangle();
    for (auto _ : state) {
        benchmark::DoNotOptimize(tutte_polynomial(g));
    }
}
BENCHMARK(BM_TuttePolynomial);

void BM_FlowPairOracle(benchmark::State& state) {
    const OrientedMultigraph g = doubled_triangle();
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_flow_pairs(g, 2));
    }
}
BENCHMARK(BM_FlowPairOracle);

void BM_FeasibleBSet(benchmark::State& state) {
    const OrientedMultigraph g = doubled_triangle();
    for (auto _ : state) {
        benchmark::DoNotOptimize(feasible_b_set(g));
    }
}
BENCHMARK(BM_FeasibleBSet);

void BM_ExhaustiveCorpus(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(exhaustive_corpus(3, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_ExhaustiveCorpus)->Arg(3)->Arg(4);

} // namespace

BENCHMARK_MAIN();
