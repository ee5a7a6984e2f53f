// Serial reference path against the OpenMP path for each parallel kernel.
// Both paths return identical results; only wall time differs.

#include <benchmark/benchmark.h>

#include "lsf/exactlinalg.hpp"
#include "lsf/families.hpp"
#include "lsf/lorentz.hpp"

using namespace lsf;

namespace {

ExecPolicy policy_of(const benchmark::State& state) {
    return state.range(0) ? ExecPolicy::Parallel : ExecPolicy::Serial;
}

// Rank-one plus a small diagonal: every minor is nonzero, so all 2^n - 1 run.
SymMatrix test_matrix(std::size_t n) {
    SymMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) a.set(i, j, Rational(static_cast<long>((i + 1) * (j + 1) + (i == j ? 3 : 0))));
    return a;
}

void BM_MinorCriterion(benchmark::State& state) {
    const SymMatrix a = test_matrix(static_cast<std::size_t>(state.range(1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(at_most_one_positive_eigenvalue(a, policy_of(state), MinorMethod::Elimination));
}
BENCHMARK(BM_MinorCriterion)->ArgsProduct({{0, 1}, {10, 13}})->ArgNames({"parallel", "n"})->Unit(benchmark::kMillisecond);

void BM_ReducedTester(benchmark::State& state) {
    const SymPoly f = normalized_schur({3, 2, 2, 1});
    const Options options{policy_of(state), MinorMethod::Expansion};
    for (auto _ : state) benchmark::DoNotOptimize(is_lorentzian(f, Mode::function(), options));
}
BENCHMARK(BM_ReducedTester)->ArgsProduct({{0, 1}})->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
    const DensePoly g = expand(normalized_schur({3, 2}), static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(oracle_is_lorentzian(g, policy_of(state)));
}
BENCHMARK(BM_Oracle)->ArgsProduct({{0, 1}, {5, 7}})->ArgNames({"parallel", "n"})->Unit(benchmark::kMillisecond);

void BM_Chromatic(benchmark::State& state) {
    const Graph g = indifference_graph(DyckPath("NNNENENEEENE"));
    for (auto _ : state) benchmark::DoNotOptimize(chromatic_symmetric(g, 6, policy_of(state)));
}
BENCHMARK(BM_Chromatic)->ArgsProduct({{0, 1}})->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
