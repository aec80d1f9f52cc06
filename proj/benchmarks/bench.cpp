#include <benchmark/benchmark.h>

#include "elliptica/relations.hpp"

using namespace elliptica;

namespace {

const TorusParams kParams{Complex(0.0, 1.0), 1e-14, 1e-10};
const Complex kTau{0.1234, 0.0567};

void BM_theta_eval(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ThetaBasis basis{n, Chars{0.5, 0.5}, kParams};
    const Complex z(0.31, 0.17);
    int alpha = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(theta(basis, alpha, z));
        alpha = (alpha + 1) % n;
    }
}
BENCHMARK(BM_theta_eval)->Arg(3)->Arg(5)->Arg(8);

void BM_build_relations_and_rank(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ThetaBasis basis{n, Chars{0.5, 0.5}, kParams};
    for (auto _ : state) {
        const auto sys = build_relations(n, 1, basis, kTau);
        benchmark::DoNotOptimize(relation_rank(sys).rank);
    }
}
BENCHMARK(BM_build_relations_and_rank)->Arg(3)->Arg(5)->Arg(7);

void BM_ybe_residual(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ThetaBasis basis{n, Chars{0.5, 0.5}, kParams};
    for (auto _ : state)
        benchmark::DoNotOptimize(
            ybe_residual(n, 1, basis, kTau, Complex(0.21, 0.13), Complex(0.08, 0.27)));
}
BENCHMARK(BM_ybe_residual)->Arg(2)->Arg(3)->Arg(4);

} // namespace

BENCHMARK_MAIN();
