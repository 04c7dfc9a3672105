#include <benchmark/benchmark.h>

#include <tcoulomb/frobenius.hpp>
#include <tcoulomb/oracle.hpp>
#include <tcoulomb/spectrum.hpp>

namespace {

using namespace tcoulomb;

void BM_TruncationPolynomial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(truncation_polynomial(n, 0));
    }
}
BENCHMARK(BM_TruncationPolynomial)->Arg(5)->Arg(10)->Arg(20);

void BM_SturmCertification(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    RationalPolynomial p = truncation_polynomial(n, 0);
    Rational bound = p.root_bound();
    for (auto _ : state) {
        SturmChain chain(p);
        benchmark::DoNotOptimize(chain.count_roots(Rational(0), bound));
    }
}
BENCHMARK(BM_SturmCertification)->Arg(5)->Arg(10)->Arg(20);

void BM_SolveTruncation(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_truncation(n, 0));
    }
}
BENCHMARK(BM_SolveTruncation)->Arg(5)->Arg(10)->Arg(15);

void BM_OracleGroundState(benchmark::State& state) {
    RadialProblem p = make_problem(40.0, 0, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_state(p, 0));
    }
}
BENCHMARK(BM_OracleGroundState);

void BM_Interpolate(benchmark::State& state) {
    SpectralCurve c = build_curve(0, 0, 20);
    for (auto _ : state) {
        benchmark::DoNotOptimize(interpolate(c, 40.0));
    }
}
BENCHMARK(BM_Interpolate);

}  // namespace

BENCHMARK_MAIN();
