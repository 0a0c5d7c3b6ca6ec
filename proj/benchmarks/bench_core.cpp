#include <traintrack/appell.hpp>
#include <traintrack/factorization.hpp>
#include <traintrack/modular.hpp>
#include <traintrack/pfaffian.hpp>

#include <benchmark/benchmark.h>

using namespace traintrack;

namespace
{

const F2Params conformal = F2Params::conformal();

void BM_EllipticK(benchmark::State &state)
{
    const cplx m(0.3, 0.2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ellint_K(m));
    }
}
BENCHMARK(BM_EllipticK);

void BM_F2Series(benchmark::State &state)
{
    const double r = static_cast<double>(state.range(0)) / 100.0;
    const ModuliPoint pt{cplx(0.5 * r, 0.1 * r), cplx(0.5 * r, -0.1 * r)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(f2_series(conformal, pt));
    }
}
BENCHMARK(BM_F2Series)->Arg(20)->Arg(50)->Arg(80)->Arg(95);

void BM_F2EulerIntegral(benchmark::State &state)
{
    const ModuliPoint pt{cplx(0.3, 0.1), cplx(0.2, -0.2)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(f2_euler_integral(conformal, pt));
    }
}
BENCHMARK(BM_F2EulerIntegral)->Unit(benchmark::kMillisecond);

void BM_PeriodBasis(benchmark::State &state)
{
    const LambdaPair lp{0.3, 0.8};
    for (auto _ : state) {
        benchmark::DoNotOptimize(period_basis(lp));
    }
}
BENCHMARK(BM_PeriodBasis);

void BM_Theta3(benchmark::State &state)
{
    const Tau t(cplx(0.1, static_cast<double>(state.range(0)) / 10.0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(theta3(t));
    }
}
BENCHMARK(BM_Theta3)->Arg(4)->Arg(10)->Arg(30);

void BM_LegendreMonodromy(benchmark::State &state)
{
    const PfaffianSystem1D s = system_2f1({0.5, 0.5, 1.0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(monodromy_2f1(s, 0.0).matrix);
    }
}
BENCHMARK(BM_LegendreMonodromy)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
