#include <benchmark/benchmark.h>

#include "zetalab/beukers.hpp"
#include "zetalab/closedforms.hpp"
#include "zetalab/quad.hpp"
#include "zetalab/specfun.hpp"
#include "zetalab/zeta_form.hpp"

using namespace zetalab;

namespace {

const PrecisionContext ctx30(30);

void BM_Polylog(benchmark::State& state) {
  const Real z("0.9");
  const int s = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(specfun::polylog(s, z, ctx30));
}
BENCHMARK(BM_Polylog)->Arg(2)->Arg(5)->Arg(7);

void BM_Harmonic(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(specfun::harmonic(static_cast<std::uint64_t>(state.range(0)), 3));
}
BENCHMARK(BM_Harmonic)->Arg(100)->Arg(1000);

void BM_Theorem21(benchmark::State& state) {
  const auto spec = quad::IntegralSpec::theorem21(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(quad::integrate(spec, ctx30));
}
BENCHMARK(BM_Theorem21)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_ClosedFormI(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(form_eval(closedforms::closed_form_i(k), ctx30));
}
BENCHMARK(BM_ClosedFormI)->Arg(3)->Arg(50);

void BM_OracleI(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(closedforms::oracle_i(1, ctx30));
}
BENCHMARK(BM_OracleI)->Unit(benchmark::kMillisecond);

void BM_BeukersLinearForm(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const auto f = beukers::beukers_linear_form(k);
    benchmark::DoNotOptimize(f.magnitude(ctx30));
  }
}
BENCHMARK(BM_BeukersLinearForm)->Arg(12)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_MonteCarloKontsevich(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        quad::monte_carlo_kontsevich(3, static_cast<std::uint64_t>(state.range(0)), 0, ctx30));
}
BENCHMARK(BM_MonteCarloKontsevich)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
