#include <benchmark/benchmark.h>

#include "cmcflat/admissibility.hpp"
#include "cmcflat/geometry.hpp"
#include "cmcflat/immersion.hpp"
#include "cmcflat/lattice_expr.hpp"
#include "cmcflat/parameters.hpp"
#include "cmcflat/periodicity.hpp"

namespace {

using namespace cmcflat;

void BM_Eval(benchmark::State& state) {
  const Immersion im = from_structure(0.5, 0.3);
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(im.eval({x, 0.7}));
    x += 1e-3;
  }
}
BENCHMARK(BM_Eval);

void BM_Bitension(benchmark::State& state) {
  const Immersion im = from_structure(0.5, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(bitension(im, {0.1, 0.2}));
}
BENCHMARK(BM_Bitension);

void BM_FdBitension(benchmark::State& state) {
  const Immersion im = from_structure(0.5, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(fd_bitension_oracle(im, {0.1, 0.2}, 2.5e-2));
}
BENCHMARK(BM_FdBitension);

void BM_VerifyImmersion(benchmark::State& state) {
  const Immersion im = from_structure(0.5, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(verify_immersion(im, VerifyOptions{100, 0, 10.0}));
}
BENCHMARK(BM_VerifyImmersion)->Unit(benchmark::kMillisecond);

void BM_PeriodLattice(benchmark::State& state) {
  const Immersion im = from_structure(0.5, rho_max(0.5));
  for (auto _ : state) benchmark::DoNotOptimize(period_lattice(im, static_cast<double>(state.range(0))));
}
BENCHMARK(BM_PeriodLattice)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_TorusExists(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(torus_exists(Rational(1) / Rational(7), state.range(0)));
}
BENCHMARK(BM_TorusExists)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_Admissible(benchmark::State& state) {
  const Lattice2 lat = parse_lattice_json(R"({"gens": [["2*sqrt(5)*pi", "0"], ["0", "2*sqrt(5)*pi"]]})");
  for (auto _ : state) benchmark::DoNotOptimize(admissible(lat, Rational(3) / Rational(5)));
}
BENCHMARK(BM_Admissible)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
