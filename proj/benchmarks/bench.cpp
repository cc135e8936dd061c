#include <benchmark/benchmark.h>

#include <map>

#include "veflab/besov.hpp"
#include "veflab/dyadic.hpp"
#include "veflab/fft.hpp"
#include "veflab/green.hpp"
#include "veflab/initial_data.hpp"
#include "veflab/rhs.hpp"
#include "veflab/stepper.hpp"

namespace {

using namespace vefl;

GridPtr bench_grid(int points) {
  static std::map<int, GridPtr> cache;
  auto& g = cache[points];
  if (!g) g = make_grid(2, points, 2.0 * kPi);
  return g;
}

// short pseudo-time so setup stays cheap; content is irrelevant here
FlowState bench_state(int points) {
  return flowmap_initial_data(bench_grid(points), 7, 1e-2, 0.1, 1e-2);
}

void BM_ForwardTransform(benchmark::State& state) {
  auto g = bench_grid(static_cast<int>(state.range(0)));
  SpectralField v = seeded_solenoidal_velocity(g, 7, 1.0, 1.0, 8.0);
  PhysicalField f = inverse_transform(v);
  for (auto _ : state) benchmark::DoNotOptimize(forward_transform(f));
}
BENCHMARK(BM_ForwardTransform)->Arg(64)->Arg(128);

void BM_InverseTransform(benchmark::State& state) {
  auto g = bench_grid(static_cast<int>(state.range(0)));
  SpectralField v = seeded_solenoidal_velocity(g, 7, 1.0, 1.0, 8.0);
  for (auto _ : state) benchmark::DoNotOptimize(inverse_transform(v));
}
BENCHMARK(BM_InverseTransform)->Arg(64)->Arg(128);

void BM_DyadicBlock(benchmark::State& state) {
  auto g = bench_grid(static_cast<int>(state.range(0)));
  DyadicPartition part = build_partition(g);
  SpectralField v = seeded_solenoidal_velocity(g, 7, 1.0, 1.0, 8.0);
  int q = (part.q_min() + part.q_max()) / 2;
  for (auto _ : state) benchmark::DoNotOptimize(dyadic_block(part, v, q));
}
BENCHMARK(BM_DyadicBlock)->Arg(64)->Arg(128);

void BM_BesovNorm(benchmark::State& state) {
  auto g = bench_grid(static_cast<int>(state.range(0)));
  DyadicPartition part = build_partition(g);
  SpectralField v = seeded_solenoidal_velocity(g, 7, 1.0, 1.0, 8.0);
  BesovSpec spec{0.0, 2.0, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(besov_norm(v, spec, part));
}
BENCHMARK(BM_BesovNorm)->Arg(64)->Arg(128);

void BM_GreenEntries(benchmark::State& state) {
  // one entry per iteration, swept across both eigenvalue branches
  double xi = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(green_entries(1.0, xi, 0.5));
    xi *= 1.03;
    if (xi > 64.0) xi = 0.1;
  }
}
BENCHMARK(BM_GreenEntries);

void BM_GreenTable(benchmark::State& state) {
  auto g = bench_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(GreenTable(g, 1.0, 1e-3));
}
BENCHMARK(BM_GreenTable)->Arg(64)->Arg(128);

void BM_NonlinearRhs(benchmark::State& state) {
  int points = static_cast<int>(state.range(0));
  FlowState s = bench_state(points);
  for (auto _ : state) benchmark::DoNotOptimize(nonlinear_rhs(s, 1.0, 2.0 / 3.0));
}
BENCHMARK(BM_NonlinearRhs)->Arg(64)->Arg(128);

void BM_EtdStep(benchmark::State& state) {
  int points = static_cast<int>(state.range(0));
  FlowState s = bench_state(points);
  GreenTable table(bench_grid(points), 1.0, 1e-3);
  for (auto _ : state) benchmark::DoNotOptimize(etd_step(s, table, 2.0 / 3.0));
}
BENCHMARK(BM_EtdStep)->Arg(64)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
