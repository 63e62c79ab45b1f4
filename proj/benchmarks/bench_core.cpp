#include <benchmark/benchmark.h>

#include <random>

#include "equilab/class_action.hpp"
#include "equilab/eigenvalues.hpp"
#include "equilab/local_factors.hpp"
#include "equilab/mixing.hpp"
#include "equilab/quadforms.hpp"
#include "equilab/sphere.hpp"
#include "equilab/tau.hpp"

using namespace equilab;

static void BM_ReduceForm(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<i64> dist(-1000, 1000);
  for (auto _ : state) {
    const i64 a = 1 + (dist(rng) & 1023), b = dist(rng);
    const i64 c = (b * b + 4 * a * 9973 + 4 * a - 1) / (4 * a);
    const qf::QuadForm f{a, b, c};
    if (f.disc() < 0 && qf::is_primitive(f)) benchmark::DoNotOptimize(qf::reduce(f));
  }
}
BENCHMARK(BM_ReduceForm);

static void BM_ClassGroupBuild(benchmark::State& state) {
  const i64 disc = -state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(qf::ClassGroup::build(disc));
}
BENCHMARK(BM_ClassGroupBuild)->Arg(4 * 1001)->Arg(4 * 4001)->Arg(99971);

static void BM_ReducedForms(benchmark::State& state) {
  const i64 disc = -state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(qf::reduced_forms(disc));
}
BENCHMARK(BM_ReducedForms)->Arg(99971);

static void BM_DensityPrimePower(benchmark::State& state) {
  const qf::QuadForm f{2, 1, 3};
  for (auto _ : state)
    for (i64 p : {3, 5, 7, 11, 13, 97}) benchmark::DoNotOptimize(qf::density_prime_power(f, p, 3));
}
BENCHMARK(BM_DensityPrimePower);

static void BM_EnumeratePoints(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sphere::enumerate_points(state.range(0)));
}
BENCHMARK(BM_EnumeratePoints)->Arg(4001)->Arg(49999);

static void BM_CoverPackets(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(action::cover_packets(state.range(0)));
}
BENCHMARK(BM_CoverPackets)->Arg(1001)->Arg(4001)->Unit(benchmark::kMillisecond);

static void BM_AnalyzePacket(benchmark::State& state) {
  const auto pkt = action::cover_packets(state.range(0)).front();
  for (auto _ : state) benchmark::DoNotOptimize(mix::analyze_packet(pkt, 8));
}
BENCHMARK(BM_AnalyzePacket)->Arg(1001)->Arg(4001)->Unit(benchmark::kMillisecond);

static void BM_TauTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(eig::TauTable::build(state.range(0)));
}
BENCHMARK(BM_TauTable)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_InducedValue(benchmark::State& state) {
  const auto S = local::PadicSchwartz::make(3, 1, 1, 3);
  std::mt19937_64 rng(5);
  for (auto _ : state) {
    const local::Mat2 g{1 + 3 * static_cast<i64>(rng() % 81), static_cast<i64>(rng() % 243), 3 * static_cast<i64>(rng() % 81), 1};
    benchmark::DoNotOptimize(local::induced_value(S, g, 5));
  }
}
BENCHMARK(BM_InducedValue);

static void BM_ArchRankinSelberg(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(local::arch_rs_integral({0.0, 1.3}, {0.0, 0.4}, {1.5, 3.0}));
}
BENCHMARK(BM_ArchRankinSelberg)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
