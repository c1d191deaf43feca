#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "takagi/differentials.hpp"
#include "takagi/parallel.hpp"
#include "takagi/scan.hpp"

using namespace takagi;

namespace {

std::vector<Rational> random_points(std::size_t n) {
  std::mt19937_64 rng(7);
  std::vector<Rational> xs;
  xs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t den = 1 + rng() % 100000;
    xs.emplace_back(rng() % den, den);
  }
  return xs;
}

Exec mode(const benchmark::State& state) { return state.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

void BM_TakagiValues(benchmark::State& state) {
  const auto xs = random_points(static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(takagi_values(xs, mode(state)));
  state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_TakagiValues)->ArgsProduct({{0, 1}, {1000, 10000}})->Unit(benchmark::kMillisecond);

void BM_Scan(benchmark::State& state) {
  const Rational step(1, state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(scan(Rational(0), Rational(1), step, mode(state)));
}
BENCHMARK(BM_Scan)->ArgsProduct({{0, 1}, {1023, 4095}})->Unit(benchmark::kMillisecond);

void BM_Dini(benchmark::State& state) {
  DiniConfig config;
  config.depth = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(dini_estimate(Rational(4, 15), config, mode(state)));
}
BENCHMARK(BM_Dini)->ArgsProduct({{0, 1}, {24, 48}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
