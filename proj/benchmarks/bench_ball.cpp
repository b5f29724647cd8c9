#include "pascal/cayley.hpp"
#include "pascal/spec_file.hpp"

#include <benchmark/benchmark.h>

namespace {

pascal::GenSet gens_of(const char* preset) { return pascal::load_preset(preset, PASCAL_PRESET_DIR).gens; }

// Ball construction (BFS plus the count DP) across group shapes.
void BM_BallZ2(benchmark::State& state) {
  const auto gens = gens_of("z2");
  for (auto _ : state) benchmark::DoNotOptimize(pascal::Ball::build(gens, static_cast<std::size_t>(state.range(0))).size());
}
BENCHMARK(BM_BallZ2)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_BallF2Extended(benchmark::State& state) {
  const auto gens = gens_of("f2-extended");
  std::size_t size = 0;
  for (auto _ : state) size = pascal::Ball::build(gens, static_cast<std::size_t>(state.range(0))).size();
  state.counters["elements"] = static_cast<double>(size);
}
BENCHMARK(BM_BallF2Extended)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_BallZ3Z3(benchmark::State& state) {
  const auto gens = gens_of("z3z3");
  for (auto _ : state) benchmark::DoNotOptimize(pascal::Ball::build(gens, static_cast<std::size_t>(state.range(0))).size());
}
BENCHMARK(BM_BallZ3Z3)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_Lookup(benchmark::State& state) {
  const pascal::Ball ball = pascal::Ball::build(gens_of("z2"), 100);
  pascal::Ball::Index i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ball.find_key(ball.key(i)));
    i = (i + 7919) % static_cast<pascal::Ball::Index>(ball.size());
  }
}
BENCHMARK(BM_Lookup);

}  // namespace

BENCHMARK_MAIN();
