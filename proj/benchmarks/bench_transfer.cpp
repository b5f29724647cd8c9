#include "pascal/automata.hpp"
#include "pascal/spec_file.hpp"

#include <benchmark/benchmark.h>

namespace {

pascal::SpecDocument doc_of(const char* preset) { return pascal::load_preset(preset, PASCAL_PRESET_DIR); }

pascal::AcceptorSchedule schedule_of(const pascal::SpecDocument& doc) {
  pascal::AcceptorSchedule s;
  s.train_radius = doc.hints.train_radius.value_or(4);
  return s;
}

void BM_BuildTransfer(benchmark::State& state, const char* preset) {
  const auto doc = doc_of(preset);
  const auto schedule = schedule_of(doc);
  for (auto _ : state) benchmark::DoNotOptimize(pascal::build_transfer(doc.gens, schedule).matrices.size);
}
BENCHMARK_CAPTURE(BM_BuildTransfer, f2_basis, "f2-basis")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BuildTransfer, f2_extended, "f2-extended")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BuildTransfer, z_t_s10, "z-t-s10")->Unit(benchmark::kMillisecond);

// u M_w v for (a b)^k in F2 with extended generators; counts are 2^k.
void BM_EvalF2Extended(benchmark::State& state) {
  const auto doc = doc_of("f2-extended");
  const auto bundle = pascal::build_transfer(doc.gens, schedule_of(doc));
  pascal::Word w;
  for (int k = 0; k < state.range(0); ++k) {
    w.push_back(*doc.gens.find("a"));
    w.push_back(*doc.gens.find("b"));
  }
  for (auto _ : state) benchmark::DoNotOptimize(pascal::pascal_via_matrices(bundle, w));
}
BENCHMARK(BM_EvalF2Extended)->Arg(10)->Arg(100)->Arg(1000);

void BM_ValidateZts(benchmark::State& state) {
  const auto doc = doc_of("z-t-s10");
  const auto bundle = pascal::build_transfer(doc.gens, schedule_of(doc));
  const auto ball = pascal::Ball::build(doc.gens, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pascal::validate_matrices(bundle, ball).ok);
}
BENCHMARK(BM_ValidateZts)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
