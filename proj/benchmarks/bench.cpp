#include <benchmark/benchmark.h>

#include <fejerlab/fejerlab.hpp>

using namespace fejerlab;

static void BM_AssembleFejer(benchmark::State& state) {
  const auto grid = make_grid(static_cast<int>(state.range(0)), 8);
  const auto K = Kernel::fejer(64);
  for (auto _ : state) benchmark::DoNotOptimize(assemble_operator(K, grid));
  state.counters["nodes"] = static_cast<double>(grid->size());
}
BENCHMARK(BM_AssembleFejer)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_StreamedNorm(benchmark::State& state) {
  const int M = static_cast<int>(state.range(0));
  const auto grid = make_grid(M, 8);
  const auto w = make_weight(M);
  const auto K = Kernel::fejer(static_cast<int>(state.range(1)));
  for (auto _ : state)
    benchmark::DoNotOptimize(operator_norm_streamed(K, grid, w, SpaceTag::WeightedLinf));
  state.counters["nodes"] = static_cast<double>(grid->size());
}
BENCHMARK(BM_StreamedNorm)->Args({25, 266})->Args({64, 266})->Args({64, 2048})->Unit(benchmark::kMillisecond);

static void BM_CustomKernelAssembly(benchmark::State& state) {
  const auto grid = make_grid(6, 8);
  const auto K = Kernel::custom(PiecewiseConstant::from_real({-3.14159265358979323846, -1.0, 1.0,
                                                              3.14159265358979323846},
                                                             std::vector<double>{0.5, 2.0, 0.5}));
  for (auto _ : state) benchmark::DoNotOptimize(assemble_operator(K, grid));
}
BENCHMARK(BM_CustomKernelAssembly)->Unit(benchmark::kMillisecond);

static void BM_MaximalFunction(benchmark::State& state) {
  const int M = static_cast<int>(state.range(0));
  const auto grid = make_grid(M, 8);
  const auto w = make_weight(M);
  for (auto _ : state) benchmark::DoNotOptimize(maximal_function(w.profile(), grid));
  state.counters["nodes"] = static_cast<double>(grid->size());
}
BENCHMARK(BM_MaximalFunction)->Arg(4)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_BestPolyIrls(benchmark::State& state) {
  const auto grid = make_grid(8, 8, 0.02);
  const auto w = make_weight(8);
  const auto f = SampledFunction::from_function(grid, [](double t) {
    return std::pow(1.0 - std::polar(1.0, t), -0.25);
  });
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(best_poly_l1w(f, &w, degree));
}
BENCHMARK(BM_BestPolyIrls)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_FejerBlowup(benchmark::State& state) {
  const auto grid = make_grid(25, 8);
  const auto w = make_weight(25);
  const std::vector<int> ms{1, 4, 9, 16, 25};
  for (auto _ : state) benchmark::DoNotOptimize(fejer_blowup(ms, w, grid));
}
BENCHMARK(BM_FejerBlowup)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
