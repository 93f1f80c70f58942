#include <benchmark/benchmark.h>

#include "horadam/binet.hpp"
#include "horadam/estimators.hpp"
#include "horadam/experiment.hpp"
#include "horadam/sequence.hpp"
#include "horadam/tail.hpp"

using namespace horadam;

namespace {

const SequenceParams kFib{0, 1, 1, 1};
const SequenceParams kWide{-2, 1, 4, 3};

void BM_TermBlock(benchmark::State& state) {
  const auto count = static_cast<std::int64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(term_block(kWide, 0, count));
  state.SetItemsProcessed(state.iterations() * count);
}
BENCHMARK(BM_TermBlock)->Arg(100)->Arg(1000)->Arg(10000);

void BM_BuildContext(benchmark::State& state) {
  const auto bits = static_cast<Precision>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_context(kWide, bits));
}
BENCHMARK(BM_BuildContext)->Arg(256)->Arg(1024)->Arg(4096);

void BM_TailSum(benchmark::State& state) {
  const auto bits = static_cast<Precision>(state.range(0));
  const BinetContext ctx = build_context(kFib, bits);
  const SubseqQuery q{1, 0, 2, 10, false};
  for (auto _ : state) benchmark::DoNotOptimize(tail_sum(ctx, q, std::nullopt));
}
BENCHMARK(BM_TailSum)->Arg(256)->Arg(1024);

void BM_Estimate(benchmark::State& state) {
  const auto kind = state.range(0) == 0 ? EstimatorKind::theorem : EstimatorKind::corollary;
  const int d = static_cast<int>(state.range(1));
  const BinetContext ctx = build_context(kWide, 256);
  const SubseqQuery q{2, 1, d, 10, true};
  for (auto _ : state) benchmark::DoNotOptimize(estimate(kind, ctx, q, 10));
}
BENCHMARK(BM_Estimate)->ArgsProduct({{0, 1}, {1, 2, 3, 4}});

void BM_ConvergenceExperiment(benchmark::State& state) {
  const SubseqQuery q{1, 0, static_cast<int>(state.range(0)), 1, false};
  for (auto _ : state) benchmark::DoNotOptimize(convergence_experiment(kFib, q));
}
BENCHMARK(BM_ConvergenceExperiment)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
