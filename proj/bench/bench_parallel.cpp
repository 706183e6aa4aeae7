// Serial and OpenMP variants of the parallel kernels on the same inputs.
// Run with OMP_NUM_THREADS set to compare thread counts.

#include <benchmark/benchmark.h>

#include "regshift/markov.hpp"
#include "regshift/neural.hpp"
#include "regshift/shift.hpp"

using namespace regshift;

namespace {

const ShiftFamily& family() {
  static const ShiftFamily f = parity_shift_family();
  return f;
}

const std::vector<LabeledExample>& dataset() {
  static const auto data = sample_dataset(family(), Split::train_id, 0.2, 200, 200, 5);
  return data;
}

RecurrentClassifier model() {
  ModelConfig c;
  c.n_states = 2;
  c.aux = AuxMode::ssas;
  return init_model(c, 3);
}

template <bool Parallel>
void BM_SampleBatch(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto b = Parallel ? sample_batch(family().base, family().language, n, 1, 1)
                      : sample_batch_serial(family().base, family().language, n, 1, 1);
    benchmark::DoNotOptimize(b.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_TvEstimate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const EdgeMarkovChain q = family().perturbed(0.85);
  for (auto _ : state) {
    const TvEstimate e = Parallel ? estimate_tv_strings_mc(family().base, q, n, 2)
                                  : estimate_tv_strings_mc_serial(family().base, q, n, 2);
    benchmark::DoNotOptimize(e.estimate);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_SgdEpoch(benchmark::State& state) {
  const SgdOptions options{0.01, static_cast<int>(state.range(0)), 5.0};
  for (auto _ : state) {
    state.PauseTiming();
    RecurrentClassifier m = model();
    state.ResumeTiming();
    const EpochStats s = Parallel ? sgd_epoch(m, dataset(), options, 4) : sgd_epoch_serial(m, dataset(), options, 4);
    benchmark::DoNotOptimize(s.mean_loss);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(dataset().size()));
}

template <bool Parallel>
void BM_Evaluate(benchmark::State& state) {
  const RecurrentClassifier m = model();
  for (auto _ : state) {
    const Evaluation e = Parallel ? evaluate(m, dataset()) : evaluate_serial(m, dataset());
    benchmark::DoNotOptimize(e.accuracy);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(dataset().size()));
}

}  // namespace

BENCHMARK(BM_SampleBatch<false>)->Name("sample_batch/serial")->Arg(10000);
BENCHMARK(BM_SampleBatch<true>)->Name("sample_batch/parallel")->Arg(10000);
BENCHMARK(BM_TvEstimate<false>)->Name("tv_estimate/serial")->Arg(10000);
BENCHMARK(BM_TvEstimate<true>)->Name("tv_estimate/parallel")->Arg(10000);
BENCHMARK(BM_SgdEpoch<false>)->Name("sgd_epoch/serial")->Arg(1)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SgdEpoch<true>)->Name("sgd_epoch/parallel")->Arg(1)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Evaluate<false>)->Name("evaluate/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Evaluate<true>)->Name("evaluate/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
