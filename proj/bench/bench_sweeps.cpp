// Serial reference against the OpenMP kernels for the three grid/sample sweeps.

#include <benchmark/benchmark.h>

#include "fhcopula/checker.hpp"
#include "fhcopula/sampler.hpp"
#include "fhcopula/validator.hpp"

namespace {

using fhc::Execution;

const fhc::CopulaSpec& gaussian_spec() {
  static const fhc::CopulaSpec spec = fhc::CopulaSpec::smoothed_upper(fhc::RadiusModel::gaussian_band(1.0));
  return spec;
}

Execution mode(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::serial : Execution::openmp;
}

void BM_CheckCopula(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fhc::check_copula(gaussian_spec(), n, mode(state)));
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}

void BM_ValidateModel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        fhc::validate_model(gaussian_spec().model(), fhc::Orientation::upper_M, n, mode(state)));
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}

void BM_SampleBatch(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fhc::sample_batch_unchecked(gaussian_spec(), n, 1, mode(state)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

}  // namespace

BENCHMARK(BM_CheckCopula)->ArgsProduct({{128, 256}, {0, 1}})->ArgNames({"grid_n", "openmp"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ValidateModel)->ArgsProduct({{64, 128}, {0, 1}})->ArgNames({"grid_n", "openmp"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleBatch)->ArgsProduct({{10000}, {0, 1}})->ArgNames({"n", "openmp"})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
