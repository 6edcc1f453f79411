#include <benchmark/benchmark.h>

#include "golodlab/analysis.hpp"
#include "golodlab/io.hpp"
#include "golodlab/parallel.hpp"

namespace {

using namespace golod;

const SimplicialComplex& torus() {
  static const SimplicialComplex k = load_catalog("torus-7");
  return k;
}

const SimplicialComplex& cycle() {
  static const SimplicialComplex k = load_catalog("cycle-9");
  return k;
}

int jobs_arg(const benchmark::State& state) { return static_cast<int>(state.range(0)); }

void BM_SubsetCohomologySerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(subset_cohomology_serial(torus(), Field::rationals()));
}

void BM_SubsetCohomologyParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(subset_cohomology(torus(), Field::rationals(), jobs_arg(state)));
}

void BM_WeakGolodSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(weak_golod_check_serial(cycle(), Field::prime(2)));
}

void BM_WeakGolodParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(weak_golod_check(cycle(), Field::prime(2), jobs_arg(state)));
}

void BM_TightSerial(benchmark::State& state) {
  TightnessOptions opt;
  opt.full_table = true;
  for (auto _ : state) benchmark::DoNotOptimize(is_tight_serial(torus(), Field::prime(2), opt));
}

void BM_TightParallel(benchmark::State& state) {
  TightnessOptions opt;
  opt.full_table = true;
  opt.jobs = jobs_arg(state);
  for (auto _ : state) benchmark::DoNotOptimize(is_tight(torus(), Field::prime(2), opt));
}

void BM_Certificate(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(construct_golod_certificate(torus(), Field::prime(2), 3, jobs_arg(state)));
}

void job_counts(benchmark::internal::Benchmark* b) {
  const int top = std::max(2, resolve_jobs(std::nullopt));
  for (int j = 1; j <= top; j *= 2) b->Arg(j);
}

}  // namespace

BENCHMARK(BM_SubsetCohomologySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SubsetCohomologyParallel)->Apply(job_counts)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeakGolodSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeakGolodParallel)->Apply(job_counts)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TightSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TightParallel)->Apply(job_counts)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Certificate)->Apply(job_counts)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
