// Descriptor extraction: OpenMP path at 1 and N threads against the serial
// brute-force reference.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <random>

#include "lrp/descriptor.hpp"
#include "lrp/oracle.hpp"

namespace {

lrp::GrayImage make_image(std::size_t side) {
  std::mt19937_64 rng(side);
  lrp::GrayImage img(side, side);
  for (auto &p : img.pixels()) p = static_cast<std::uint8_t>(rng() & 0xff);
  return img;
}

void run_fast(benchmark::State &state, lrp::Method m, int threads) {
  const auto img = make_image(static_cast<std::size_t>(state.range(0)));
  const int saved = omp_get_max_threads();
  omp_set_num_threads(threads > 0 ? threads : omp_get_num_procs());
  for (auto _ : state) benchmark::DoNotOptimize(lrp::descriptor(img, m, true));
  omp_set_num_threads(saved);
  state.SetItemsProcessed(state.iterations() * (state.range(0) - 2) * (state.range(0) - 2));
}

void run_reference(benchmark::State &state, lrp::Method m) {
  const auto img = make_image(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lrp::oracle::reference_descriptor(img, m, true));
  state.SetItemsProcessed(state.iterations() * (state.range(0) - 2) * (state.range(0) - 2));
}

void BM_MedianSerial(benchmark::State &s) { run_fast(s, lrp::Method::Median, 1); }
void BM_MedianParallel(benchmark::State &s) { run_fast(s, lrp::Method::Median, 0); }
void BM_MedianReference(benchmark::State &s) { run_reference(s, lrp::Method::Median); }
void BM_MinMaxSerial(benchmark::State &s) { run_fast(s, lrp::Method::MinMax, 1); }
void BM_MinMaxParallel(benchmark::State &s) { run_fast(s, lrp::Method::MinMax, 0); }
void BM_MinMaxReference(benchmark::State &s) { run_reference(s, lrp::Method::MinMax); }

} // namespace

#define SIZES ->Arg(64)->Arg(256)->Arg(1000)->Unit(benchmark::kMillisecond)
BENCHMARK(BM_MedianSerial) SIZES;
BENCHMARK(BM_MedianParallel) SIZES;
BENCHMARK(BM_MedianReference) SIZES;
BENCHMARK(BM_MinMaxSerial) SIZES;
BENCHMARK(BM_MinMaxParallel) SIZES;
BENCHMARK(BM_MinMaxReference) SIZES;

BENCHMARK_MAIN();
