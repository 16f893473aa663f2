// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "qmock/kernels/convolution.hpp"
#include "qmock/numerics/numerics.hpp"
#include "qmock/partitions/partitions.hpp"
#include "qmock/specfun/specfun.hpp"

namespace {

using namespace qmock;

// Numerator of the rank generating function: dense in q, Laurent in w.
std::vector<kernels::SeriesTerm> rank_terms(std::int64_t order) {
  const auto f = specfun::build_eulerian(specfun::EulerianKind::kRank, order);
  const auto terms = f.num().terms();
  return {terms.begin(), terms.end()};
}

template <auto Kernel>
void BM_Convolve(benchmark::State& state) {
  const std::int64_t order = 24 * state.range(0);
  const auto a = rank_terms(order);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, a, order));
}

template <auto Kernel>
void BM_StatTable(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(Kernel(partitions::StatKind::kCrankCombinatorial, static_cast<int>(state.range(0))));
  }
}

template <auto Kernel>
void BM_LawBatch(benchmark::State& state) {
  const auto pts = numerics::random_points(7, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(pts, 1e-9));
}

}  // namespace

BENCHMARK(BM_Convolve<kernels::convolve_serial>)->Name("convolve/serial")->Arg(20)->Arg(40);
BENCHMARK(BM_Convolve<kernels::convolve_omp>)->Name("convolve/omp")->Arg(20)->Arg(40);
BENCHMARK(BM_StatTable<partitions::stat_table_serial>)->Name("stat_table/serial")->Arg(35)->Arg(45);
BENCHMARK(BM_StatTable<partitions::stat_table>)->Name("stat_table/omp")->Arg(35)->Arg(45);
BENCHMARK(BM_LawBatch<numerics::law_batch_serial>)->Name("law_batch/serial")->Arg(20)->Arg(80);
BENCHMARK(BM_LawBatch<numerics::law_batch>)->Name("law_batch/omp")->Arg(20)->Arg(80);

BENCHMARK_MAIN();
