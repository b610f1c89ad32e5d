#include <benchmark/benchmark.h>

#include "superschur/brauer.hpp"
#include "superschur/centralizer.hpp"
#include "superschur/liealg.hpp"
#include "superschur/superpoly.hpp"

using namespace superschur;

static void BM_RhoRs(benchmark::State& state) {
  const SuperDim dim{static_cast<std::size_t>(state.range(0)), 1};
  for (auto _ : state) benchmark::DoNotOptimize(liealg::rho_rs(dim, 1, 1));
}
BENCHMARK(BM_RhoRs)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_ImageAlgebra(benchmark::State& state) {
  const auto reps = liealg::rho_rs({static_cast<std::size_t>(state.range(0)), 1}, 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(liealg::image_algebra(reps).dimension());
}
BENCHMARK(BM_ImageAlgebra)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_BrauerCommutant(benchmark::State& state) {
  const SuperDim dim{static_cast<std::size_t>(state.range(0)), 1};
  const auto reps = liealg::rho_rs(dim, 1, 1);
  const auto image = brauer::image_algebra_brauer(1, 1, dim);
  for (auto _ : state) benchmark::DoNotOptimize(centralizer::commutant(image, reps.cartan()).dimension());
}
BENCHMARK(BM_BrauerCommutant)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_Radical(benchmark::State& state) {
  const auto image = liealg::image_algebra(liealg::rho_rs({static_cast<std::size_t>(state.range(0)), 1}, 1, 1));
  for (auto _ : state) benchmark::DoNotOptimize(centralizer::radical(image).basis.size());
}
BENCHMARK(BM_Radical)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_GenericInverse(benchmark::State& state) {
  const SuperDim dim{static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1))};
  for (auto _ : state) {
    const auto ring = superpoly::CoordinateRing::create(dim);
    benchmark::DoNotOptimize(superpoly::generic_inverse(ring));
  }
}
BENCHMARK(BM_GenericInverse)->Args({1, 1})->Args({2, 1})->Args({2, 2})->Unit(benchmark::kMillisecond);

static void BM_BrauerAction(benchmark::State& state) {
  for (auto _ : state) {
    const brauer::BrauerAction action({4, 1}, static_cast<unsigned>(state.range(0)), 1);
    benchmark::DoNotOptimize(action.matrices().size());
  }
}
BENCHMARK(BM_BrauerAction)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
