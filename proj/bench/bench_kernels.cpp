// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS set to compare team sizes.

#include <benchmark/benchmark.h>

#include <random>

#include "fbcs/fieldops.hpp"
#include "fbcs/filters.hpp"
#include "fbcs/mapping.hpp"
#include "fbcs/mflgen.hpp"
#include "fbcs/reference.hpp"

namespace {

fbcs::ImageGrid make_image(std::size_t n) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  fbcs::ImageGrid img(n, n);
  for (auto& px : img.cells()) px = {u(rng), u(rng), u(rng)};
  return img;
}

fbcs::VectorField2D make_field(std::size_t n) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  fbcs::VectorField2D f(n, n);
  for (auto& v : f.cells()) v = {u(rng), u(rng)};
  return f;
}

const std::vector<fbcs::PitSpec> kPits{{50, 100, 1.0, 6}, {100, 80, 1.5, 8}, {150, 115, 1.2, 5}};

template <auto Fn>
void BM_forward(benchmark::State& state) {
  const auto img = make_image(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(img));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(img.size()));
}

template <auto Fn>
void BM_backward(benchmark::State& state) {
  const auto f = make_field(static_cast<std::size_t>(state.range(0)));
  const auto policy = fbcs::ScalePolicy::automatic();
  for (auto _ : state) benchmark::DoNotOptimize(Fn(f, policy));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(f.size()));
}

template <auto Fn>
void BM_divergence(benchmark::State& state) {
  const auto f = make_field(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(f));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(f.size()));
}

template <auto Fn>
void BM_filter(benchmark::State& state) {
  const auto img = make_image(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(img, 0.25));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(img.size()));
}

template <auto Fn>
void BM_mfl(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(kPits, n, n, fbcs::PlanarVector{}));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n * n));
}

}  // namespace

BENCHMARK(BM_forward<fbcs::reference::forward_map>)
    ->Name("forward_map/serial")
    ->Arg(256)->Arg(1024);
BENCHMARK(BM_forward<fbcs::forward_map>)
    ->Name("forward_map/omp")
    ->Arg(256)->Arg(1024);
BENCHMARK(BM_backward<fbcs::reference::backward_map>)
    ->Name("backward_map/serial")
    ->Arg(256)->Arg(1024);
BENCHMARK(BM_backward<fbcs::backward_map>)
    ->Name("backward_map/omp")
    ->Arg(256)->Arg(1024);
BENCHMARK(BM_divergence<fbcs::reference::divergence>)
    ->Name("divergence/serial")
    ->Arg(256)->Arg(1024);
BENCHMARK(BM_divergence<fbcs::divergence>)
    ->Name("divergence/omp")
    ->Arg(256)->Arg(1024);
BENCHMARK(BM_filter<fbcs::reference::achromatic_filter>)
    ->Name("achromatic_filter/serial")
    ->Arg(256)->Arg(1024);
BENCHMARK(BM_filter<fbcs::achromatic_filter>)
    ->Name("achromatic_filter/omp")
    ->Arg(256)->Arg(1024);
BENCHMARK(BM_mfl<fbcs::reference::generate_mfl>)
    ->Name("generate_mfl/serial")
    ->Arg(200)->Arg(800);
BENCHMARK(BM_mfl<fbcs::generate_mfl>)
    ->Name("generate_mfl/omp")
    ->Arg(200)->Arg(800);

BENCHMARK_MAIN();
