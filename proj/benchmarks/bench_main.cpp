#include <benchmark/benchmark.h>

#include "swancalc/catalog/catalog.hpp"
#include "swancalc/curve/cover.hpp"
#include "swancalc/curve/pointcount.hpp"
#include "swancalc/exact/field.hpp"

using namespace swancalc;

namespace {

curve::Cover as_cover(std::uint32_t p, int n) {
  std::vector<exact::Elem> num(static_cast<std::size_t>(n) + 1, 0);
  num.back() = 1;
  return curve::Cover(exact::make_field(p, 1), {{local::LayerKind::ArtinSchreier, static_cast<int>(p), {num, {1}}, {}}},
                      {curve::BoundaryPoint{true, 0}});
}

void BM_FieldMulInv(benchmark::State& state) {
  auto K = exact::make_field(static_cast<std::uint32_t>(state.range(0)), static_cast<int>(state.range(1)));
  exact::Elem a = K->generator(), acc = 1;
  for (auto _ : state) {
    acc = K->mul(acc, a);
    benchmark::DoNotOptimize(K->inv(acc));
  }
}
BENCHMARK(BM_FieldMulInv)->Args({2, 8})->Args({3, 4})->Args({5, 2})->Args({7, 1});

void BM_LocalTower(benchmark::State& state) {
  const auto K = exact::make_field(2, 1);
  using L = curve::CoverLayer;
  for (auto _ : state) {
    curve::Cover c(K, {L{local::LayerKind::ArtinSchreier, 2, {{0, 0, 0, 1}, {1}}, {}}, L{local::LayerKind::ArtinSchreier, 2, {{0, 0, 0, 0, 0, 1}, {1}}, {}}},
                   {curve::BoundaryPoint{true, 0}});
    benchmark::DoNotOptimize(c.places(0).size());
  }
}
BENCHMARK(BM_LocalTower)->Unit(benchmark::kMillisecond);

void BM_FrobeniusHistogram(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(1));
  auto c = as_cover(static_cast<std::uint32_t>(state.range(0)), n);
  for (auto _ : state) benchmark::DoNotOptimize(curve::frobenius_histogram(c, std::max(n, 2)));
}
BENCHMARK(BM_FrobeniusHistogram)->Args({2, 7})->Args({3, 5})->Args({5, 4})->Unit(benchmark::kMillisecond);

void BM_CatalogRun(benchmark::State& state) {
  const auto cat = catalog::builtin();
  catalog::RunOptions opt;
  opt.checks = {"gos", "swan", "kato"};
  for (auto _ : state) benchmark::DoNotOptimize(catalog::run(cat, opt));
}
BENCHMARK(BM_CatalogRun)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
