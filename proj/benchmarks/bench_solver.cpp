#include <benchmark/benchmark.h>

#include <random>

#include "twistcoh/twistcoh.hpp"

using namespace twistcoh;

namespace {

Scalar golden() { return Scalar::quadratic(mpq_class(3, 2), mpq_class(1, 2), 5); }

std::vector<Scalar> surface_values(int genus) {
  std::vector<Scalar> y;
  for (int j = 0; j < 2 * genus; ++j) y.push_back(Scalar::rational(j + 2, j + 1));
  return y;
}

void BM_SurfaceH1(benchmark::State& state) {
  const int genus = static_cast<int>(state.range(0));
  const Presentation p = surface_presentation(genus);
  const Character rho(surface_values(genus));
  for (auto _ : state) benchmark::DoNotOptimize(twisted_h1_dimension(p, rho).h1_dim);
}
BENCHMARK(BM_SurfaceH1)->DenseRange(2, 10, 2);

void BM_SurfaceH1Approx(benchmark::State& state) {
  const int genus = static_cast<int>(state.range(0));
  const Presentation p = surface_presentation(genus);
  std::vector<Scalar> y;
  for (const Scalar& v : surface_values(genus)) y.push_back(promote(v, NumericMode::approx()));
  const Character rho(y);
  for (auto _ : state) benchmark::DoNotOptimize(twisted_h1_dimension(p, rho).h1_dim);
}
BENCHMARK(BM_SurfaceH1Approx)->DenseRange(2, 10, 2);

void BM_MappingTorusQuadratic(benchmark::State& state) {
  const IntMatrix a{{2, 1}, {1, 1}};
  const Presentation p = mapping_torus_presentation(a);
  const Character rho = mapping_torus_character(a, golden());
  for (auto _ : state) benchmark::DoNotOptimize(twisted_h1_dimension(p, rho).h1_dim);
}
BENCHMARK(BM_MappingTorusQuadratic);

void BM_Certificate(benchmark::State& state) {
  const IntMatrix a{{2, 1}, {1, 1}};
  const Presentation p = mapping_torus_presentation(a);
  const Cocycle mu = mapping_torus_cocycle(a, golden());
  for (auto _ : state) benchmark::DoNotOptimize(build_representation(p, mu.character(), mu).verified);
}
BENCHMARK(BM_Certificate);

void BM_Eigenvalues(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  IntMatrix n(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    n(i, i) = static_cast<long>(i + 1);
    if (i + 1 < k) n(i, i + 1) = 1;
  }
  for (auto _ : state) benchmark::DoNotOptimize(positive_real_eigenvalues(n).size());
}
BENCHMARK(BM_Eigenvalues)->DenseRange(2, 8, 2);

void BM_RationalRank(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-9, 9);
  std::vector<Vector> rows(size);
  for (auto& row : rows)
    for (std::size_t j = 0; j < size; ++j) row.push_back(Scalar::rational(d(rng), 1 + std::abs(d(rng))));
  const Matrix m = Matrix::from_rows(rows, size, NumericMode::rational());
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RationalRank)->RangeMultiplier(2)->Range(4, 32);

void BM_ParsePresentation(benchmark::State& state) {
  const std::string text = to_text(surface_presentation(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(parse_presentation(text).relators.size());
}
BENCHMARK(BM_ParsePresentation)->Arg(4)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
