#include <benchmark/benchmark.h>

#include <random>

#include "gkat/constructions.hpp"
#include "gkat/instances.hpp"

namespace {

using namespace gkat;

void BM_MatStar(benchmark::State& state) {
  auto A = make_builtin("luka:4");
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(0);
  Matrix m{n, std::vector<Element>(n * n)};
  for (auto& e : m.entries) e = A->elements()[rng() % A->elements().size()];
  for (auto _ : state) benchmark::DoNotOptimize(mat_star(*A, m));
}
BENCHMARK(BM_MatStar)->RangeMultiplier(2)->Range(2, 32);

void BM_FrelStar(benchmark::State& state) {
  auto K = make_builtin("godel:5");
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(0);
  FuzzyRelation mu{n, std::vector<Element>(n * n)};
  for (auto& e : mu.values) e = K->elements()[rng() % K->elements().size()];
  for (auto _ : state) benchmark::DoNotOptimize(frel_star(*K, mu, 6));
}
BENCHMARK(BM_FrelStar)->RangeMultiplier(2)->Range(2, 16);

void BM_TabulateFrel(benchmark::State& state) {
  auto chain3 = make_builtin("chain3");
  for (auto _ : state) benchmark::DoNotOptimize(frel_algebra(chain3, chain3, "xy"));
}
BENCHMARK(BM_TabulateFrel)->Unit(benchmark::kMillisecond);

}  // namespace
