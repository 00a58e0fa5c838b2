#include <benchmark/benchmark.h>

#include "gkat/hoare.hpp"
#include "gkat/instances.hpp"
#include "gkat/semantics.hpp"

namespace {

using namespace gkat;

void BM_EvalNestedLoop(benchmark::State& state) {
  auto A = make_builtin("godel:4");
  const Term t = denesting_lhs();
  Valuation v;
  v.set("b", Sort::Test, *A->find_element("1/2"));
  v.set("p", Sort::Program, *A->find_element("3/4"));
  v.set("c", Sort::Test, *A->find_element("1/4"));
  v.set("q", Sort::Program, *A->find_element("1"));
  for (auto _ : state) benchmark::DoNotOptimize(eval(t, *A, v));
}
BENCHMARK(BM_EvalNestedLoop);

void BM_DenestingEquivalence(benchmark::State& state) {
  auto A = make_builtin("godel:4");
  const SideConditionReport side = check_denesting_side_conditions(*A, Exhaustive{});
  for (auto _ : state) benchmark::DoNotOptimize(denesting_equivalence(*A, side, Exhaustive{}));
}
BENCHMARK(BM_DenestingEquivalence)->Unit(benchmark::kMillisecond);

}  // namespace
