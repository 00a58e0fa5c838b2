#include <benchmark/benchmark.h>

#include "gkat/hoare.hpp"
#include "gkat/instances.hpp"
#include "gkat/laws.hpp"

namespace {

using namespace gkat;

const char* const kAlgebras[] = {"bool2", "chain3", "ex9", "luka:5", "godel:5", "wajsberg:8"};

void BM_GkatSuiteExhaustive(benchmark::State& state) {
  auto A = make_builtin(kAlgebras[state.range(0)]);
  state.SetLabel(A->name());
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_law_suite(*A, SuiteName::GKAT, Exhaustive{}));
  }
}
BENCHMARK(BM_GkatSuiteExhaustive)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_ClassifyParallel(benchmark::State& state) {
  auto A = make_builtin("wajsberg:8");
  CheckOptions o;
  o.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classify(*A, Exhaustive{}, o));
}
BENCHMARK(BM_ClassifyParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_WeakenRule(benchmark::State& state) {
  auto A = make_builtin("luka:7");
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_rule(*A, RuleName::WeakenStrengthen, Exhaustive{}));
  }
}
BENCHMARK(BM_WeakenRule)->Unit(benchmark::kMillisecond);

}  // namespace
