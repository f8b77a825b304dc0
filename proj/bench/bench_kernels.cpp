// Serial reference vs OpenMP kernels on compiled family patterns.

#include <benchmark/benchmark.h>

#include <map>
#include <memory>

#include "thinlie/derivations.hpp"
#include "thinlie/kernels.hpp"
#include "thinlie/patterns.hpp"

using namespace thinlie;

namespace {

const GradedAlgebra& algebra(int N) {
  static std::map<int, std::unique_ptr<GradedAlgebra>> cache;
  auto& slot = cache[N];
  if (!slot) {
    FamilySpec s;
    s.family = "uniqueness";
    slot = std::make_unique<GradedAlgebra>(compile_data(family_pattern(s, N + 2), N));
  }
  return *slot;
}

template <kernels::Tally (*K)(const GradedAlgebra&, int)>
void BM_identity(benchmark::State& st) {
  const auto& L = algebra(static_cast<int>(st.range(0)));
  std::uint64_t checked = 0;
  for (auto _ : st) {
    auto t = K(L, L.top());
    checked = t.checked;
    benchmark::DoNotOptimize(t);
  }
  st.counters["checked"] = static_cast<double>(checked);
  st.counters["items/s"] = benchmark::Counter(static_cast<double>(checked), benchmark::Counter::kIsIterationInvariantRate);
}

template <kernels::Tally (*K)(const GradedAlgebra&, const OperatorFamily&, int)>
void BM_leibniz(benchmark::State& st) {
  const auto& L = algebra(static_cast<int>(st.range(0)));
  const auto D = build_D(L);
  for (auto _ : st) benchmark::DoNotOptimize(K(L, D.D, L.top()));
}

}  // namespace

BENCHMARK(BM_identity<kernels::jacobi_serial>)->Name("jacobi/serial")->Arg(100)->Arg(200)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_identity<kernels::jacobi_parallel>)->Name("jacobi/omp")->Arg(100)->Arg(200)->Arg(300)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_identity<kernels::antisymmetry_serial>)->Name("antisymmetry/serial")->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_identity<kernels::antisymmetry_parallel>)->Name("antisymmetry/omp")->Arg(300)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_identity<kernels::support_serial>)->Name("bigrading/serial")->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_identity<kernels::support_parallel>)->Name("bigrading/omp")->Arg(300)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_leibniz<kernels::leibniz_serial>)->Name("leibniz/serial")->Arg(200)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_leibniz<kernels::leibniz_parallel>)->Name("leibniz/omp")->Arg(200)->Arg(300)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
