// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include "f1/kernels.hpp"

namespace {

using namespace f1::kernels;

void BM_InvertibleSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int p = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_invertible_serial(n, p));
}

void BM_InvertibleParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int p = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_invertible_parallel(n, p));
}

void BM_SubspacesSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(subspaces_by_spanning_serial(static_cast<int>(state.range(0)),
                                                          static_cast<int>(state.range(1)), 3));
  }
}

void BM_SubspacesParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(subspaces_by_spanning_parallel(static_cast<int>(state.range(0)),
                                                            static_cast<int>(state.range(1)), 3));
  }
}

// Nothing separates x1 = x1, so the whole grid is scanned.
SeparationProblem unseparable(std::size_t arity) {
  SeparationProblem p;
  p.arity = arity;
  p.inverted.assign(arity, false);
  auto var = [&](std::size_t i) {
    f1::Exponents e(arity, 0);
    e[i] = 1;
    return EvalTerm{e, 1};
  };
  p.target = {{var(0)}, {var(0)}};
  for (std::size_t i = 0; i + 1 < arity; ++i) p.constraints.push_back({{var(i), var(i + 1)}, {var(i + 1), var(i)}});
  return p;
}

void BM_SeparationSerial(benchmark::State& state) {
  const auto problem = unseparable(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(separating_assignment_serial(problem, Carrier::NonNegativeRationals, {0, 1, 2, 3}));
  }
}

void BM_SeparationParallel(benchmark::State& state) {
  const auto problem = unseparable(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(separating_assignment_parallel(problem, Carrier::NonNegativeRationals, {0, 1, 2, 3}));
  }
}

}  // namespace

BENCHMARK(BM_InvertibleSerial)->Args({3, 2})->Args({3, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InvertibleParallel)->Args({3, 2})->Args({3, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SubspacesSerial)->Args({3, 2})->Args({4, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SubspacesParallel)->Args({3, 2})->Args({4, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SeparationSerial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SeparationParallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
