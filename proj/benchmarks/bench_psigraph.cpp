// Copyright 2026 The psigraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include <vector>

#include "psigraph/charseries.hpp"
#include "psigraph/graphs.hpp"
#include "psigraph/kernels.hpp"
#include "psigraph/spectra.hpp"

namespace psigraph {
namespace {

void BM_SeriesExpFloat(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  std::vector<double> c(static_cast<std::size_t>(k) + 1);
  for (int i = 2; i <= k; ++i) c[static_cast<std::size_t>(i)] = 1.0 / (i * i);
  const TruncatedSeries b(std::move(c));
  for (auto _ : state) benchmark::DoNotOptimize(series::exp(b, k));
}
BENCHMARK(BM_SeriesExpFloat)->Arg(16)->Arg(64)->Arg(256);

void BM_QuasirandomRational(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(charseries::quasirandom_series(Rational(1, 2), k));
}
BENCHMARK(BM_QuasirandomRational)->Arg(8)->Arg(16)->Arg(32);

void BM_SymEig(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const StepKernel w = kernels::discretize(ClosedFormKernel::Half(), m);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::step_eig(w));
}
BENCHMARK(BM_SymEig)->Arg(64)->Arg(128)->Arg(512)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_HararySachsCount(benchmark::State& state) {
  const Graph g = graphs::erdos_renyi(static_cast<int>(state.range(0)), 0.5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(charseries::psi_from_graph(g, 8, Route::kHararySachs));
}
BENCHMARK(BM_HararySachsCount)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_PsiEigenRoute(benchmark::State& state) {
  const Graph g = graphs::erdos_renyi(static_cast<int>(state.range(0)), 0.5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(charseries::psi_from_graph(g, 16, Route::kEigen));
}
BENCHMARK(BM_PsiEigenRoute)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace psigraph

BENCHMARK_MAIN();
