// Copyright 2026 The chiralwind Authors
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

#include "chiral/analytic.hpp"
#include "chiral/ensembles.hpp"
#include "chiral/montecarlo.hpp"
#include "chiral/numerics.hpp"
#include "chiral/winding.hpp"

namespace {

using namespace chiral;

void BM_LogDet(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RandomStream rng(1, 0);
  const ComplexMatrix m = sample_ginibre_complex(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(logdet(m));
  state.SetComplexityN(n);
}
BENCHMARK(BM_LogDet)->RangeMultiplier(2)->Range(4, 128)->Complexity(benchmark::oNCubed);

void BM_Pfaffian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RandomStream rng(2, 0);
  const ComplexMatrix g = sample_ginibre_complex(n, rng);
  const ComplexMatrix a = g - g.transpose();
  for (auto _ : state) benchmark::DoNotOptimize(pfaffian(a));
  state.SetComplexityN(n);
}
BENCHMARK(BM_Pfaffian)->RangeMultiplier(2)->Range(4, 128)->Complexity(benchmark::oNCubed);

void BM_McPartition(benchmark::State& state, SymmetryClass cls) {
  const auto field = CoefficientField::trig(cls, static_cast<int>(state.range(0)));
  const PointSets pts{{0.4, 1.3}, {0.2, 0.9}};
  McOptions opts;
  opts.n_samples = 16384;
  for (auto _ : state) benchmark::DoNotOptimize(mc_partition(field, pts, opts));
  state.SetItemsProcessed(state.iterations() * opts.n_samples);
}
BENCHMARK_CAPTURE(BM_McPartition, aiii, SymmetryClass::AIII)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_McPartition, cii, SymmetryClass::CII)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_AnalyticZkk(benchmark::State& state, SymmetryClass cls) {
  const auto field = CoefficientField::trig(cls, static_cast<int>(state.range(0)));
  const PointSets pts{{0.4, 1.3}, {0.2, 0.9}};
  for (auto _ : state) benchmark::DoNotOptimize(analytic_zkk(field, pts));
}
BENCHMARK_CAPTURE(BM_AnalyticZkk, aiii, SymmetryClass::AIII)->Arg(2)->Arg(16);
BENCHMARK_CAPTURE(BM_AnalyticZkk, cii, SymmetryClass::CII)->Arg(2)->Arg(16);

void BM_WindingNumber(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto field = CoefficientField::trig(SymmetryClass::AIII, n);
  RandomStream rng(3, 0);
  const EnsembleSample s = sample_pair(SymmetryClass::AIII, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(winding_number(field, s));
}
BENCHMARK(BM_WindingNumber)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
