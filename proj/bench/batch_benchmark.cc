// Copyright 2026 The liebracket Authors
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

#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "liebracket/batch.h"
#include "liebracket/convergence.h"
#include "liebracket/dubins.h"
#include "liebracket/scenario.h"

namespace liebracket {
namespace {

Execution ExecOf(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::kSerial : Execution::kParallel;
}

void BM_BracketOnPoints(benchmark::State& state) {
  const DubinsFields d = Dubins1Fields();
  const VectorField f(3, [f = d.f](const Vec& x) { return f(x); });
  const VectorField g(3, [g = d.g](const Vec& x) { return g(x); });
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<Vec> pts;
  for (int i = 0; i < state.range(1); ++i) pts.push_back(Eigen::Vector3d(u(rng), u(rng), u(rng)));
  for (auto _ : state) {
    auto out = state.range(0) == 0 ? BracketOnPointsSerial(f, g, pts)
                                   : BracketOnPointsParallel(f, g, pts);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_BracketOnPoints)->ArgsProduct({{0, 1}, {1000, 100000}})->UseRealTime();

void BM_RunScenarios(benchmark::State& state) {
  std::vector<Scenario> batch = BuiltinScenarios("cross");
  for (const Scenario& s : BuiltinScenarios("cardinal")) batch.push_back(s);
  for (auto _ : state) {
    auto out = RunScenarios(batch, ExecOf(state));
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_RunScenarios)->Arg(0)->Arg(1)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_VerifyConvergence(benchmark::State& state) {
  const DubinsFields d = Dubins1Fields();
  const std::vector<double> deltas{0.2, 0.1, 0.05, 0.025, 0.0125, 0.00625};
  for (auto _ : state) {
    auto report = VerifyConvergence(d.f, d.g, Vec::Zero(3), deltas, 400, ExecOf(state));
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_VerifyConvergence)->Arg(0)->Arg(1)->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace liebracket

BENCHMARK_MAIN();
