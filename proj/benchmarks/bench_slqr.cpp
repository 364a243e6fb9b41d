// Copyright 2026 The slqr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "slqr/slqr.hpp"

namespace {

using namespace slqr;

const ArmModel& arm() {
  static const ArmModel model = build_arm_model(ArmParams{});
  return model;
}

void BM_GlePrimalArmClosedLoop(benchmark::State& state) {
  const ClosedLoop cl = close_loop(arm().system, FeedbackGain(arm_default_initial_gain()));
  const SymMatrix q = arm().weights.Q;
  for (auto _ : state) benchmark::DoNotOptimize(solve_gle_primal(cl.A, cl.C, q));
}
BENCHMARK(BM_GlePrimalArmClosedLoop)->Unit(benchmark::kMicrosecond);

void BM_GlePrimalAugmented(benchmark::State& state) {
  const AugmentedSystem aug = augment(arm().system, FeedbackGain(arm_default_initial_gain()));
  const SymMatrix lam = lambda_of(arm().weights).value();
  for (auto _ : state) benchmark::DoNotOptimize(solve_gle_primal(aug.A, aug.C, lam));
}
BENCHMARK(BM_GlePrimalAugmented)->Unit(benchmark::kMicrosecond);

void BM_PolicyIterationArm(benchmark::State& state) {
  const FeedbackGain f0(arm_default_initial_gain());
  for (auto _ : state) benchmark::DoNotOptimize(solve_gare_pi(arm().system, arm().weights, f0));
}
BENCHMARK(BM_PolicyIterationArm)->Unit(benchmark::kMillisecond);

void BM_PrimalDualArm(benchmark::State& state) {
  const FeedbackGain f0(arm_default_initial_gain());
  for (auto _ : state)
    benchmark::DoNotOptimize(run_model_based(arm().system, arm().weights, f0));
}
BENCHMARK(BM_PrimalDualArm)->Unit(benchmark::kMillisecond);

// One sampled learning iteration: rollouts, moment estimates and the data solve.
void BM_LearningIterationArm(benchmark::State& state) {
  const LinearPlant plant(arm().system);
  const FeedbackGain f0(arm_default_initial_gain());
  LearnConfig cfg;
  cfg.paths = static_cast<int>(state.range(0));
  cfg.threads = static_cast<int>(state.range(1));
  SampledDataSource source(plant, generate_initial_basis(6, 2, 8), cfg);
  const std::vector<Matrix> blocks = augmented_diffusion(arm().system.C, arm().system.D, f0);
  const LambdaBlock lam = lambda_of(arm().weights);
  for (auto _ : state) {
    const DataMatrices dm = source.collect(f0, 0);
    benchmark::DoNotOptimize(solve_dual_from_data(dm, blocks, lam));
  }
}
BENCHMARK(BM_LearningIterationArm)
    ->Args({200, 1})
    ->Args({200, 4})
    ->Args({15, 1})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
