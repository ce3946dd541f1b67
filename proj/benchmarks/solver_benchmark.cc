// Copyright 2026 The SOAV Authors. All Rights Reserved.
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

#include "soav/alphabet.h"
#include "soav/lp_form.h"
#include "soav/measurement.h"
#include "soav/random.h"
#include "soav/simplex.h"
#include "soav/splitting.h"

namespace soav {
namespace {

PiecewiseLinearObjective Ternary() {
  return PiecewiseLinearObjective::Build(
      Alphabet::Create({-1, 0, 1}, {0.25, 0.5, 0.25}));
}

Eigen::VectorXd TernarySignal(int n, uint64_t seed) {
  Rng rng(seed);
  Eigen::VectorXd x(n);
  for (auto& v : x) v = static_cast<double>(rng.UniformInt(3)) - 1.0;
  return x;
}

void BM_Prox(benchmark::State& state) {
  const auto obj = Ternary();
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  Eigen::VectorXd v(n);
  for (auto& e : v) e = 2.0 * rng.Normal();
  for (auto _ : state) benchmark::DoNotOptimize(obj.Prox(1.0, v));
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_Prox)->Arg(200)->Arg(4096);

void BM_ProjectorCreate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RealMatrix a = GaussianMatrix(n / 2, n, 2);
  const Eigen::VectorXd y = a * TernarySignal(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(AffineProjector::Create(a, y));
}
BENCHMARK(BM_ProjectorCreate)->Arg(64)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Project(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RealMatrix a = GaussianMatrix(n / 2, n, 2);
  const Eigen::VectorXd y = a * TernarySignal(n, 3);
  const AffineProjector projector = AffineProjector::Create(a, y);
  const Eigen::VectorXd z = TernarySignal(n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(projector.Project(z));
}
BENCHMARK(BM_Project)->Arg(64)->Arg(200);

void BM_Simplex(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RealMatrix a = GaussianMatrix(n / 2, n, 5);
  const Eigen::VectorXd y = a * TernarySignal(n, 6);
  const SoavLinearProgram program = BuildSoavLp(Ternary(), a, y);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SimplexSolve(program, SolverOptions{}));
  }
}
BENCHMARK(BM_Simplex)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_Splitting(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RealMatrix a = GaussianMatrix(n / 2, n, 5);
  const Eigen::VectorXd y = a * TernarySignal(n, 6);
  const auto obj = Ternary();
  for (auto _ : state) {
    benchmark::DoNotOptimize(SplittingSolve(obj, a, y, SolverOptions{}));
  }
}
BENCHMARK(BM_Splitting)->Arg(30)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace soav

BENCHMARK_MAIN();
