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

#ifndef SOAV_SOLVE_RESULT_H_
#define SOAV_SOLVE_RESULT_H_

#include <chrono>
#include <string_view>

#include <Eigen/Core>

namespace soav {

enum class SolveStatus {
  kOptimal,
  kIterationLimit,
  kInfeasible,
  kNumericalFailure,
};

std::string_view ToString(SolveStatus status);

enum class PivotRule {
  // Smallest-index entering and leaving variable; never cycles.
  kBland,
  // Most negative reduced cost; falls back to Bland after a run of
  // degenerate pivots.
  kDantzig,
};

struct SolverOptions {
  int max_iterations = 20000;
  double feasibility_tolerance = 1e-7;
  double objective_tolerance = 1e-7;
  // Douglas-Rachford step gamma.
  double splitting_step = 1.0;
  // Splitting stops when ||s_{k+1} - s_k|| <= change_tolerance * (1 + ||z_k||).
  double change_tolerance = 1e-9;
  PivotRule pivot_rule = PivotRule::kBland;

  // Throws InputError on non-positive tolerances, step, or iteration cap.
  void Validate() const;
};

struct SolveResult {
  Eigen::VectorXd z;
  // F(z), always recomputed from z.
  double objective = 0.0;
  SolveStatus status = SolveStatus::kNumericalFailure;
  int iterations = 0;
  // ||A z - y|| / (1 + ||y||).
  double feasibility_residual = 0.0;
  std::chrono::duration<double> wall_time{0};
};

}  // namespace soav

#endif  // SOAV_SOLVE_RESULT_H_
