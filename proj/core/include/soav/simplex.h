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

#ifndef SOAV_SIMPLEX_H_
#define SOAV_SIMPLEX_H_

#include <Eigen/Core>

#include "soav/lp_form.h"
#include "soav/solve_result.h"

namespace soav {

enum class LpStatus {
  kOptimal,
  kInfeasible,
  kUnbounded,
  kIterationLimit,
  kNumericalFailure,
};

struct LpSolution {
  LpStatus status = LpStatus::kNumericalFailure;
  Eigen::VectorXd x;
  double value = 0.0;
  // Total pivots over both phases.
  int iterations = 0;
  // max_j |x_j * d_j| over the nonnegative standard-form variables, with d
  // the reduced costs of the final basis.
  double complementarity = 0.0;
  // max(0, -min_j d_j).
  double dual_infeasibility = 0.0;
};

// Dense two-phase tableau simplex. Free variables are split into positive
// and negative parts and inequality rows receive slacks; phase 1 minimizes
// the artificial sum, phase 2 the true cost. The final basic solution is
// recomputed from the original data with an LU solve. Intended for
// desk-scale problems (a few thousand rows at most).
LpSolution SolveLinearProgram(const LinearProgram& lp,
                              const SolverOptions& options);

// Solves the epigraph LP and reports z, F(z) and the feasibility residual.
SolveResult SimplexSolve(const SoavLinearProgram& program,
                         const SolverOptions& options);

}  // namespace soav

#endif  // SOAV_SIMPLEX_H_
