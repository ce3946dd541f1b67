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

#ifndef SOAV_SPLITTING_H_
#define SOAV_SPLITTING_H_

#include <optional>

#include <Eigen/Core>

#include "soav/alphabet.h"
#include "soav/measurement.h"
#include "soav/solve_result.h"

namespace soav {

// Douglas-Rachford splitting for min F(z) s.t. A z = y, alternating the
// closed-form prox of gamma * F (coordinatewise) with the Euclidean
// projection onto the affine set:
//
//   z_k     = P(s_k)
//   u_k     = prox_{gamma F}(2 z_k - s_k)
//   s_{k+1} = s_k + u_k - z_k
//
// The returned z is P(s) and is therefore always feasible up to rounding.
// Converges for any gamma > 0. Iteration stops when ||u_k - z_k|| falls
// below change_tolerance * (1 + ||z_k||) or when F(z_k) has not moved over
// a long window. `initial` seeds s_0 (default: the minimum-norm solution).
// Returns kInfeasible if y is outside the range of A.
SolveResult SplittingSolve(const PiecewiseLinearObjective& objective,
                           const RealMatrix& a, const Eigen::VectorXd& y,
                           const SolverOptions& options,
                           const std::optional<Eigen::VectorXd>& initial = {});

// Same iteration with a prebuilt projector, for callers that solve many
// right-hand sides with one matrix.
SolveResult SplittingSolve(const PiecewiseLinearObjective& objective,
                           const AffineProjector& projector,
                           const RealMatrix& a, const Eigen::VectorXd& y,
                           const SolverOptions& options,
                           const std::optional<Eigen::VectorXd>& initial = {});

}  // namespace soav

#endif  // SOAV_SPLITTING_H_
