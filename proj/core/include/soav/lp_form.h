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

#ifndef SOAV_LP_FORM_H_
#define SOAV_LP_FORM_H_

#include <iosfwd>

#include <Eigen/Core>

#include "soav/alphabet.h"
#include "soav/measurement.h"

namespace soav {

// minimize cost . x  subject to  eq_matrix x = eq_rhs,
//                                ineq_matrix x <= ineq_rhs,
// with every variable free in sign.
struct LinearProgram {
  Eigen::VectorXd cost;
  Eigen::MatrixXd eq_matrix;
  Eigen::VectorXd eq_rhs;
  Eigen::MatrixXd ineq_matrix;
  Eigen::VectorXd ineq_rhs;

  int num_variables() const { return static_cast<int>(cost.size()); }
  int num_eq() const { return static_cast<int>(eq_matrix.rows()); }
  int num_ineq() const { return static_cast<int>(ineq_matrix.rows()); }

  // Throws InputError if the blocks disagree in size.
  void Validate() const;
};

// Epigraph form of min F(z) s.t. A z = y over the joint variable (z, theta):
//
//   minimize   1_N . theta
//   subject to A z = y,
//              slopes_tiled (x) z + intercepts_tiled <= E theta,
//
// where inequality row n * (L + 1) + i reads
// slope_i * z_n - theta_n <= -intercept_i.
struct SoavLinearProgram {
  LinearProgram lp;
  PiecewiseLinearObjective objective;
  int signal_size = 0;
  // Per-coordinate pieces (L + 1 entries each).
  Eigen::VectorXd slopes;
  Eigen::VectorXd intercepts;
  // 1_N (x) intercepts, the constant term of the inequality block.
  Eigen::VectorXd intercepts_tiled;
};

// Throws InputError if y.size() != a.rows().
SoavLinearProgram BuildSoavLp(const PiecewiseLinearObjective& objective,
                              const RealMatrix& a, const Eigen::VectorXd& y);

struct EpigraphSplit {
  Eigen::VectorXd z;
  Eigen::VectorXd theta;
};

inline constexpr double kEpigraphTolerance = 1e-7;

// Splits an LP point into (z, theta). Throws InputError if
// solution.size() != 2 n, and SolverFailure if some
// theta_n < L(z_n) - kEpigraphTolerance.
EpigraphSplit ExtractSolution(const PiecewiseLinearObjective& objective,
                              const Eigen::Ref<const Eigen::VectorXd>& solution,
                              int n);

// Debug dump:
//   minimize
//   <cost CSV>
//   subject-to-eq
//   <one CSV row per constraint: coefficients..., rhs>
//   subject-to-ineq
//   <one CSV row per constraint: coefficients..., rhs>
void WriteLinearProgram(std::ostream& out, const LinearProgram& lp);

}  // namespace soav

#endif  // SOAV_LP_FORM_H_
