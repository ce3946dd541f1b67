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

#include "soav/splitting.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/QR>

#include "soav/errors.h"

namespace soav {
namespace {

// Iterations an active pattern must persist before a polish is attempted.
// Doubles after every unsuccessful attempt.
constexpr int kInitialPolishDelay = 10;

// Upper bound on F(z) - F* for a feasible z. g must lie in the row space of
// A; it is scaled into [-1, 1]^N (the domain of F*) without leaving it. Each
// term L(z_n) + L*(g_n) - g_n z_n is nonnegative by Fenchel-Young and the sum
// equals F(z) minus the dual objective at g.
double DualityGap(const PiecewiseLinearObjective& objective,
                  const Eigen::VectorXd& z, Eigen::VectorXd g) {
  if (z.size() == 0) return 0.0;
  const double scale = g.cwiseAbs().maxCoeff();
  if (!std::isfinite(scale)) return std::numeric_limits<double>::infinity();
  if (scale > 1.0) g /= scale;
  double gap = 0.0;
  for (Eigen::Index n = 0; n < z.size(); ++n) {
    gap += objective.Evaluate(z[n]) + objective.Conjugate(g[n]) - g[n] * z[n];
  }
  return std::max(gap, 0.0);
}

// Per-coordinate location of a prox output: 2 b + 1 when it sits exactly on
// breakpoint b, 2 i when it lies inside piece i.
void ActivePattern(const PiecewiseLinearObjective& objective,
                   const Eigen::VectorXd& u, std::vector<int>& pattern) {
  const auto breaks = objective.breakpoints();
  pattern.resize(u.size());
  for (Eigen::Index n = 0; n < u.size(); ++n) {
    const auto it = std::lower_bound(breaks.begin(), breaks.end(), u[n]);
    const int b = static_cast<int>(it - breaks.begin());
    pattern[n] = (it != breaks.end() && *it == u[n]) ? 2 * b + 1 : 2 * b;
  }
}

struct Polished {
  Eigen::VectorXd z;
  // Dual point exact on the free coordinates.
  Eigen::VectorXd g;
};

// Solves for the point whose pinned coordinates sit on their breakpoints and
// whose free coordinates satisfy A z = y, provided that point is unique
// (which needs at most rank(A) free coordinates).
std::optional<Polished> Polish(const PiecewiseLinearObjective& objective,
                               const RealMatrix& a, const Eigen::VectorXd& y,
                               const std::vector<int>& pattern, int rank,
                               double feasibility_tolerance) {
  const auto breaks = objective.breakpoints();
  const auto slopes = objective.slopes();
  std::vector<Eigen::Index> free;
  Eigen::VectorXd z = Eigen::VectorXd::Zero(a.cols());
  for (Eigen::Index n = 0; n < a.cols(); ++n) {
    if (pattern[n] % 2 == 1) {
      z[n] = breaks[pattern[n] / 2];
    } else {
      free.push_back(n);
    }
  }
  const Eigen::Index num_free = static_cast<Eigen::Index>(free.size());
  if (num_free > rank) return std::nullopt;

  Eigen::MatrixXd a_free(a.rows(), num_free);
  Eigen::VectorXd c_free(num_free);
  for (Eigen::Index k = 0; k < num_free; ++k) {
    a_free.col(k) = a.col(free[k]);
    c_free[k] = slopes[pattern[free[k]] / 2];
  }
  Eigen::VectorXd lambda = Eigen::VectorXd::Zero(a.rows());
  if (num_free > 0) {
    const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a_free);
    if (qr.rank() < num_free) return std::nullopt;
    const Eigen::VectorXd z_free = qr.solve(y - a * z);
    for (Eigen::Index k = 0; k < num_free; ++k) z[free[k]] = z_free[k];
    // A_free = Q R P^T, so A_free^T lambda = c is solved by
    // lambda = Q [R^-T P^T c; 0].
    lambda.head(num_free) = qr.matrixR()
                                .topLeftCorner(num_free, num_free)
                                .triangularView<Eigen::Upper>()
                                .transpose()
                                .solve(qr.colsPermutation().transpose() * c_free);
    lambda = qr.householderQ() * lambda;
  }
  if (!z.allFinite() ||
      !((a * z - y).norm() <= feasibility_tolerance * (1.0 + y.norm()))) {
    return std::nullopt;
  }
  return Polished{std::move(z), a.transpose() * lambda};
}

}  // namespace

SolveResult SplittingSolve(const PiecewiseLinearObjective& objective,
                           const RealMatrix& a, const Eigen::VectorXd& y,
                           const SolverOptions& options,
                           const std::optional<Eigen::VectorXd>& initial) {
  const auto start = std::chrono::steady_clock::now();
  std::optional<AffineProjector> projector;
  try {
    projector.emplace(AffineProjector::Create(a, y));
  } catch (const InfeasibleSystem&) {
    SolveResult result;
    result.status = SolveStatus::kInfeasible;
    result.z = Eigen::VectorXd::Zero(a.cols());
    result.objective = objective.EvaluateSum(result.z);
    result.feasibility_residual = (a * result.z - y).norm() / (1.0 + y.norm());
    result.wall_time = std::chrono::steady_clock::now() - start;
    return result;
  }
  SolveResult result =
      SplittingSolve(objective, *projector, a, y, options, initial);
  result.wall_time = std::chrono::steady_clock::now() - start;
  return result;
}

SolveResult SplittingSolve(const PiecewiseLinearObjective& objective,
                           const AffineProjector& projector,
                           const RealMatrix& a, const Eigen::VectorXd& y,
                           const SolverOptions& options,
                           const std::optional<Eigen::VectorXd>& initial) {
  options.Validate();
  const auto start = std::chrono::steady_clock::now();
  if (projector.cols() != a.cols() || a.rows() != y.size()) {
    throw InputError("projector, matrix and measurements disagree in size");
  }
  if (initial && initial->size() != a.cols()) {
    throw InputError("initial point has the wrong length");
  }
  const double gamma = options.splitting_step;

  Eigen::VectorXd s = initial ? *initial : projector.min_norm_solution();
  Eigen::VectorXd z(s.size());
  Eigen::VectorXd u(s.size());
  Eigen::VectorXd g(s.size());
  std::vector<int> pattern;
  std::vector<int> previous_pattern;
  std::vector<int> attempted_pattern;
  int stable_for = 0;
  int polish_delay = kInitialPolishDelay;
  std::optional<Eigen::VectorXd> certified;

  SolveResult result;
  result.status = SolveStatus::kIterationLimit;
  int iter = 0;
  while (iter < options.max_iterations) {
    ++iter;
    z = projector.Project(s);
    // s - P(s) lies in the row space of A, so g is a dual candidate.
    g = (z - s) / gamma;
    const double f = objective.EvaluateSum(z);
    if (DualityGap(objective, z, g) <=
        options.objective_tolerance * (1.0 + std::abs(f))) {
      certified = z;
      break;
    }

    u = objective.Prox(gamma, 2.0 * z - s);
    const double change = (u - z).norm();
    s += u - z;
    if (change <= options.change_tolerance * (1.0 + z.norm())) {
      result.status = SolveStatus::kOptimal;
      break;
    }

    ActivePattern(objective, u, pattern);
    stable_for = (pattern == previous_pattern) ? stable_for + 1 : 0;
    std::swap(pattern, previous_pattern);
    if (stable_for >= polish_delay && previous_pattern != attempted_pattern) {
      attempted_pattern = previous_pattern;
      const auto polished =
          Polish(objective, a, y, previous_pattern, projector.rank(),
                 options.feasibility_tolerance);
      if (polished) {
        const double fp = objective.EvaluateSum(polished->z);
        const double bound = options.objective_tolerance * (1.0 + std::abs(fp));
        if (DualityGap(objective, polished->z, polished->g) <= bound ||
            DualityGap(objective, polished->z, (projector.Project(s) - s) / gamma) <=
                bound) {
          certified = polished->z;
          break;
        }
      }
      polish_delay *= 2;
    }
  }

  if (certified) {
    result.status = SolveStatus::kOptimal;
    result.z = std::move(*certified);
  } else {
    result.z = projector.Project(s);
  }
  result.iterations = iter;
  result.objective = objective.EvaluateSum(result.z);
  result.feasibility_residual = (a * result.z - y).norm() / (1.0 + y.norm());
  if (!result.z.allFinite()) {
    result.status = SolveStatus::kNumericalFailure;
  } else if (result.status == SolveStatus::kOptimal &&
             !(result.feasibility_residual <= options.feasibility_tolerance)) {
    result.status = SolveStatus::kNumericalFailure;
  }
  result.wall_time = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace soav
