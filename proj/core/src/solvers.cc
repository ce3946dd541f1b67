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

#include "soav/solvers.h"

#include <cmath>
#include <string>

#include "soav/errors.h"

namespace soav {

std::string_view ToString(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kIterationLimit:
      return "iteration_limit";
    case SolveStatus::kInfeasible:
      return "infeasible";
    case SolveStatus::kNumericalFailure:
      return "numerical_failure";
  }
  return "unknown";
}

void SolverOptions::Validate() const {
  if (max_iterations < 1) throw InputError("max_iterations must be positive");
  if (!(feasibility_tolerance > 0.0) || !(objective_tolerance > 0.0) ||
      !(change_tolerance > 0.0)) {
    throw InputError("solver tolerances must be positive");
  }
  if (!(splitting_step > 0.0)) throw InputError("splitting step must be positive");
}

Method ParseMethod(std::string_view name) {
  if (name == "lp" || name == "simplex") return Method::kSimplex;
  if (name == "admm" || name == "splitting") return Method::kSplitting;
  throw InputError("unknown solver '" + std::string(name) +
                   "' (expected lp or admm)");
}

std::string_view ToString(Method method) {
  return method == Method::kSimplex ? "lp" : "admm";
}

SolveResult SolveSoav(const PiecewiseLinearObjective& objective,
                      const RealMatrix& a, const Eigen::VectorXd& y,
                      Method method, const SolverOptions& options) {
  if (a.rows() != y.size()) {
    throw InputError("matrix has " + std::to_string(a.rows()) +
                     " rows but y has " + std::to_string(y.size()) +
                     " entries");
  }
  if (method == Method::kSimplex) {
    return SimplexSolve(BuildSoavLp(objective, a, y), options);
  }
  return SplittingSolve(objective, a, y, options);
}

SolveResult BasisPursuit(const RealMatrix& a, const Eigen::VectorXd& y,
                         const SolverOptions& options, Method method) {
  static const PiecewiseLinearObjective kAbsoluteValue =
      PiecewiseLinearObjective::Build(Alphabet::Create({0.0}, {1.0}));
  return SolveSoav(kAbsoluteValue, a, y, method, options);
}

std::vector<Eigen::VectorXd> ExhaustiveSearch(const Alphabet& alphabet,
                                              const RealMatrix& a,
                                              const Eigen::VectorXd& y,
                                              double tol) {
  if (a.rows() != y.size()) {
    throw InputError("matrix rows and measurement length differ");
  }
  const int n = static_cast<int>(a.cols());
  const int num_symbols = alphabet.size();
  const double candidates = std::pow(static_cast<double>(num_symbols), n);
  if (candidates > kEnumerationBudget) {
    throw BudgetExceeded("exhaustive search over " + std::to_string(num_symbols) +
                         "^" + std::to_string(n) + " candidates exceeds budget");
  }
  const auto symbols = alphabet.symbols();
  const double threshold = tol * (1.0 + y.norm());
  // The running residual is updated one column at a time; candidates that
  // pass a loosened screen are rechecked from scratch.
  const double screen = 10.0 * threshold + 1e-9 * (1.0 + y.norm());

  std::vector<int> digits(n, 0);
  Eigen::VectorXd x = Eigen::VectorXd::Constant(n, symbols[0]);
  Eigen::VectorXd residual = a * x - y;
  std::vector<Eigen::VectorXd> matches;
  while (true) {
    if (residual.norm() <= screen && (a * x - y).norm() <= threshold) {
      matches.push_back(x);
    }
    int k = 0;
    while (k < n && digits[k] == num_symbols - 1) {
      residual += (symbols[0] - x[k]) * a.col(k);
      x[k] = symbols[0];
      digits[k] = 0;
      ++k;
    }
    if (k == n) break;
    ++digits[k];
    residual += (symbols[digits[k]] - x[k]) * a.col(k);
    x[k] = symbols[digits[k]];
  }
  return matches;
}

}  // namespace soav
