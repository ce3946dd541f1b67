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

#ifndef SOAV_SOLVERS_H_
#define SOAV_SOLVERS_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "soav/alphabet.h"
#include "soav/lp_form.h"
#include "soav/measurement.h"
#include "soav/simplex.h"
#include "soav/solve_result.h"
#include "soav/splitting.h"

namespace soav {

enum class Method {
  kSimplex,    // exact epigraph LP
  kSplitting,  // Douglas-Rachford
};

// Accepts "lp" / "simplex" and "admm" / "splitting". Throws InputError.
Method ParseMethod(std::string_view name);
std::string_view ToString(Method method);

// min sum_i p_i ||z - r_i||_1 s.t. A z = y with the chosen method.
SolveResult SolveSoav(const PiecewiseLinearObjective& objective,
                      const RealMatrix& a, const Eigen::VectorXd& y,
                      Method method, const SolverOptions& options);

// min ||z||_1 s.t. A z = y, i.e. SolveSoav with the one-symbol alphabet {0}.
SolveResult BasisPursuit(const RealMatrix& a, const Eigen::VectorXd& y,
                         const SolverOptions& options,
                         Method method = Method::kSplitting);

// Candidate budget for brute-force enumeration over X^N.
inline constexpr double kEnumerationBudget = 1e7;

// Every x in X^N with ||A x - y|| <= tol * (1 + ||y||), in odometer order
// (coordinate 0 varies fastest, symbols ascending). Throws BudgetExceeded
// when L^N > kEnumerationBudget.
std::vector<Eigen::VectorXd> ExhaustiveSearch(const Alphabet& alphabet,
                                              const RealMatrix& a,
                                              const Eigen::VectorXd& y,
                                              double tol = 1e-8);

}  // namespace soav

#endif  // SOAV_SOLVERS_H_
