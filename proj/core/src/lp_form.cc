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

#include "soav/lp_form.h"

#include <ostream>
#include <string>

#include "soav/errors.h"
#include "soav/matrix_io.h"

namespace soav {
namespace {

void WriteConstraintRows(std::ostream& out, const Eigen::MatrixXd& m,
                         const Eigen::VectorXd& rhs) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out << FormatDouble(m(i, j)) << ',';
    }
    out << FormatDouble(rhs[i]) << '\n';
  }
}

}  // namespace

void LinearProgram::Validate() const {
  const Eigen::Index n = cost.size();
  if (eq_matrix.rows() != eq_rhs.size() ||
      (eq_matrix.rows() > 0 && eq_matrix.cols() != n)) {
    throw InputError("equality block does not match the variable count");
  }
  if (ineq_matrix.rows() != ineq_rhs.size() ||
      (ineq_matrix.rows() > 0 && ineq_matrix.cols() != n)) {
    throw InputError("inequality block does not match the variable count");
  }
}

SoavLinearProgram BuildSoavLp(const PiecewiseLinearObjective& objective,
                              const RealMatrix& a, const Eigen::VectorXd& y) {
  if (a.rows() != y.size()) {
    throw InputError("measurement matrix has " + std::to_string(a.rows()) +
                     " rows but y has " + std::to_string(y.size()) +
                     " entries");
  }
  const int n = static_cast<int>(a.cols());
  const int pieces = objective.num_pieces();

  const Eigen::VectorXd intercepts = Eigen::Map<const Eigen::VectorXd>(
      objective.intercepts().data(), pieces);
  SoavLinearProgram out{
      .lp = {},
      .objective = objective,
      .signal_size = n,
      .slopes = Eigen::Map<const Eigen::VectorXd>(objective.slopes().data(),
                                                  pieces),
      .intercepts = intercepts,
      .intercepts_tiled = intercepts.replicate(n, 1),
  };

  LinearProgram& lp = out.lp;
  lp.cost = Eigen::VectorXd::Zero(2 * n);
  lp.cost.tail(n).setOnes();
  lp.eq_matrix = Eigen::MatrixXd::Zero(a.rows(), 2 * n);
  lp.eq_matrix.leftCols(n) = a;
  lp.eq_rhs = y;

  lp.ineq_matrix = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n) * pieces,
                                         2 * n);
  for (int coord = 0; coord < n; ++coord) {
    for (int i = 0; i < pieces; ++i) {
      const Eigen::Index row = static_cast<Eigen::Index>(coord) * pieces + i;
      lp.ineq_matrix(row, coord) = out.slopes[i];
      lp.ineq_matrix(row, n + coord) = -1.0;
    }
  }
  lp.ineq_rhs = -out.intercepts_tiled;
  return out;
}

EpigraphSplit ExtractSolution(const PiecewiseLinearObjective& objective,
                              const Eigen::Ref<const Eigen::VectorXd>& solution,
                              int n) {
  if (n < 0 || solution.size() != 2 * static_cast<Eigen::Index>(n)) {
    throw InputError("LP solution has length " +
                     std::to_string(solution.size()) + ", expected " +
                     std::to_string(2 * n));
  }
  EpigraphSplit out{solution.head(n), solution.tail(n)};
  for (int i = 0; i < n; ++i) {
    const double floor = objective.Evaluate(out.z[i]);
    if (out.theta[i] < floor - kEpigraphTolerance) {
      throw SolverFailure("epigraph violated at coordinate " +
                          std::to_string(i) + ": theta " +
                          FormatDouble(out.theta[i]) + " < L(z) " +
                          FormatDouble(floor));
    }
  }
  return out;
}

void WriteLinearProgram(std::ostream& out, const LinearProgram& lp) {
  out << "minimize\n";
  for (Eigen::Index j = 0; j < lp.cost.size(); ++j) {
    if (j > 0) out << ',';
    out << FormatDouble(lp.cost[j]);
  }
  out << "\nsubject-to-eq\n";
  WriteConstraintRows(out, lp.eq_matrix, lp.eq_rhs);
  out << "subject-to-ineq\n";
  WriteConstraintRows(out, lp.ineq_matrix, lp.ineq_rhs);
}

}  // namespace soav
