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

#include "soav/simplex.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <Eigen/LU>

#include "soav/errors.h"

namespace soav {
namespace {

using Tableau =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

constexpr double kPivotEps = 1e-9;
constexpr double kReducedCostEps = 1e-9;
constexpr int kDegenerateRunBeforeBland = 50;

// Standard form  S w = rhs, w >= 0, rhs >= 0 with column layout
// [x+ | x- | slacks | artificials].
struct StandardForm {
  Eigen::MatrixXd matrix;
  Eigen::VectorXd rhs;
  Eigen::VectorXd cost;
  std::vector<int> initial_basis;
  int num_structural = 0;  // x+ and x- columns
  int first_artificial = 0;
};

StandardForm ToStandardForm(const LinearProgram& lp) {
  const int n = lp.num_variables();
  const int m_eq = lp.num_eq();
  const int p = lp.num_ineq();
  const int rows = m_eq + p;

  std::vector<bool> needs_artificial(rows, true);
  for (int j = 0; j < p; ++j) needs_artificial[m_eq + j] = lp.ineq_rhs[j] < 0.0;
  const int num_art = static_cast<int>(
      std::count(needs_artificial.begin(), needs_artificial.end(), true));

  StandardForm sf;
  sf.num_structural = 2 * n;
  sf.first_artificial = 2 * n + p;
  const int cols = sf.first_artificial + num_art;
  sf.matrix = Eigen::MatrixXd::Zero(rows, cols);
  sf.rhs.resize(rows);
  sf.cost = Eigen::VectorXd::Zero(cols);
  sf.cost.head(n) = lp.cost;
  sf.cost.segment(n, n) = -lp.cost;
  sf.initial_basis.resize(rows);

  int next_art = sf.first_artificial;
  for (int i = 0; i < rows; ++i) {
    const bool is_eq = i < m_eq;
    const auto coeffs =
        is_eq ? lp.eq_matrix.row(i) : lp.ineq_matrix.row(i - m_eq);
    double rhs = is_eq ? lp.eq_rhs[i] : lp.ineq_rhs[i - m_eq];
    sf.matrix.block(i, 0, 1, n) = coeffs;
    sf.matrix.block(i, n, 1, n) = -coeffs;
    if (!is_eq) sf.matrix(i, 2 * n + (i - m_eq)) = 1.0;
    if (rhs < 0.0) {
      sf.matrix.row(i) *= -1.0;
      rhs = -rhs;
    }
    sf.rhs[i] = rhs;
    if (needs_artificial[i]) {
      sf.matrix(i, next_art) = 1.0;
      sf.initial_basis[i] = next_art++;
    } else {
      sf.initial_basis[i] = 2 * n + (i - m_eq);
    }
  }
  return sf;
}

class TableauSimplex {
 public:
  TableauSimplex(const StandardForm& sf, const SolverOptions& options)
      : options_(options),
        num_cols_(static_cast<int>(sf.matrix.cols())),
        basis_(sf.initial_basis),
        rows_(static_cast<int>(sf.matrix.rows())) {
    tableau_ = Tableau::Zero(sf.matrix.rows() + 1, num_cols_ + 1);
    tableau_.topLeftCorner(sf.matrix.rows(), num_cols_) = sf.matrix;
    tableau_.topRightCorner(sf.matrix.rows(), 1) = sf.rhs;
    allowed_.assign(num_cols_, true);
    row_alive_.assign(rows_, true);
  }

  // Loads reduced costs of `cost` for the current basis into the last row.
  void SetObjective(const Eigen::VectorXd& cost) {
    auto obj = tableau_.row(rows_);
    obj.head(num_cols_) = cost.transpose();
    obj[num_cols_] = 0.0;
    for (int i = 0; i < rows_; ++i) {
      if (!row_alive_[i]) continue;
      const double cb = cost[basis_[i]];
      if (cb != 0.0) obj -= cb * tableau_.row(i);
    }
  }

  // Runs pivots until optimal. Returns kOptimal, kUnbounded or
  // kIterationLimit.
  LpStatus Optimize() {
    int degenerate_run = 0;
    while (true) {
      const bool use_bland = options_.pivot_rule == PivotRule::kBland ||
                             degenerate_run >= kDegenerateRunBeforeBland;
      const int col = ChooseEntering(use_bland);
      if (col < 0) return LpStatus::kOptimal;
      const int row = ChooseLeaving(col);
      if (row < 0) return LpStatus::kUnbounded;
      if (iterations_ >= options_.max_iterations) {
        return LpStatus::kIterationLimit;
      }
      degenerate_run = tableau_(row, num_cols_) <= kPivotEps
                           ? degenerate_run + 1
                           : 0;
      Pivot(row, col);
    }
  }

  double ObjectiveValue() const { return -tableau_(rows_, num_cols_); }

  // After phase 1: pivots artificial columns out of the basis where
  // possible and drops the rows where it is not (they are redundant).
  void RemoveArtificials(int first_artificial) {
    for (int i = 0; i < rows_; ++i) {
      if (!row_alive_[i] || basis_[i] < first_artificial) continue;
      int best = -1;
      double best_mag = kPivotEps;
      for (int j = 0; j < first_artificial; ++j) {
        const double mag = std::abs(tableau_(i, j));
        if (mag > best_mag) {
          best_mag = mag;
          best = j;
        }
      }
      if (best >= 0) {
        Pivot(i, best);
      } else {
        row_alive_[i] = false;
      }
    }
    for (int j = first_artificial; j < num_cols_; ++j) allowed_[j] = false;
  }

  int iterations() const { return iterations_; }
  const std::vector<int>& basis() const { return basis_; }
  const std::vector<bool>& row_alive() const { return row_alive_; }
  double Rhs(int row) const { return tableau_(row, num_cols_); }

 private:
  int ChooseEntering(bool bland) const {
    int best = -1;
    double best_value = -kReducedCostEps;
    for (int j = 0; j < num_cols_; ++j) {
      if (!allowed_[j]) continue;
      const double d = tableau_(rows_, j);
      if (bland) {
        if (d < -kReducedCostEps) return j;
      } else if (d < best_value) {
        best_value = d;
        best = j;
      }
    }
    return best;
  }

  int ChooseLeaving(int col) const {
    int best = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < rows_; ++i) {
      if (!row_alive_[i]) continue;
      const double entry = tableau_(i, col);
      if (entry <= kPivotEps) continue;
      const double ratio = std::max(tableau_(i, num_cols_), 0.0) / entry;
      const double tie_tol = 1e-12 * (1.0 + std::abs(best_ratio));
      if (best < 0 || ratio < best_ratio - tie_tol ||
          (ratio <= best_ratio + tie_tol && basis_[i] < basis_[best])) {
        best = i;
        best_ratio = std::min(best_ratio, ratio);
      }
    }
    return best;
  }

  void Pivot(int row, int col) {
    ++iterations_;
    tableau_.row(row) /= tableau_(row, col);
    for (int i = 0; i <= rows_; ++i) {
      if (i == row) continue;
      const double factor = tableau_(i, col);
      if (factor != 0.0) tableau_.row(i) -= factor * tableau_.row(row);
    }
    tableau_(row, col) = 1.0;
    basis_[row] = col;
  }

  const SolverOptions& options_;
  int num_cols_;
  std::vector<int> basis_;
  int rows_;
  Tableau tableau_;
  std::vector<bool> allowed_;
  std::vector<bool> row_alive_;
  int iterations_ = 0;
};

// Recomputes the basic solution and the reduced costs from the original
// standard-form data, which removes the drift accumulated by tableau
// updates.
void RefineFromBasis(const StandardForm& sf, const TableauSimplex& simplex,
                     Eigen::VectorXd* w, LpSolution* out) {
  std::vector<int> rows;
  std::vector<int> cols;
  for (size_t i = 0; i < simplex.basis().size(); ++i) {
    if (!simplex.row_alive()[i]) continue;
    rows.push_back(static_cast<int>(i));
    cols.push_back(simplex.basis()[i]);
  }
  const Eigen::Index k = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd basis_matrix(k, k);
  Eigen::VectorXd rhs(k);
  Eigen::VectorXd basis_cost(k);
  for (Eigen::Index a = 0; a < k; ++a) {
    rhs[a] = sf.rhs[rows[a]];
    basis_cost[a] = sf.cost[cols[a]];
    for (Eigen::Index b = 0; b < k; ++b) {
      basis_matrix(a, b) = sf.matrix(rows[a], cols[b]);
    }
  }
  w->setZero(sf.matrix.cols());
  Eigen::VectorXd duals = Eigen::VectorXd::Zero(sf.matrix.rows());
  if (k > 0) {
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(basis_matrix);
    const Eigen::VectorXd basic = lu.solve(rhs);
    const Eigen::VectorXd y = lu.transpose().solve(basis_cost);
    for (Eigen::Index a = 0; a < k; ++a) {
      (*w)[cols[a]] = basic[a];
      duals[rows[a]] = y[a];
    }
  }
  const Eigen::VectorXd reduced =
      sf.cost - sf.matrix.transpose() * duals;
  out->complementarity = 0.0;
  out->dual_infeasibility = 0.0;
  for (int j = 0; j < sf.first_artificial; ++j) {
    out->complementarity =
        std::max(out->complementarity, std::abs((*w)[j] * reduced[j]));
    out->dual_infeasibility = std::max(out->dual_infeasibility, -reduced[j]);
  }
}

Eigen::VectorXd Recombine(const Eigen::VectorXd& w, int n) {
  return w.head(n) - w.segment(n, n);
}

Eigen::VectorXd ReadBasicPoint(const TableauSimplex& simplex, int num_cols) {
  Eigen::VectorXd w = Eigen::VectorXd::Zero(num_cols);
  for (size_t i = 0; i < simplex.basis().size(); ++i) {
    if (simplex.row_alive()[i]) {
      w[simplex.basis()[i]] = simplex.Rhs(static_cast<int>(i));
    }
  }
  return w;
}

}  // namespace

LpSolution SolveLinearProgram(const LinearProgram& lp,
                              const SolverOptions& options) {
  lp.Validate();
  options.Validate();
  const int n = lp.num_variables();
  const StandardForm sf = ToStandardForm(lp);
  const int num_cols = static_cast<int>(sf.matrix.cols());

  LpSolution out;
  TableauSimplex simplex(sf, options);

  // Phase 1.
  Eigen::VectorXd phase1_cost = Eigen::VectorXd::Zero(num_cols);
  phase1_cost.tail(num_cols - sf.first_artificial).setOnes();
  simplex.SetObjective(phase1_cost);
  LpStatus status = simplex.Optimize();
  out.iterations = simplex.iterations();
  if (status == LpStatus::kIterationLimit) {
    out.status = status;
    out.x = Recombine(ReadBasicPoint(simplex, num_cols), n);
    out.value = lp.cost.dot(out.x);
    return out;
  }
  if (status != LpStatus::kOptimal) {
    out.status = LpStatus::kNumericalFailure;
    out.x = Eigen::VectorXd::Zero(n);
    return out;
  }
  const double rhs_scale = 1.0 + (sf.rhs.size() > 0 ? sf.rhs.lpNorm<Eigen::Infinity>() : 0.0);
  if (simplex.ObjectiveValue() > options.feasibility_tolerance * rhs_scale) {
    out.status = LpStatus::kInfeasible;
    out.x = Recombine(ReadBasicPoint(simplex, num_cols), n);
    out.value = lp.cost.dot(out.x);
    return out;
  }
  simplex.RemoveArtificials(sf.first_artificial);

  // Phase 2.
  simplex.SetObjective(sf.cost);
  status = simplex.Optimize();
  out.iterations = simplex.iterations();
  out.status = status;

  Eigen::VectorXd w = ReadBasicPoint(simplex, num_cols);
  if (status == LpStatus::kOptimal) RefineFromBasis(sf, simplex, &w, &out);
  out.x = Recombine(w, n);
  out.value = lp.cost.dot(out.x);
  return out;
}

SolveResult SimplexSolve(const SoavLinearProgram& program,
                         const SolverOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const LpSolution lp = SolveLinearProgram(program.lp, options);
  const int n = program.signal_size;

  SolveResult result;
  result.iterations = lp.iterations;
  switch (lp.status) {
    case LpStatus::kOptimal:
      result.status = SolveStatus::kOptimal;
      break;
    case LpStatus::kInfeasible:
      result.status = SolveStatus::kInfeasible;
      break;
    case LpStatus::kIterationLimit:
      result.status = SolveStatus::kIterationLimit;
      break;
    case LpStatus::kUnbounded:
    case LpStatus::kNumericalFailure:
      result.status = SolveStatus::kNumericalFailure;
      break;
  }

  result.z = lp.x.size() == 2 * n ? Eigen::VectorXd(lp.x.head(n))
                                  : Eigen::VectorXd::Zero(n);
  if (result.status == SolveStatus::kOptimal) {
    try {
      result.z = ExtractSolution(program.objective, lp.x, n).z;
    } catch (const SolverFailure&) {
      result.status = SolveStatus::kNumericalFailure;
    }
  }
  const auto& a = program.lp.eq_matrix;
  const Eigen::VectorXd& y = program.lp.eq_rhs;
  result.objective = program.objective.EvaluateSum(result.z);
  result.feasibility_residual =
      a.rows() > 0 ? (a.leftCols(n) * result.z - y).norm() / (1.0 + y.norm())
                   : 0.0;
  if (result.status == SolveStatus::kOptimal &&
      !(result.feasibility_residual <= options.feasibility_tolerance)) {
    result.status = SolveStatus::kNumericalFailure;
  }
  result.wall_time = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace soav
