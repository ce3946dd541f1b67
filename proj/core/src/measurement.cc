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

#include "soav/measurement.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/QR>

#include "soav/errors.h"
#include "soav/random.h"

namespace soav {
namespace {

Eigen::ColPivHouseholderQR<Eigen::MatrixXd> RowSpaceQr(const RealMatrix& a) {
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a.transpose());
  qr.setThreshold(kRankThreshold);
  return qr;
}

template <typename Vector>
void CheckUnvecSize(const Vector& v, int rows, int cols) {
  if (rows < 0 || cols < 0 ||
      v.size() != static_cast<Eigen::Index>(rows) * cols) {
    throw InputError("cannot reshape vector of length " +
                     std::to_string(v.size()) + " to " + std::to_string(rows) +
                     "x" + std::to_string(cols));
  }
}

}  // namespace

RealMatrix GaussianMatrix(int m, int n, uint64_t seed) {
  if (m < 1 || n < 1) throw InputError("matrix dimensions must be positive");
  Rng rng(seed);
  RealMatrix out(m, n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) out(i, j) = rng.Normal();
  }
  return out;
}

ComplexMatrix DftMatrix(int k) {
  if (k < 1) throw InputError("DFT size must be positive");
  ComplexMatrix w(k, k);
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) {
      const long long exponent = (static_cast<long long>(r) * c) % k;
      const double angle = -2.0 * std::numbers::pi *
                           static_cast<double>(exponent) / static_cast<double>(k);
      w(r, c) = std::complex<double>(std::cos(angle), std::sin(angle));
    }
  }
  return w;
}

Eigen::MatrixXd Unvec(const Eigen::Ref<const Eigen::VectorXd>& v, int rows,
                      int cols) {
  CheckUnvecSize(v, rows, cols);
  return Eigen::Map<const Eigen::MatrixXd>(v.data(), rows, cols);
}

Eigen::MatrixXcd Unvec(const Eigen::Ref<const Eigen::VectorXcd>& v, int rows,
                       int cols) {
  CheckUnvecSize(v, rows, cols);
  return Eigen::Map<const Eigen::MatrixXcd>(v.data(), rows, cols);
}

std::vector<int> SampleRowIndices(int rows, int keep, uint64_t seed) {
  if (keep < 1 || keep > rows) {
    throw InputError("cannot keep " + std::to_string(keep) + " of " +
                     std::to_string(rows) + " rows");
  }
  std::vector<int> pool(rows);
  for (int i = 0; i < rows; ++i) pool[i] = i;
  Rng rng(seed);
  for (int i = 0; i < keep; ++i) {
    const int j = i + static_cast<int>(rng.UniformInt(rows - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(keep);
  std::sort(pool.begin(), pool.end());
  return pool;
}

RealSystem Realify(const ComplexMatrix& phi, const Eigen::VectorXcd& y) {
  if (phi.rows() != y.size()) {
    throw InputError("matrix has " + std::to_string(phi.rows()) +
                     " rows but measurement vector has " +
                     std::to_string(y.size()) + " entries");
  }
  const Eigen::Index m = phi.rows();
  RealSystem out;
  out.matrix.resize(2 * m, phi.cols());
  out.matrix.topRows(m) = phi.real();
  out.matrix.bottomRows(m) = phi.imag();
  out.rhs.resize(2 * m);
  out.rhs.head(m) = y.real();
  out.rhs.tail(m) = y.imag();
  return out;
}

AffineProjector AffineProjector::Create(const RealMatrix& a,
                                        const Eigen::VectorXd& y) {
  if (a.rows() != y.size()) {
    throw InputError("matrix has " + std::to_string(a.rows()) +
                     " rows but right-hand side has " +
                     std::to_string(y.size()) + " entries");
  }
  if (a.rows() < 1 || a.cols() < 1) throw InputError("empty measurement matrix");
  if (!a.allFinite() || !y.allFinite()) {
    throw InputError("measurement system has non-finite entries");
  }

  const auto qr = RowSpaceQr(a);
  const Eigen::Index n = a.cols();
  const Eigen::Index rank = qr.rank();

  AffineProjector proj;
  proj.rows_ = static_cast<int>(a.rows());
  proj.rank_ = static_cast<int>(rank);
  const Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd row_basis = q.leftCols(rank);

  // P^T A = R^T Q^T, so the first `rank` permuted rows read
  // R11^T (Q_r^T w) = (P^T y)_head.
  const Eigen::VectorXd permuted_y = qr.colsPermutation().transpose() * y;
  Eigen::VectorXd coeffs = permuted_y.head(rank);
  qr.matrixR()
      .topLeftCorner(rank, rank)
      .template triangularView<Eigen::Upper>()
      .transpose()
      .solveInPlace(coeffs);
  proj.offset_ = row_basis * coeffs;
  proj.basis_is_kernel_ = 2 * rank > n;
  proj.basis_ = proj.basis_is_kernel_ ? Eigen::MatrixXd(q.rightCols(n - rank))
                                      : row_basis;

  const double residual = (a * proj.offset_ - y).norm();
  if (!(residual <= 1e-8 * (1.0 + y.norm()))) {
    throw InfeasibleSystem("measurement system is inconsistent (residual " +
                           std::to_string(residual) + ")");
  }
  return proj;
}

Eigen::VectorXd AffineProjector::Project(
    const Eigen::Ref<const Eigen::VectorXd>& z) const {
  if (z.size() != cols()) {
    throw InputError("projector expects a vector of length " +
                     std::to_string(cols()));
  }
  if (basis_is_kernel_) {
    Eigen::VectorXd out = basis_ * (basis_.transpose() * (z - offset_));
    out += offset_;
    return out;
  }
  Eigen::VectorXd out = z - basis_ * (basis_.transpose() * z);
  out += offset_;
  return out;
}

Eigen::MatrixXd KernelBasis(const RealMatrix& a) {
  const auto qr = RowSpaceQr(a);
  const Eigen::Index n = a.cols();
  const Eigen::MatrixXd q = qr.householderQ();
  return q.rightCols(n - qr.rank());
}

int NumericalRank(const RealMatrix& a) {
  return static_cast<int>(RowSpaceQr(a).rank());
}

}  // namespace soav
