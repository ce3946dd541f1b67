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

#ifndef SOAV_MEASUREMENT_H_
#define SOAV_MEASUREMENT_H_

#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace soav {

using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;

// Relative pivot threshold below which rows of a measurement matrix are
// treated as linearly dependent. Shared by the projector and kernel basis so
// both agree on the numerical rank.
inline constexpr double kRankThreshold = 1e-10;

// m x n matrix of i.i.d. standard normals drawn in row-major order from
// Rng(seed). Bit-identical for identical arguments.
RealMatrix GaussianMatrix(int m, int n, uint64_t seed);

// k x k DFT matrix W[r][c] = exp(-2 pi j r c / k). The exponent is reduced
// mod k before evaluating the complex exponential.
ComplexMatrix DftMatrix(int k);

// Kronecker product: block (i, j) of the result is a(i, j) * b.
template <typename Derived1, typename Derived2>
Eigen::Matrix<typename Derived1::Scalar, Eigen::Dynamic, Eigen::Dynamic> Kron(
    const Eigen::MatrixBase<Derived1>& a, const Eigen::MatrixBase<Derived2>& b) {
  using Scalar = typename Derived1::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(
      a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
          a(i, j) * b.template cast<Scalar>();
    }
  }
  return out;
}

// Row `row` of Kron(a, b), without materializing the product.
template <typename Derived1, typename Derived2>
Eigen::Matrix<typename Derived1::Scalar, 1, Eigen::Dynamic> KronRow(
    const Eigen::MatrixBase<Derived1>& a, const Eigen::MatrixBase<Derived2>& b,
    Eigen::Index row) {
  using Scalar = typename Derived1::Scalar;
  const Eigen::Index a_row = row / b.rows();
  const Eigen::Index b_row = row % b.rows();
  Eigen::Matrix<Scalar, 1, Eigen::Dynamic> out(a.cols() * b.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    out.segment(j * b.cols(), b.cols()) =
        a(a_row, j) * b.row(b_row).template cast<Scalar>();
  }
  return out;
}

// Column-major stacking of a matrix into a vector.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> Vec(
    const Eigen::MatrixBase<Derived>& x) {
  Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> dense =
      x;
  return Eigen::Map<const Eigen::Matrix<typename Derived::Scalar,
                                        Eigen::Dynamic, 1>>(dense.data(),
                                                            dense.size());
}

// Inverse of Vec. Throws InputError if v.size() != rows * cols.
Eigen::MatrixXd Unvec(const Eigen::Ref<const Eigen::VectorXd>& v, int rows,
                      int cols);
Eigen::MatrixXcd Unvec(const Eigen::Ref<const Eigen::VectorXcd>& v, int rows,
                       int cols);

// `keep` distinct indices in [0, rows) drawn uniformly without replacement
// with a seeded partial Fisher-Yates shuffle, returned in ascending order.
// Throws InputError unless 1 <= keep <= rows.
std::vector<int> SampleRowIndices(int rows, int keep, uint64_t seed);

template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
SelectRows(const Eigen::MatrixBase<Derived>& m, const std::vector<int>& rows) {
  Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(
      static_cast<Eigen::Index>(rows.size()), m.cols());
  for (size_t i = 0; i < rows.size(); ++i) out.row(i) = m.row(rows[i]);
  return out;
}

template <typename Scalar>
struct RowSubsample {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> matrix;
  std::vector<int> rows;
};

template <typename Derived>
RowSubsample<typename Derived::Scalar> SubsampleRows(
    const Eigen::MatrixBase<Derived>& m, int keep, uint64_t seed) {
  RowSubsample<typename Derived::Scalar> out;
  out.rows = SampleRowIndices(static_cast<int>(m.rows()), keep, seed);
  out.matrix = SelectRows(m, out.rows);
  return out;
}

// A complex system Phi z = y with a real unknown z, rewritten as the
// equivalent real system [Re Phi; Im Phi] z = [Re y; Im y].
struct RealSystem {
  RealMatrix matrix;
  Eigen::VectorXd rhs;
};

RealSystem Realify(const ComplexMatrix& phi, const Eigen::VectorXcd& y);

// Euclidean projection onto {z : A z = y}.
//
// Built from a column-pivoted QR of A^T, which orders the rows of A by
// independence. Rows whose pivot falls below kRankThreshold times the largest
// pivot are dropped as numerically dependent, so rank-deficient systems such
// as realified DFT rows (conjugate-symmetric pairs) are handled. Construction
// throws InfeasibleSystem when the retained rows do not reproduce y within
// 1e-8 * (1 + ||y||).
class AffineProjector {
 public:
  static AffineProjector Create(const RealMatrix& a, const Eigen::VectorXd& y);

  Eigen::VectorXd Project(const Eigen::Ref<const Eigen::VectorXd>& z) const;

  // Feasible point of minimum Euclidean norm; equals Project(0).
  const Eigen::VectorXd& min_norm_solution() const { return offset_; }

  int rank() const { return rank_; }
  int rows() const { return rows_; }
  int cols() const { return static_cast<int>(basis_.rows()); }

 private:
  AffineProjector() = default;

  // Orthonormal basis of either the row space of A or its kernel, whichever
  // has fewer columns.
  Eigen::MatrixXd basis_;
  bool basis_is_kernel_ = false;
  Eigen::VectorXd offset_;
  int rows_ = 0;
  int rank_ = 0;
};

// Orthonormal basis of ker(A) (n x (n - rank)), using kRankThreshold.
Eigen::MatrixXd KernelBasis(const RealMatrix& a);

int NumericalRank(const RealMatrix& a);

}  // namespace soav

#endif  // SOAV_MEASUREMENT_H_
