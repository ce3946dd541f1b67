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

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "oracles.h"
#include "soav/errors.h"

namespace soav {
namespace {

using Complex = std::complex<double>;

TEST(GaussianMatrixTest, BitIdenticalForSameSeed) {
  const RealMatrix a = GaussianMatrix(20, 30, 5);
  const RealMatrix b = GaussianMatrix(20, 30, 5);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, GaussianMatrix(20, 30, 6));
}

TEST(GaussianMatrixTest, StandardNormalEntries) {
  const RealMatrix a = GaussianMatrix(200, 300, 9);
  const double mean = a.mean();
  const double var = (a.array() - mean).square().mean();
  EXPECT_NEAR(mean, 0.0, 0.01);
  EXPECT_NEAR(var, 1.0, 0.02);
}

TEST(DftMatrixTest, SmallCases) {
  const ComplexMatrix w1 = DftMatrix(1);
  EXPECT_EQ(w1(0, 0), Complex(1, 0));
  const ComplexMatrix w2 = DftMatrix(2);
  EXPECT_NEAR(std::abs(w2(1, 1) - Complex(-1, 0)), 0.0, 1e-15);
  const ComplexMatrix w4 = DftMatrix(4);
  EXPECT_NEAR(std::abs(w4(1, 1) - Complex(0, -1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(w4(3, 3) - Complex(0, -1)), 0.0, 1e-15);
  EXPECT_THROW(DftMatrix(0), InputError);
}

TEST(DftMatrixTest, MatchesDefinitionAndIsScaledUnitary) {
  for (int k = 1; k <= 64; ++k) {
    const ComplexMatrix w = DftMatrix(k);
    for (int r = 0; r < k; ++r) {
      for (int c = 0; c < k; ++c) {
        const double angle = -2.0 * std::numbers::pi * r * c / k;
        ASSERT_NEAR(std::abs(w(r, c) - std::polar(1.0, angle)), 0.0, 1e-12)
            << "k=" << k;
      }
    }
    const ComplexMatrix gram = w.adjoint() * w;
    EXPECT_NEAR((gram - k * ComplexMatrix::Identity(k, k)).cwiseAbs().maxCoeff(),
                0.0, 1e-10 * k)
        << "k=" << k;
    EXPECT_TRUE(w.isApprox(w.transpose(), 1e-14));
  }
}

TEST(DftMatrixTest, Size37) {
  const ComplexMatrix w = DftMatrix(37);
  const ComplexMatrix gram = w.adjoint() * w;
  EXPECT_NEAR((gram - 37.0 * ComplexMatrix::Identity(37, 37)).cwiseAbs().maxCoeff(),
              0.0, 1e-10);
  // Row 0 and column 0 are exactly one.
  for (int i = 0; i < 37; ++i) {
    EXPECT_EQ(w(0, i), Complex(1, 0));
    EXPECT_EQ(w(i, 0), Complex(1, 0));
  }
}

TEST(KronTest, MatchesVecIdentity) {
  // vec(B X A^T) = (A kron B) vec(X).
  std::mt19937_64 gen(3);
  std::normal_distribution<double> normal;
  const auto random = [&](int r, int c) {
    Eigen::MatrixXd m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = normal(gen);
    return m;
  };
  const Eigen::MatrixXd a = random(3, 4);
  const Eigen::MatrixXd b = random(5, 2);
  const Eigen::MatrixXd x = random(2, 4);
  const Eigen::VectorXd lhs = Vec(b * x * a.transpose());
  const Eigen::VectorXd rhs = Kron(a, b) * Vec(x);
  EXPECT_LT((lhs - rhs).norm(), 1e-12);

  const Eigen::MatrixXd k = Kron(a, b);
  for (Eigen::Index r = 0; r < k.rows(); ++r) {
    EXPECT_EQ(KronRow(a, b, r), k.row(r));
  }
}

TEST(KronTest, ComplexImageSpectrum) {
  const ComplexMatrix wr = DftMatrix(4);
  const ComplexMatrix wc = DftMatrix(3);
  Eigen::MatrixXcd x(4, 3);
  x << 1, 0, 1, 0, 1, 1, 1, 1, 0, 0, 0, 1;
  // W_R X W_C = (W_C^T kron W_R) vec(X), and W_C is symmetric.
  const Eigen::VectorXcd lhs = Vec(Eigen::MatrixXcd(wr * x * wc));
  const Eigen::VectorXcd rhs = Kron(wc, wr) * Vec(x);
  EXPECT_LT((lhs - rhs).norm(), 1e-12);
}

TEST(VecTest, ColumnMajorRoundTrip) {
  Eigen::MatrixXd m(2, 3);
  m << 1, 2, 3, 4, 5, 6;
  const Eigen::VectorXd v = Vec(m);
  EXPECT_EQ(v, (Eigen::VectorXd(6) << 1, 4, 2, 5, 3, 6).finished());
  EXPECT_EQ(Unvec(v, 2, 3), m);
  EXPECT_THROW(Unvec(v, 4, 2), InputError);
}

TEST(SampleRowIndicesTest, SortedDistinctDeterministic) {
  const std::vector<int> idx = SampleRowIndices(100, 40, 8);
  ASSERT_EQ(idx.size(), 40u);
  EXPECT_TRUE(std::is_sorted(idx.begin(), idx.end()));
  EXPECT_TRUE(std::adjacent_find(idx.begin(), idx.end()) == idx.end());
  EXPECT_GE(idx.front(), 0);
  EXPECT_LT(idx.back(), 100);
  EXPECT_EQ(idx, SampleRowIndices(100, 40, 8));
  EXPECT_NE(idx, SampleRowIndices(100, 40, 9));
  const std::vector<int> all = SampleRowIndices(10, 10, 1);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(all[i], i);
  EXPECT_THROW(SampleRowIndices(10, 0, 1), InputError);
  EXPECT_THROW(SampleRowIndices(10, 11, 1), InputError);
}

TEST(SampleRowIndicesTest, RoughlyUniform) {
  std::vector<int> hits(20, 0);
  for (uint64_t seed = 0; seed < 2000; ++seed) {
    for (int i : SampleRowIndices(20, 5, seed)) ++hits[i];
  }
  for (int h : hits) EXPECT_NEAR(h, 500, 80);
}

TEST(SubsampleRowsTest, SelectsListedRows) {
  Eigen::MatrixXd m(5, 2);
  m << 0, 0, 1, 1, 2, 2, 3, 3, 4, 4;
  const auto sub = SubsampleRows(m, 3, 4);
  ASSERT_EQ(sub.matrix.rows(), 3);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(sub.matrix(i, 0), sub.rows[i]);
}

TEST(RealifyTest, StacksRealAndImaginary) {
  Eigen::MatrixXcd phi(1, 2);
  phi << Complex(1, 2), Complex(3, -1);
  Eigen::VectorXcd y(1);
  y << Complex(5, 6);
  const RealSystem sys = Realify(phi, y);
  EXPECT_EQ(sys.matrix, (Eigen::MatrixXd(2, 2) << 1, 3, 2, -1).finished());
  EXPECT_EQ(sys.rhs, Eigen::Vector2d(5, 6));
  // A real z solves both forms simultaneously.
  const Eigen::Vector2d z(0.5, -2.0);
  const Eigen::VectorXcd complex_lhs = phi * z.cast<Complex>();
  const Eigen::VectorXd real_lhs = sys.matrix * z;
  EXPECT_NEAR(real_lhs[0], complex_lhs[0].real(), 1e-15);
  EXPECT_NEAR(real_lhs[1], complex_lhs[0].imag(), 1e-15);
}

TEST(AffineProjectorTest, IdempotentAndFeasible) {
  for (int m : {1, 5, 15, 25}) {
    const RealMatrix a = GaussianMatrix(m, 30, 100 + m);
    const Eigen::VectorXd y = a * Eigen::VectorXd::LinSpaced(30, -1, 1);
    const AffineProjector proj = AffineProjector::Create(a, y);
    EXPECT_EQ(proj.rank(), m);
    std::mt19937_64 gen(m);
    std::normal_distribution<double> normal;
    for (int t = 0; t < 10; ++t) {
      Eigen::VectorXd z(30);
      for (auto& v : z) v = 3.0 * normal(gen);
      const Eigen::VectorXd p = proj.Project(z);
      EXPECT_LT((a * p - y).norm(), 1e-10 * (1 + y.norm()));
      EXPECT_LT((proj.Project(p) - p).norm(), 1e-10);
      // z - P(z) is orthogonal to the kernel.
      const Eigen::MatrixXd k = testing::SvdKernel(a);
      EXPECT_LT((k.transpose() * (z - p)).norm(), 1e-9 * (1 + z.norm()));
    }
    // Minimum-norm solution matches the pseudo-inverse.
    const Eigen::VectorXd pinv =
        a.transpose() * (a * a.transpose()).ldlt().solve(y);
    EXPECT_LT((proj.min_norm_solution() - pinv).norm(), 1e-9);
  }
}

TEST(AffineProjectorTest, RankDeficientRealifiedDft) {
  const ComplexMatrix w = DftMatrix(8);
  Eigen::VectorXd x(8);
  x << 1, 0, 0, 1, 1, 0, 1, 0;
  const Eigen::VectorXcd y = w * x.cast<Complex>();
  const RealSystem sys = Realify(w, y);
  EXPECT_EQ(NumericalRank(sys.matrix), 8);
  const AffineProjector proj = AffineProjector::Create(sys.matrix, sys.rhs);
  EXPECT_EQ(proj.rank(), 8);
  EXPECT_LT((proj.Project(Eigen::VectorXd::Zero(8)) - x).norm(), 1e-10);

  // Rows 0 and 4 are real and rows 1 and 7 are conjugates, so the eight
  // realified rows span only Re w_0, Re w_1, Re w_4 and Im w_1.
  const std::vector<int> rows = {0, 1, 4, 7};
  const ComplexMatrix sub = SelectRows(w, rows);
  const RealSystem small =
      Realify(sub, Eigen::VectorXcd(sub * x.cast<Complex>()));
  const AffineProjector p2 = AffineProjector::Create(small.matrix, small.rhs);
  EXPECT_EQ(p2.rank(), 4);
  EXPECT_EQ(KernelBasis(small.matrix).cols(), 4);
}

TEST(AffineProjectorTest, InconsistentSystemThrows) {
  RealMatrix a(2, 2);
  a << 1, 1, 2, 2;
  EXPECT_THROW(AffineProjector::Create(a, Eigen::Vector2d(1, 3)),
               InfeasibleSystem);
  EXPECT_NO_THROW(AffineProjector::Create(a, Eigen::Vector2d(1, 2)));
}

TEST(KernelBasisTest, OrthonormalAndAnnihilated) {
  const RealMatrix a = GaussianMatrix(6, 10, 77);
  const Eigen::MatrixXd k = KernelBasis(a);
  ASSERT_EQ(k.cols(), 4);
  EXPECT_LT((a * k).norm(), 1e-10);
  EXPECT_LT((k.transpose() * k - Eigen::MatrixXd::Identity(4, 4)).norm(), 1e-12);
}

}  // namespace
}  // namespace soav
