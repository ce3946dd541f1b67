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

#include "soav/alphabet.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "oracles.h"
#include "soav/errors.h"

namespace soav {
namespace {

using ::soav::testing::DirectL;
using ::soav::testing::DrawAlphabet;
using ::soav::testing::GoldenSectionArgmin;

TEST(AlphabetTest, AcceptsFairBinary) {
  const Alphabet a = Alphabet::Create({0.0, 1.0}, {0.5, 0.5});
  EXPECT_EQ(a.size(), 2);
  EXPECT_DOUBLE_EQ(a.probs()[0], 0.5);
}

TEST(AlphabetTest, AcceptsSingleSymbol) {
  const Alphabet a = Alphabet::Create({0.0}, {1.0});
  EXPECT_EQ(a.size(), 1);
  EXPECT_EQ(a.Mean(), 0.0);
}

TEST(AlphabetTest, SortsSymbolsWithProbabilities) {
  const Alphabet a = Alphabet::Create({1.0, -1.0, 0.0}, {0.2, 0.3, 0.5});
  EXPECT_EQ(std::vector<double>(a.symbols().begin(), a.symbols().end()),
            (std::vector<double>{-1.0, 0.0, 1.0}));
  EXPECT_DOUBLE_EQ(a.probs()[0], 0.3);
  EXPECT_DOUBLE_EQ(a.probs()[1], 0.5);
  EXPECT_DOUBLE_EQ(a.probs()[2], 0.2);
}

TEST(AlphabetTest, RejectsBadInput) {
  EXPECT_THROW(Alphabet::Create({0.0, 1.0}, {0.5, 0.6}), InputError);
  EXPECT_THROW(Alphabet::Create({0.0, 0.0}, {0.5, 0.5}), InputError);
  EXPECT_THROW(Alphabet::Create({0.0, 1.0}, {0.0, 1.0}), InputError);
  EXPECT_THROW(Alphabet::Create({0.0, 1.0}, {-0.5, 1.5}), InputError);
  EXPECT_THROW(Alphabet::Create({}, {}), InputError);
  EXPECT_THROW(Alphabet::Create({0.0, 1.0}, {1.0}), InputError);
}

TEST(AlphabetTest, RenormalizesWithinTolerance) {
  const Alphabet a = Alphabet::Create({0.0, 1.0, 2.0},
                                      {0.3333333333, 0.3333333333, 0.3333333334});
  double total = 0.0;
  for (double p : a.probs()) total += p;
  EXPECT_NEAR(total, 1.0, 1e-15);
  EXPECT_THROW(Alphabet::Create({0.0, 1.0}, {0.5, 0.5 + 2e-9}), InputError);
}

TEST(AlphabetTest, ParsesSpec) {
  const Alphabet a = Alphabet::Parse("-1:0.25,0:0.5,1:0.25");
  EXPECT_EQ(a.size(), 3);
  EXPECT_EQ(a.symbols()[0], -1.0);
  EXPECT_DOUBLE_EQ(a.probs()[1], 0.5);
  EXPECT_EQ(Alphabet::Parse(a.ToString()).ToString(), a.ToString());
  EXPECT_THROW(Alphabet::Parse("0:0.5;1:0.5"), InputError);
  EXPECT_THROW(Alphabet::Parse("0:0.5,1:0,5"), InputError);
  EXPECT_THROW(Alphabet::Parse("0:0.5,"), InputError);
  EXPECT_THROW(Alphabet::Parse("a:1"), InputError);
}

TEST(AlphabetTest, Mean) {
  EXPECT_DOUBLE_EQ(Alphabet::Create({-1, 0, 1}, {0.25, 0.5, 0.25}).Mean(), 0.0);
  EXPECT_NEAR(Alphabet::Create({0, 1}, {0.6, 0.4}).Mean(), 0.4, 1e-15);
  EXPECT_EQ(Alphabet::Create({0}, {1}).Mean(), 0.0);
}

void ExpectPieces(const PiecewiseLinearObjective& obj,
                  const std::vector<double>& slopes,
                  const std::vector<double>& intercepts) {
  ASSERT_EQ(obj.num_pieces(), static_cast<int>(slopes.size()));
  for (size_t i = 0; i < slopes.size(); ++i) {
    EXPECT_NEAR(obj.slopes()[i], slopes[i], 1e-15) << "piece " << i;
    EXPECT_NEAR(obj.intercepts()[i], intercepts[i], 1e-15) << "piece " << i;
  }
}

TEST(ObjectiveTest, TernaryPieces) {
  ExpectPieces(PiecewiseLinearObjective::Build(
                   Alphabet::Create({-1, 0, 1}, {0.25, 0.5, 0.25})),
               {-1, -0.5, 0.5, 1}, {0, 0.5, 0.5, 0});
}

TEST(ObjectiveTest, BinaryPieces) {
  ExpectPieces(
      PiecewiseLinearObjective::Build(Alphabet::Create({0, 1}, {0.5, 0.5})),
      {-1, 0, 1}, {0.5, 0.5, -0.5});
}

TEST(ObjectiveTest, SingleSymbolIsAbsoluteValue) {
  const auto obj =
      PiecewiseLinearObjective::Build(Alphabet::Create({0}, {1}));
  ExpectPieces(obj, {-1, 1}, {0, 0});
  EXPECT_EQ(obj.Evaluate(3.0), 3.0);
  EXPECT_EQ(obj.Evaluate(-2.5), 2.5);
}

TEST(ObjectiveTest, SentinelPiecesAreExact) {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto ra = DrawAlphabet(gen, 6);
    const auto obj =
        PiecewiseLinearObjective::Build(Alphabet::Create(ra.symbols, ra.probs));
    EXPECT_EQ(obj.slopes().front(), -1.0);
    EXPECT_EQ(obj.slopes().back(), 1.0);
    EXPECT_EQ(obj.intercepts().front(), obj.mean());
    EXPECT_EQ(obj.intercepts().back(), -obj.mean());
  }
}

TEST(ObjectiveTest, EvaluateExamples) {
  const auto obj =
      PiecewiseLinearObjective::Build(Alphabet::Create({0, 1}, {0.5, 0.5}));
  EXPECT_DOUBLE_EQ(obj.Evaluate(0.5), 0.5);
  EXPECT_DOUBLE_EQ(obj.Evaluate(-2.0), 2.5);
  EXPECT_EQ(obj.SegmentOf(-2.0), 0);
  EXPECT_EQ(obj.SegmentOf(0.0), 0);  // (-inf, r_1]
  EXPECT_EQ(obj.SegmentOf(0.5), 1);
  EXPECT_EQ(obj.SegmentOf(1.0), 1);  // (r_1, r_2]
  EXPECT_EQ(obj.SegmentOf(1.5), 2);
}

TEST(ObjectiveTest, EvaluateSumExamples) {
  const auto obj =
      PiecewiseLinearObjective::Build(Alphabet::Create({0, 1}, {0.5, 0.5}));
  EXPECT_DOUBLE_EQ(obj.EvaluateSum(Eigen::Vector3d(0, 1, 1)), 1.5);
  Eigen::VectorXd binary(7);
  binary << 0, 1, 1, 0, 1, 0, 0;
  EXPECT_DOUBLE_EQ(obj.EvaluateSum(binary), 0.5 * 7);
  const auto abs_obj =
      PiecewiseLinearObjective::Build(Alphabet::Create({0}, {1}));
  EXPECT_EQ(abs_obj.EvaluateSum(Eigen::VectorXd::Zero(4)), 0.0);
}

// Segment formula, max form and the defining sum agree everywhere.
TEST(ObjectivePropertyTest, MatchesDefinition) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> point(-8.0, 8.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto ra = DrawAlphabet(gen, 6);
    const auto obj =
        PiecewiseLinearObjective::Build(Alphabet::Create(ra.symbols, ra.probs));
    const double t = point(gen);
    const double expected = DirectL(ra.symbols, ra.probs, t);
    EXPECT_NEAR(obj.Evaluate(t), expected, 1e-12);
    EXPECT_NEAR(obj.EvaluateMaxForm(t), expected, 1e-12);
  }
}

TEST(ObjectivePropertyTest, ContinuousAndConvex) {
  std::mt19937_64 gen(13);
  std::uniform_real_distribution<double> point(-8.0, 8.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    const auto ra = DrawAlphabet(gen, 6);
    const auto obj =
        PiecewiseLinearObjective::Build(Alphabet::Create(ra.symbols, ra.probs));
    for (int i = 1; i < obj.num_pieces(); ++i) {
      const double r = obj.breakpoints()[i - 1];
      EXPECT_NEAR(obj.slopes()[i - 1] * r + obj.intercepts()[i - 1],
                  obj.slopes()[i] * r + obj.intercepts()[i], 1e-12);
      EXPECT_GT(obj.slopes()[i], obj.slopes()[i - 1]);
    }
    double t1 = point(gen);
    double t2 = point(gen);
    if (t1 > t2) std::swap(t1, t2);
    const double theta = unit(gen);
    EXPECT_LE(obj.Evaluate(theta * t1 + (1 - theta) * t2),
              theta * obj.Evaluate(t1) + (1 - theta) * obj.Evaluate(t2) + 1e-12);
  }
}

TEST(ProxTest, Examples) {
  const auto abs_obj =
      PiecewiseLinearObjective::Build(Alphabet::Create({0}, {1}));
  EXPECT_DOUBLE_EQ(abs_obj.Prox(1.0, 2.0), 1.0);
  EXPECT_DOUBLE_EQ(abs_obj.Prox(1.0, 0.5), 0.0);
  EXPECT_DOUBLE_EQ(abs_obj.Prox(1.0, -3.0), -2.0);

  const auto binary =
      PiecewiseLinearObjective::Build(Alphabet::Create({0, 1}, {0.5, 0.5}));
  EXPECT_DOUBLE_EQ(binary.Prox(0.5, 1.2), 1.0);
  EXPECT_DOUBLE_EQ(binary.Prox(0.5, 0.7), 0.7);
  EXPECT_DOUBLE_EQ(binary.Prox(0.5, 1.5), 1.0);
  EXPECT_DOUBLE_EQ(binary.Prox(0.5, 1.75), 1.25);
}

TEST(ProxTest, RejectsNonPositiveStep) {
  const auto obj =
      PiecewiseLinearObjective::Build(Alphabet::Create({0}, {1}));
  EXPECT_THROW(obj.Prox(0.0, 1.0), InputError);
  EXPECT_THROW(obj.Prox(-1.0, 1.0), InputError);
}

TEST(ProxPropertyTest, MatchesGoldenSection) {
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> point(-8.0, 8.0);
  std::uniform_real_distribution<double> log_lambda(-2.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    const auto ra = DrawAlphabet(gen, 6);
    const auto obj =
        PiecewiseLinearObjective::Build(Alphabet::Create(ra.symbols, ra.probs));
    const double lambda = std::pow(10.0, log_lambda(gen));
    const double v = point(gen);
    const auto f = [&](double t) {
      return lambda * DirectL(ra.symbols, ra.probs, t) + 0.5 * (t - v) * (t - v);
    };
    // |dL| <= 1 keeps the minimizer within lambda of v.
    const double reference =
        GoldenSectionArgmin(f, v - lambda - 1.0, v + lambda + 1.0);
    EXPECT_NEAR(obj.Prox(lambda, v), reference, 1e-6);
  }
}

TEST(ProxPropertyTest, MonotoneAndNonexpansive) {
  std::mt19937_64 gen(19);
  std::uniform_real_distribution<double> point(-8.0, 8.0);
  for (int trial = 0; trial < 500; ++trial) {
    const auto ra = DrawAlphabet(gen, 6);
    const auto obj =
        PiecewiseLinearObjective::Build(Alphabet::Create(ra.symbols, ra.probs));
    double v1 = point(gen);
    double v2 = point(gen);
    if (v1 > v2) std::swap(v1, v2);
    const double p1 = obj.Prox(0.7, v1);
    const double p2 = obj.Prox(0.7, v2);
    EXPECT_LE(p1, p2);
    EXPECT_LE(std::abs(p2 - p1), std::abs(v2 - v1) + 1e-15);
  }
}

TEST(ConjugateTest, MatchesSupremumOverFineGrid) {
  std::mt19937_64 gen(37);
  std::uniform_real_distribution<double> slope(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto ra = DrawAlphabet(gen, 5);
    const auto obj =
        PiecewiseLinearObjective::Build(Alphabet::Create(ra.symbols, ra.probs));
    const double g = slope(gen);
    double sup = -1e300;
    for (int k = -60000; k <= 60000; ++k) {
      const double t = k * 1e-4;
      sup = std::max(sup, g * t - DirectL(ra.symbols, ra.probs, t));
    }
    // Symbols are on the 1e-3 grid, so the sampled supremum is exact.
    EXPECT_NEAR(obj.Conjugate(g), sup, 1e-9);
  }
  const auto abs_obj = PiecewiseLinearObjective::Build(Alphabet::Create({0}, {1}));
  EXPECT_EQ(abs_obj.Conjugate(0.3), 0.0);
  EXPECT_EQ(abs_obj.Conjugate(1.0), 0.0);
  EXPECT_TRUE(std::isinf(abs_obj.Conjugate(1.5)));
}

TEST(RoundTest, NearestSymbolWithTiesDown) {
  const Alphabet a = Alphabet::Create({-1, 0, 1}, {0.25, 0.5, 0.25});
  EXPECT_EQ(RoundToAlphabet(a, 0.4), 0.0);
  EXPECT_EQ(RoundToAlphabet(a, 0.5), 0.0);
  EXPECT_EQ(RoundToAlphabet(a, -0.5), -1.0);
  EXPECT_EQ(RoundToAlphabet(a, 0.51), 1.0);
  EXPECT_EQ(RoundToAlphabet(a, 3.7), 1.0);
  EXPECT_EQ(RoundToAlphabet(a, -9.0), -1.0);
}

TEST(RoundTest, IdempotentOnAlphabetVectors) {
  std::mt19937_64 gen(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto ra = DrawAlphabet(gen, 5);
    const Alphabet a = Alphabet::Create(ra.symbols, ra.probs);
    std::uniform_int_distribution<int> pick(0, a.size() - 1);
    Eigen::VectorXd x(20);
    for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = a.symbols()[pick(gen)];
    EXPECT_EQ(RoundToAlphabet(a, x), x);
    EXPECT_EQ(RoundToAlphabet(a, RoundToAlphabet(a, x)), x);
  }
}

TEST(DifferenceSetTest, Examples) {
  EXPECT_EQ(DifferenceSet(Alphabet::Create({0, 1}, {0.5, 0.5})),
            (std::vector<double>{-1, 0, 1}));
  EXPECT_EQ(DifferenceSet(Alphabet::Create({-1, 0, 1}, {0.25, 0.5, 0.25})),
            (std::vector<double>{-2, -1, 0, 1, 2}));
  EXPECT_EQ(DifferenceSet(Alphabet::Create({5}, {1})), (std::vector<double>{0}));
}

TEST(DifferenceSetTest, SymmetricSortedAndContainsZero) {
  std::mt19937_64 gen(29);
  for (int trial = 0; trial < 100; ++trial) {
    const auto ra = DrawAlphabet(gen, 6);
    const auto d = DifferenceSet(Alphabet::Create(ra.symbols, ra.probs));
    EXPECT_TRUE(std::is_sorted(d.begin(), d.end()));
    EXPECT_TRUE(std::adjacent_find(d.begin(), d.end()) == d.end());
    EXPECT_TRUE(std::binary_search(d.begin(), d.end(), 0.0));
    for (size_t i = 0; i < d.size(); ++i) EXPECT_EQ(d[i], -d[d.size() - 1 - i]);
    // Every pairwise difference is represented.
    for (double ri : ra.symbols) {
      for (double rj : ra.symbols) {
        const double diff = ri - rj;
        EXPECT_TRUE(std::any_of(d.begin(), d.end(), [&](double v) {
          return std::abs(v - diff) < 1e-11;
        }));
      }
    }
  }
}

}  // namespace
}  // namespace soav
