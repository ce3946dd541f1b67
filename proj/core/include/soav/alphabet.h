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

#ifndef SOAV_ALPHABET_H_
#define SOAV_ALPHABET_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace soav {

// A finite set of real symbols r_1 < ... < r_L together with the prior
// probability of each symbol. Immutable once constructed.
class Alphabet {
 public:
  // Validates and sorts the symbols (probabilities follow their symbol).
  // Throws InputError on empty or mismatched lists, duplicate or non-finite
  // symbols, non-positive probabilities, or probabilities whose sum differs
  // from 1 by more than 1e-9. Accepted probabilities are renormalized so
  // that they sum to 1 as closely as floating point allows.
  static Alphabet Create(std::vector<double> symbols,
                         std::vector<double> probs);

  // Parses "symbol:prob,symbol:prob,..." e.g. "-1:0.25,0:0.5,1:0.25".
  // Decimal point only; independent of the global locale.
  static Alphabet Parse(std::string_view text);

  std::span<const double> symbols() const { return symbols_; }
  std::span<const double> probs() const { return probs_; }
  int size() const { return static_cast<int>(symbols_.size()); }

  // Sum_i p_i r_i.
  double Mean() const;

  bool Contains(double value) const;

  // Inverse of Parse, printed with round-trip precision.
  std::string ToString() const;

 private:
  Alphabet(std::vector<double> symbols, std::vector<double> probs)
      : symbols_(std::move(symbols)), probs_(std::move(probs)) {}

  std::vector<double> symbols_;
  std::vector<double> probs_;
};

// The sum of weighted absolute values L(t) = sum_i p_i |t - r_i| stored as
// its L + 1 affine pieces. Piece i (0 <= i <= L) is slope_i * t + intercept_i
// and is active on (r_i, r_{i+1}] with r_0 = -inf and r_{L+1} = +inf.
class PiecewiseLinearObjective {
 public:
  static PiecewiseLinearObjective Build(const Alphabet& alphabet);

  std::span<const double> breakpoints() const { return breakpoints_; }
  std::span<const double> slopes() const { return slopes_; }
  std::span<const double> intercepts() const { return intercepts_; }
  double mean() const { return mean_; }
  int num_pieces() const { return static_cast<int>(slopes_.size()); }

  // Index of the piece active at t.
  int SegmentOf(double t) const;

  // L(t) from the active segment.
  double Evaluate(double t) const;

  // L(t) as the maximum over all pieces. Agrees with Evaluate up to rounding.
  double EvaluateMaxForm(double t) const;

  // Convex conjugate L*(g) = sup_t g t - L(t). Finite only for |g| <= 1,
  // where the supremum is attained at a symbol; +inf otherwise.
  double Conjugate(double g) const;

  // F(z) = sum_n L(z_n).
  double EvaluateSum(const Eigen::Ref<const Eigen::VectorXd>& z) const;

  // argmin_t lambda * L(t) + (t - v)^2 / 2. Throws InputError unless
  // lambda > 0.
  double Prox(double lambda, double v) const;

  // Coordinatewise Prox.
  Eigen::VectorXd Prox(double lambda,
                       const Eigen::Ref<const Eigen::VectorXd>& v) const;

 private:
  PiecewiseLinearObjective() = default;

  std::vector<double> breakpoints_;
  std::vector<double> slopes_;
  std::vector<double> intercepts_;
  double mean_ = 0.0;
};

// Maps each entry of z to its nearest symbol. Entries equidistant from two
// symbols go to the smaller one.
Eigen::VectorXd RoundToAlphabet(const Alphabet& alphabet,
                                const Eigen::Ref<const Eigen::VectorXd>& z);

double RoundToAlphabet(const Alphabet& alphabet, double t);

// Sorted, deduplicated {r_i - r_j}. Symmetric about zero and contains zero.
std::vector<double> DifferenceSet(const Alphabet& alphabet);

}  // namespace soav

#endif  // SOAV_ALPHABET_H_
