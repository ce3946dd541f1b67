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

#include "soav/analysis.h"

#include <cmath>
#include <string>

#include "soav/errors.h"
#include "soav/random.h"
#include "soav/solvers.h"

namespace soav {
namespace {

constexpr double kViolationSlack = 1e-12;

// First x in X^N (odometer order) with F(x) - F(x - v) >= -slack, using the
// separable gains g_n(s) = L(s) - L(s - v_n).
std::optional<NspCounterexample> FirstViolation(
    const Alphabet& alphabet, const PiecewiseLinearObjective& objective,
    const Eigen::VectorXd& v) {
  const int n = static_cast<int>(v.size());
  const auto symbols = alphabet.symbols();
  const int num_symbols = alphabet.size();

  Eigen::MatrixXd gain(n, num_symbols);
  double best_total = 0.0;
  double scale = 0.0;
  for (int c = 0; c < n; ++c) {
    double best = -INFINITY;
    for (int s = 0; s < num_symbols; ++s) {
      const double base = objective.Evaluate(symbols[s]);
      gain(c, s) = base - objective.Evaluate(symbols[s] - v[c]);
      best = std::max(best, gain(c, s));
      scale += std::abs(base);
    }
    best_total += best;
  }
  const double slack = kViolationSlack * (1.0 + scale);
  if (best_total < -slack) return std::nullopt;

  std::vector<int> digits(n, 0);
  double total = gain.col(0).sum();
  while (true) {
    if (total >= -slack) {
      NspCounterexample out;
      out.kernel_vector = v;
      out.signal.resize(n);
      for (int c = 0; c < n; ++c) out.signal[c] = symbols[digits[c]];
      out.margin = objective.EvaluateSum(out.signal - v) -
                   objective.EvaluateSum(out.signal);
      if (out.margin <= slack) return out;
    }
    int k = 0;
    while (k < n && digits[k] == num_symbols - 1) {
      total += gain(k, 0) - gain(k, digits[k]);
      digits[k] = 0;
      ++k;
    }
    if (k == n) return std::nullopt;
    total += gain(k, digits[k] + 1) - gain(k, digits[k]);
    ++digits[k];
  }
}

}  // namespace

std::vector<Eigen::VectorXd> DifferenceLatticeKernel(const Alphabet& alphabet,
                                                     const RealMatrix& a,
                                                     double tol, size_t limit) {
  const std::vector<double> diffs = DifferenceSet(alphabet);
  const int n = static_cast<int>(a.cols());
  const int base = static_cast<int>(diffs.size());
  if (std::pow(static_cast<double>(base), n) > kEnumerationBudget) {
    throw BudgetExceeded("difference lattice of size " + std::to_string(base) +
                         "^" + std::to_string(n) + " exceeds budget");
  }
  std::vector<Eigen::VectorXd> hits;
  if (base == 1 || limit == 0) return hits;

  std::vector<int> digits(n, 0);
  Eigen::VectorXd v = Eigen::VectorXd::Constant(n, diffs[0]);
  Eigen::VectorXd image = a * v;
  while (true) {
    // Cheap screen on the running image, exact recheck on candidates.
    const double v_norm = v.norm();
    if (v_norm > 0.0 && image.norm() <= 10.0 * tol * v_norm + 1e-9 * v_norm &&
        (a * v).norm() <= tol * v_norm) {
      hits.push_back(v);
      if (hits.size() >= limit) break;
    }
    int k = 0;
    while (k < n && digits[k] == base - 1) {
      image += (diffs[0] - v[k]) * a.col(k);
      v[k] = diffs[0];
      digits[k] = 0;
      ++k;
    }
    if (k == n) break;
    ++digits[k];
    image += (diffs[digits[k]] - v[k]) * a.col(k);
    v[k] = diffs[digits[k]];
  }
  return hits;
}

bool CheckUniqueness(const Alphabet& alphabet, const RealMatrix& a,
                     double tol) {
  return DifferenceLatticeKernel(alphabet, a, tol, 1).empty();
}

std::optional<NspCounterexample> NspFalsify(const Alphabet& alphabet,
                                            const RealMatrix& a, int samples,
                                            uint64_t seed) {
  const int n = static_cast<int>(a.cols());
  if (std::pow(static_cast<double>(alphabet.size()), n) >
      kNspEnumerationBudget) {
    throw BudgetExceeded("NSP scan over " + std::to_string(alphabet.size()) +
                         "^" + std::to_string(n) + " signals exceeds budget");
  }
  const auto objective = PiecewiseLinearObjective::Build(alphabet);

  const double lattice_size =
      std::pow(static_cast<double>(DifferenceSet(alphabet).size()), n);
  if (lattice_size <= kEnumerationBudget) {
    for (const auto& v : DifferenceLatticeKernel(alphabet, a)) {
      if (auto hit = FirstViolation(alphabet, objective, v)) return hit;
    }
  }

  const Eigen::MatrixXd kernel = KernelBasis(a);
  if (kernel.cols() == 0) return std::nullopt;
  const auto symbols = alphabet.symbols();
  const double spread =
      alphabet.size() > 1 ? symbols.back() - symbols.front() : 1.0;
  Rng rng(seed);
  for (int sample = 0; sample < samples; ++sample) {
    Eigen::VectorXd coeffs(kernel.cols());
    for (Eigen::Index i = 0; i < coeffs.size(); ++i) coeffs[i] = rng.Normal();
    const double norm = coeffs.norm();
    if (norm == 0.0) continue;
    // Magnitudes log-uniform over [0.01, 10] times the symbol spread.
    const double magnitude = spread * std::pow(10.0, -2.0 + 3.0 * rng.Uniform());
    const Eigen::VectorXd v = kernel * (coeffs * (magnitude / norm));
    if (auto hit = FirstViolation(alphabet, objective, v)) return hit;
  }
  return std::nullopt;
}

double Nsr(const Eigen::Ref<const Eigen::VectorXd>& x,
           const Eigen::Ref<const Eigen::VectorXd>& xhat) {
  if (x.size() != xhat.size()) {
    throw InputError("signal and estimate have different lengths");
  }
  const double denom = x.norm();
  if (!(denom > 0.0)) throw InputError("NSR is undefined for a zero signal");
  return (x - xhat).norm() / denom;
}

bool ExactRecovery(const Eigen::Ref<const Eigen::VectorXd>& x,
                   const Eigen::Ref<const Eigen::VectorXd>& xhat,
                   const Alphabet& alphabet) {
  if (x.size() != xhat.size()) {
    throw InputError("signal and estimate have different lengths");
  }
  return RoundToAlphabet(alphabet, xhat) == x;
}

}  // namespace soav
