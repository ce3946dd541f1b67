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
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "soav/errors.h"

namespace soav {
namespace {

constexpr double kProbabilitySumTolerance = 1e-9;

double ParseDouble(std::string_view text, std::string_view context) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError("cannot parse number '" + std::string(text) + "' in " +
                     std::string(context));
  }
  return value;
}

}  // namespace

Alphabet Alphabet::Create(std::vector<double> symbols,
                          std::vector<double> probs) {
  if (symbols.empty()) throw InputError("alphabet must have at least one symbol");
  if (symbols.size() != probs.size()) {
    throw InputError("alphabet has " + std::to_string(symbols.size()) +
                     " symbols but " + std::to_string(probs.size()) +
                     " probabilities");
  }
  std::vector<size_t> order(symbols.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return symbols[a] < symbols[b]; });

  std::vector<double> sorted_symbols;
  std::vector<double> sorted_probs;
  sorted_symbols.reserve(order.size());
  sorted_probs.reserve(order.size());
  for (size_t idx : order) {
    if (!std::isfinite(symbols[idx])) throw InputError("symbol is not finite");
    if (!(probs[idx] > 0.0) || !std::isfinite(probs[idx])) {
      throw InputError("probability of symbol " +
                       std::to_string(symbols[idx]) + " must be positive");
    }
    if (!sorted_symbols.empty() && sorted_symbols.back() == symbols[idx]) {
      throw InputError("duplicate symbol " + std::to_string(symbols[idx]));
    }
    sorted_symbols.push_back(symbols[idx]);
    sorted_probs.push_back(probs[idx]);
  }

  const double total =
      std::accumulate(sorted_probs.begin(), sorted_probs.end(), 0.0);
  if (std::abs(total - 1.0) > kProbabilitySumTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "probabilities sum to " << total << ", expected 1";
    throw InputError(msg.str());
  }
  for (double& p : sorted_probs) p /= total;
  return Alphabet(std::move(sorted_symbols), std::move(sorted_probs));
}

Alphabet Alphabet::Parse(std::string_view text) {
  std::vector<double> symbols;
  std::vector<double> probs;
  while (!text.empty()) {
    const size_t comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    const size_t colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw InputError("alphabet entry '" + std::string(item) +
                       "' is not of the form symbol:prob");
    }
    symbols.push_back(ParseDouble(item.substr(0, colon), "alphabet symbol"));
    probs.push_back(ParseDouble(item.substr(colon + 1), "alphabet probability"));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw InputError("trailing comma in alphabet");
  }
  return Create(std::move(symbols), std::move(probs));
}

double Alphabet::Mean() const {
  double mean = 0.0;
  for (size_t i = 0; i < symbols_.size(); ++i) mean += probs_[i] * symbols_[i];
  return mean;
}

bool Alphabet::Contains(double value) const {
  return std::binary_search(symbols_.begin(), symbols_.end(), value);
}

std::string Alphabet::ToString() const {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out.precision(17);
  for (size_t i = 0; i < symbols_.size(); ++i) {
    if (i > 0) out << ',';
    out << symbols_[i] << ':' << probs_[i];
  }
  return out.str();
}

PiecewiseLinearObjective PiecewiseLinearObjective::Build(
    const Alphabet& alphabet) {
  const auto symbols = alphabet.symbols();
  const auto probs = alphabet.probs();
  const size_t num_symbols = symbols.size();

  PiecewiseLinearObjective obj;
  obj.breakpoints_.assign(symbols.begin(), symbols.end());
  obj.mean_ = alphabet.Mean();
  obj.slopes_.resize(num_symbols + 1);
  obj.intercepts_.resize(num_symbols + 1);

  // Suffix sums keep the interior slopes accurate when one tail is tiny.
  std::vector<double> tail_p(num_symbols + 1, 0.0);
  std::vector<double> tail_pr(num_symbols + 1, 0.0);
  for (size_t j = num_symbols; j-- > 0;) {
    tail_p[j] = tail_p[j + 1] + probs[j];
    tail_pr[j] = tail_pr[j + 1] + probs[j] * symbols[j];
  }
  double head_p = 0.0;
  double head_pr = 0.0;
  for (size_t i = 0; i <= num_symbols; ++i) {
    if (i > 0) {
      head_p += probs[i - 1];
      head_pr += probs[i - 1] * symbols[i - 1];
    }
    obj.slopes_[i] = head_p - tail_p[i];
    obj.intercepts_[i] = -head_pr + tail_pr[i];
  }
  obj.slopes_.front() = -1.0;
  obj.intercepts_.front() = obj.mean_;
  obj.slopes_.back() = 1.0;
  obj.intercepts_.back() = -obj.mean_;
  return obj;
}

int PiecewiseLinearObjective::SegmentOf(double t) const {
  // Number of breakpoints strictly below t; t == r_i stays on piece i - 1.
  return static_cast<int>(
      std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t) -
      breakpoints_.begin());
}

double PiecewiseLinearObjective::Evaluate(double t) const {
  const int i = SegmentOf(t);
  return slopes_[i] * t + intercepts_[i];
}

double PiecewiseLinearObjective::EvaluateMaxForm(double t) const {
  double best = slopes_[0] * t + intercepts_[0];
  for (size_t i = 1; i < slopes_.size(); ++i) {
    best = std::max(best, slopes_[i] * t + intercepts_[i]);
  }
  return best;
}

double PiecewiseLinearObjective::Conjugate(double g) const {
  if (!(std::abs(g) <= 1.0)) return std::numeric_limits<double>::infinity();
  double best = -std::numeric_limits<double>::infinity();
  for (double r : breakpoints_) best = std::max(best, g * r - Evaluate(r));
  return best;
}

double PiecewiseLinearObjective::EvaluateSum(
    const Eigen::Ref<const Eigen::VectorXd>& z) const {
  double total = 0.0;
  for (Eigen::Index n = 0; n < z.size(); ++n) total += Evaluate(z[n]);
  return total;
}

double PiecewiseLinearObjective::Prox(double lambda, double v) const {
  if (!(lambda > 0.0)) throw InputError("prox step must be positive");
  // The optimality condition v - t in lambda * dL(t) splits the real line
  // into alternating intervals: a flat run mapping to breakpoint r_i, then
  // a shifted-identity run on the open segment after it.
  const size_t num_breaks = breakpoints_.size();
  for (size_t i = 0; i < num_breaks; ++i) {
    const double r = breakpoints_[i];
    if (v <= r + lambda * slopes_[i + 1]) {
      if (v >= r + lambda * slopes_[i]) return r;
      return v - lambda * slopes_[i];
    }
  }
  return v - lambda * slopes_.back();
}

Eigen::VectorXd PiecewiseLinearObjective::Prox(
    double lambda, const Eigen::Ref<const Eigen::VectorXd>& v) const {
  Eigen::VectorXd out(v.size());
  for (Eigen::Index n = 0; n < v.size(); ++n) out[n] = Prox(lambda, v[n]);
  return out;
}

double RoundToAlphabet(const Alphabet& alphabet, double t) {
  const auto symbols = alphabet.symbols();
  const auto upper = std::lower_bound(symbols.begin(), symbols.end(), t);
  if (upper == symbols.begin()) return symbols.front();
  if (upper == symbols.end()) return symbols.back();
  const double hi = *upper;
  const double lo = *(upper - 1);
  return (hi - t < t - lo) ? hi : lo;
}

Eigen::VectorXd RoundToAlphabet(const Alphabet& alphabet,
                                const Eigen::Ref<const Eigen::VectorXd>& z) {
  Eigen::VectorXd out(z.size());
  for (Eigen::Index n = 0; n < z.size(); ++n) {
    out[n] = RoundToAlphabet(alphabet, z[n]);
  }
  return out;
}

std::vector<double> DifferenceSet(const Alphabet& alphabet) {
  const auto symbols = alphabet.symbols();
  double scale = 0.0;
  for (double r : symbols) scale = std::max(scale, std::abs(r));
  const double merge_tol = 1e-12 * (1.0 + scale);

  std::vector<double> positive;
  for (size_t i = 0; i < symbols.size(); ++i) {
    for (size_t j = 0; j < i; ++j) positive.push_back(symbols[i] - symbols[j]);
  }
  std::sort(positive.begin(), positive.end());
  std::vector<double> unique;
  for (double d : positive) {
    if (unique.empty() || d - unique.back() > merge_tol) unique.push_back(d);
  }

  std::vector<double> result;
  result.reserve(2 * unique.size() + 1);
  for (auto it = unique.rbegin(); it != unique.rend(); ++it) {
    result.push_back(-*it);
  }
  result.push_back(0.0);
  result.insert(result.end(), unique.begin(), unique.end());
  return result;
}

}  // namespace soav
