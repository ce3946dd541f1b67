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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>
#include <thread>
#include <atomic>
#include <exception>
#include <mutex>

#include "cli/commands.h"
#include "soav/errors.h"
#include "soav/matrix_io.h"
#include "soav/random.h"

namespace soav::cli {

AlphabetPreset MakePreset(std::string_view name, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InputError("p must lie in [0, 1], got " + FormatDouble(p));
  }
  AlphabetPreset preset;
  preset.name = std::string(name);
  if (name == "x2") {
    preset.symbols = {0.0, 1.0};
    preset.sampling_probs = {p, 1.0 - p};
  } else if (name == "x3") {
    const double side = (1.0 - p) / 2.0;
    preset.symbols = {-1.0, 0.0, 1.0};
    preset.sampling_probs = {side, p, side};
  } else if (name == "x5") {
    const double side = (1.0 - p) / 4.0;
    preset.symbols = {-2.0, -1.0, 0.0, 1.0, 2.0};
    preset.sampling_probs = {side, side, p, side, side};
  } else {
    throw InputError("unknown alphabet preset '" + std::string(name) +
                     "' (expected x2, x3 or x5)");
  }
  return preset;
}

Alphabet ObjectiveAlphabet(const AlphabetPreset& preset) {
  std::vector<double> probs = preset.sampling_probs;
  double total = 0.0;
  for (double& q : probs) {
    q = std::max(q, kObjectiveProbabilityFloor);
    total += q;
  }
  for (double& q : probs) q /= total;
  return Alphabet::Create(preset.symbols, probs);
}

Eigen::VectorXd DrawSignal(const std::vector<double>& symbols,
                           const std::vector<double>& probs, int n,
                           uint64_t seed) {
  if (symbols.empty() || symbols.size() != probs.size()) {
    throw InputError("sampling distribution is malformed");
  }
  std::vector<double> cdf(probs.size());
  double running = 0.0;
  for (size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] < 0.0) throw InputError("negative sampling probability");
    running += probs[i];
    cdf[i] = running;
  }
  Rng rng(seed);
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) {
    const double u = rng.Uniform() * running;
    size_t k = static_cast<size_t>(
        std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    k = std::min(k, symbols.size() - 1);
    // Never land on a zero-probability symbol through rounding at the top.
    while (probs[k] == 0.0 && k > 0) --k;
    x[i] = symbols[k];
  }
  return x;
}

PGrid PGrid::Parse(std::string_view text) {
  PGrid grid;
  double* fields[] = {&grid.start, &grid.step, &grid.end};
  for (int i = 0; i < 3; ++i) {
    const size_t colon = text.find(':');
    if ((i < 2) == (colon == std::string_view::npos)) {
      throw InputError("p-grid must look like start:step:end");
    }
    *fields[i] = ParseReal(text.substr(0, colon));
    if (i < 2) text.remove_prefix(colon + 1);
  }
  if (!(grid.start >= 0.0 && grid.end <= 1.0 && grid.start <= grid.end)) {
    throw InputError("p-grid must satisfy 0 <= start <= end <= 1");
  }
  if (!(grid.step > 0.0) && grid.start != grid.end) {
    throw InputError("p-grid step must be positive");
  }
  return grid;
}

std::vector<double> PGrid::Values() const {
  const int count =
      step > 0.0 ? static_cast<int>(std::floor((end - start) / step + 1e-9)) + 1
                 : 1;
  std::vector<double> values;
  values.reserve(count);
  for (int k = 0; k < count; ++k) {
    const double raw = start + k * step;
    values.push_back(std::min(std::round(raw * 1e12) / 1e12, 1.0));
  }
  return values;
}

void ParallelFor(int count, int threads, const std::function<void(int)>& fn) {
  threads = std::max(1, std::min(threads, count));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> workers;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (int t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace soav::cli
