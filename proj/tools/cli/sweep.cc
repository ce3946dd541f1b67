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

#include <bit>
#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "cli/commands.h"
#include "soav/analysis.h"
#include "soav/errors.h"
#include "soav/matrix_io.h"
#include "soav/random.h"

namespace soav::cli {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool Usable(SolveStatus status) {
  return status == SolveStatus::kOptimal ||
         status == SolveStatus::kIterationLimit;
}

SweepRecord MakeRecord(const SweepConfig& config, double p, int trial,
                       uint64_t seed, std::string method,
                       const Eigen::VectorXd& x, const Eigen::VectorXd& xhat,
                       const Alphabet& alphabet, const SolveResult& result,
                       double runtime_ms) {
  SweepRecord record;
  record.alphabet_name = config.alphabet_preset;
  record.p = p;
  record.trial = trial;
  record.seed = seed;
  record.method = std::move(method);
  record.status = result.status;
  record.objective = result.objective;
  record.iterations = result.iterations;
  if (config.record_timing) {
    record.runtime_ms = std::round(runtime_ms * 1e3) / 1e3;
  }
  if (Usable(result.status) && x.norm() > 0.0) {
    record.nsr = Nsr(x, xhat);
  } else {
    record.nsr = kNaN;
  }
  record.exact_recovery =
      Usable(result.status) && ExactRecovery(x, xhat, alphabet);
  return record;
}

double Milliseconds(std::chrono::duration<double> d) {
  return std::chrono::duration<double, std::milli>(d).count();
}

}  // namespace

void SweepConfig::Validate() const {
  MakePreset(alphabet_preset, 0.5);
  if (n < 1 || m < 1) throw InputError("n and m must be positive");
  if (m > n) throw InputError("m must not exceed n");
  if (trials < 1) throw InputError("trials must be at least 1");
  if (threads < 1) throw InputError("threads must be at least 1");
  for (double p : grid.Values()) {
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("p-grid leaves [0, 1]");
  }
  options.Validate();
}

uint64_t TrialSeed(uint64_t master_seed, double p, int trial) {
  return DeriveSeed({master_seed, std::bit_cast<uint64_t>(p),
                     static_cast<uint64_t>(trial)});
}

std::vector<SweepRecord> RunSweepTrial(const SweepConfig& config, double p,
                                       int trial) {
  const uint64_t seed = TrialSeed(config.seed, p, trial);
  const AlphabetPreset preset = MakePreset(config.alphabet_preset, p);
  const Alphabet objective_alphabet = ObjectiveAlphabet(preset);
  const auto objective = PiecewiseLinearObjective::Build(objective_alphabet);
  const Alphabet rounding_alphabet = objective_alphabet;

  const RealMatrix phi = GaussianMatrix(config.m, config.n, DeriveSeed({seed, 1}));
  const Eigen::VectorXd x = DrawSignal(preset.symbols, preset.sampling_probs,
                                       config.n, DeriveSeed({seed, 2}));
  const Eigen::VectorXd y = phi * x;

  SolveResult soav;
  SolveResult bp;
  if (config.method == Method::kSplitting) {
    // Both problems share the constraint set, so share the projector.
    const auto projector = AffineProjector::Create(phi, y);
    const auto bp_objective =
        PiecewiseLinearObjective::Build(Alphabet::Create({0.0}, {1.0}));
    soav = SplittingSolve(objective, projector, phi, y, config.options);
    bp = SplittingSolve(bp_objective, projector, phi, y, config.options);
  } else {
    soav = SolveSoav(objective, phi, y, config.method, config.options);
    bp = BasisPursuit(phi, y, config.options, config.method);
  }

  const Eigen::VectorXd bp_rounded = RoundToAlphabet(rounding_alphabet, bp.z);
  std::vector<SweepRecord> records;
  records.push_back(MakeRecord(config, p, trial, seed, "soav", x, soav.z,
                               rounding_alphabet, soav,
                               Milliseconds(soav.wall_time)));
  records.push_back(MakeRecord(config, p, trial, seed, "bp_round", x,
                               bp_rounded, rounding_alphabet, bp,
                               Milliseconds(bp.wall_time)));
  return records;
}

std::vector<SweepRecord> RunSweep(const SweepConfig& config) {
  config.Validate();
  const std::vector<double> grid = config.grid.Values();
  const int num_grid = static_cast<int>(grid.size());
  const int total = num_grid * config.trials;
  std::vector<std::vector<SweepRecord>> per_trial(total);
  ParallelFor(total, config.threads, [&](int job) {
    const int p_index = job / config.trials;
    const int trial = job % config.trials;
    per_trial[job] = RunSweepTrial(config, grid[p_index], trial);
  });
  std::vector<SweepRecord> records;
  records.reserve(2 * static_cast<size_t>(total));
  for (auto& batch : per_trial) {
    for (auto& record : batch) records.push_back(std::move(record));
  }
  return records;
}

std::string FormatSweepRecord(const SweepRecord& r) {
  std::ostringstream out;
  out << r.alphabet_name << ',' << FormatDouble(r.p) << ',' << r.trial << ','
      << r.seed << ',' << r.method << ','
      << (std::isnan(r.nsr) ? std::string("nan") : FormatDouble(r.nsr)) << ','
      << (r.exact_recovery ? 1 : 0) << ',' << FormatDouble(r.objective) << ','
      << r.iterations << ',';
  if (r.runtime_ms) out << FormatDouble(*r.runtime_ms);
  return out.str();
}

void WriteSweepCsv(std::ostream& out, const std::vector<SweepRecord>& records) {
  out << kSweepHeader << '\n';
  for (const auto& record : records) out << FormatSweepRecord(record) << '\n';
}

}  // namespace soav::cli
