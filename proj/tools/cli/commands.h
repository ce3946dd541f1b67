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

#ifndef SOAV_TOOLS_CLI_COMMANDS_H_
#define SOAV_TOOLS_CLI_COMMANDS_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "soav/alphabet.h"
#include "soav/solvers.h"

namespace soav::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitSolverFailure = 2,
  kExitConsistencyViolation = 3,
};

// ---------------------------------------------------------------------------
// Alphabet presets x2, x3, x5 parameterized by p = P(0).

struct AlphabetPreset {
  std::string name;
  std::vector<double> symbols;
  // Distribution used to draw signals; entries may be zero.
  std::vector<double> sampling_probs;
};

// Throws InputError for unknown names or p outside [0, 1].
AlphabetPreset MakePreset(std::string_view name, double p);

// Alphabet for the objective: probabilities floored at 1e-6 and
// renormalized, since the objective requires p_i > 0.
Alphabet ObjectiveAlphabet(const AlphabetPreset& preset);

inline constexpr double kObjectiveProbabilityFloor = 1e-6;

// i.i.d. draw of n symbols from the given (possibly zero-including)
// distribution by inverse CDF.
Eigen::VectorXd DrawSignal(const std::vector<double>& symbols,
                           const std::vector<double>& probs, int n,
                           uint64_t seed);

// ---------------------------------------------------------------------------
// p-grid "start:step:end".

struct PGrid {
  double start = 0.0;
  double step = 0.05;
  double end = 1.0;

  static PGrid Parse(std::string_view text);
  // Values rounded to 12 decimals so that e.g. 0.15 prints as 0.15.
  std::vector<double> Values() const;
};

// ---------------------------------------------------------------------------
// solve

struct SolveConfig {
  std::filesystem::path matrix;
  std::filesystem::path measurements;
  std::string alphabet;
  Method method = Method::kSplitting;
  std::filesystem::path out;
  std::optional<std::filesystem::path> dump_lp;
  SolverOptions options;
};

// Path of the rounded output written next to `out`: "z.csv" ->
// "z.rounded.csv".
std::filesystem::path RoundedPath(const std::filesystem::path& out);

int RunSolve(const SolveConfig& config, std::ostream& log);

// ---------------------------------------------------------------------------
// sweep

struct SweepConfig {
  std::string alphabet_preset = "x2";
  int n = 200;
  int m = 100;
  int trials = 200;
  PGrid grid;
  Method method = Method::kSplitting;
  uint64_t seed = 1;
  int threads = 1;
  // Wall-clock runtime is nondeterministic; it is only recorded on request
  // and the runtime_ms column is left empty otherwise.
  bool record_timing = false;
  SolverOptions options;

  void Validate() const;
};

struct SweepRecord {
  std::string alphabet_name;
  double p = 0.0;
  int trial = 0;
  uint64_t seed = 0;
  std::string method;  // "soav" or "bp_round"
  double nsr = 0.0;    // NaN when the solve failed or x == 0
  bool exact_recovery = false;
  double objective = 0.0;
  int iterations = 0;
  std::optional<double> runtime_ms;
  SolveStatus status = SolveStatus::kOptimal;
};

inline constexpr std::string_view kSweepHeader =
    "alphabet,p,trial,seed,method,nsr,exact_recovery,objective,iterations,"
    "runtime_ms";

// Seed for trial `trial` at grid value p; independent of the other grid
// points.
uint64_t TrialSeed(uint64_t master_seed, double p, int trial);

// One trial: draws (Phi, x), solves SOAV and basis pursuit + rounding.
// Returns the soav record followed by the bp_round record.
std::vector<SweepRecord> RunSweepTrial(const SweepConfig& config, double p,
                                       int trial);

std::vector<SweepRecord> RunSweep(const SweepConfig& config);

std::string FormatSweepRecord(const SweepRecord& record);
void WriteSweepCsv(std::ostream& out, const std::vector<SweepRecord>& records);

// ---------------------------------------------------------------------------
// image

struct ImageConfig {
  std::filesystem::path input;
  double noise_sigma = 0.1;
  // 0 means ceil(rows * cols / 2).
  int keep = 0;
  uint64_t seed = 1;
  Method method = Method::kSplitting;
  // Output prefix; files <prefix>_{noisy,soav,bp}.pgm,
  // <prefix>_{soav,bp}.txt and <prefix>_indices.txt. Empty writes nothing.
  std::filesystem::path out;
  SolverOptions options;
};

struct ImageReport {
  int rows = 0;
  int cols = 0;
  int keep = 0;
  int numerical_rank = 0;
  std::vector<int> sampled_indices;
  Eigen::MatrixXd noisy;
  Eigen::MatrixXd soav;  // unrounded reconstructions
  Eigen::MatrixXd bp;
  Eigen::MatrixXd soav_rounded;
  Eigen::MatrixXd bp_rounded;
  int soav_pixel_errors = 0;
  int bp_pixel_errors = 0;
  double soav_nsr = 0.0;
  double bp_nsr = 0.0;
  SolveResult soav_result;
  SolveResult bp_result;
};

// Runs the noisy-image / subsampled-2D-DFT pipeline on a binary grid.
ImageReport RunImagePipeline(const Eigen::MatrixXd& image,
                             const ImageConfig& config);

int RunImage(const ImageConfig& config, std::ostream& log);

// ---------------------------------------------------------------------------
// verify

struct VerifyConfig {
  int n = 10;
  int m = 6;
  std::string alphabet = "0:0.5,1:0.5";
  int trials = 100;
  uint64_t seed = 1;
  // Replaces the Gaussian draw in every trial when set.
  std::optional<Eigen::MatrixXd> matrix;
  int nsp_samples = 200;
  SolverOptions options;
};

struct VerifySummary {
  int trials = 0;
  int violations = 0;
  int unique_instances = 0;
  int nsp_counterexamples = 0;
};

// Emits one JSON object per line per check.
VerifySummary RunVerify(const VerifyConfig& config, std::ostream& out);

// ---------------------------------------------------------------------------
// Binary grids and PGM.

// Rows of whitespace-separated 0/1 values. Throws InputError when ragged,
// empty, or containing other values.
Eigen::MatrixXd ReadBinaryGrid(const std::filesystem::path& path);
Eigen::MatrixXd ReadBinaryGrid(std::istream& in);
void WriteBinaryGrid(std::ostream& out, const Eigen::MatrixXd& grid);
// Plain PGM (P2), maxval 255, values clamped to [0, 1] then scaled.
void WritePgm(std::ostream& out, const Eigen::MatrixXd& image);

// Runs fn(i) for i in [0, count) on `threads` workers.
void ParallelFor(int count, int threads, const std::function<void(int)>& fn);

}  // namespace soav::cli

#endif  // SOAV_TOOLS_CLI_COMMANDS_H_
