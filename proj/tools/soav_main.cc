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

// Command-line front end: solve, sweep, image, verify.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cli/commands.h"
#include "soav/errors.h"
#include "soav/matrix_io.h"

namespace {

using soav::cli::ExitCode;

struct SharedFlags {
  std::string solver = "admm";
  int max_iterations = 20000;
};

void AddSolverFlags(CLI::App* cmd, SharedFlags* flags) {
  cmd->add_option("--solver", flags->solver, "Solver: lp or admm")
      ->check(CLI::IsMember({"lp", "admm", "simplex", "splitting"}));
  cmd->add_option("--max-iterations", flags->max_iterations,
                  "Iteration cap for either solver");
}

soav::SolverOptions ToOptions(const SharedFlags& flags) {
  soav::SolverOptions options;
  options.max_iterations = flags.max_iterations;
  return options;
}

// Writes to `path`, or stdout when path is empty or "-".
template <typename Fn>
void WithOutput(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw soav::InputError("cannot open '" + path + "' for writing");
  fn(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete-valued signal reconstruction by sum of absolute values"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);

  // solve
  soav::cli::SolveConfig solve;
  SharedFlags solve_flags;
  std::string solve_matrix, solve_measurements, solve_out, solve_dump;
  auto* solve_cmd = app.add_subcommand("solve", "Reconstruct one signal");
  solve_cmd->add_option("--matrix", solve_matrix, "Measurement matrix CSV")
      ->required();
  solve_cmd->add_option("--measurements", solve_measurements,
                        "Measurement vector CSV")
      ->required();
  solve_cmd->add_option("--alphabet", solve.alphabet,
                        "Alphabet, e.g. -1:0.25,0:0.5,1:0.25")
      ->required();
  solve_cmd->add_option("--out", solve_out, "Output CSV for z");
  solve_cmd->add_option("--dump-lp", solve_dump, "Write the epigraph LP here");
  AddSolverFlags(solve_cmd, &solve_flags);

  // sweep
  soav::cli::SweepConfig sweep;
  SharedFlags sweep_flags;
  std::string sweep_grid = "0:0.05:1", sweep_out;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "NSR vs p Monte Carlo sweep on Gaussian data");
  sweep_cmd->add_option("--alphabet-preset", sweep.alphabet_preset,
                        "x2, x3 or x5")
      ->check(CLI::IsMember({"x2", "x3", "x5"}));
  sweep_cmd->add_option("--n", sweep.n, "Signal length");
  sweep_cmd->add_option("--m", sweep.m, "Number of measurements");
  sweep_cmd->add_option("--trials", sweep.trials, "Trials per grid point");
  sweep_cmd->add_option("--p-grid", sweep_grid, "start:step:end");
  sweep_cmd->add_option("--seed", sweep.seed, "Master seed");
  sweep_cmd->add_option("--threads", sweep.threads, "Worker threads");
  sweep_cmd->add_option("--out", sweep_out, "Output CSV (default stdout)");
  sweep_cmd->add_flag("--timing", sweep.record_timing,
                      "Record wall-clock runtime_ms (output no longer "
                      "reproducible)");
  AddSolverFlags(sweep_cmd, &sweep_flags);

  // image
  soav::cli::ImageConfig image;
  SharedFlags image_flags;
  std::string image_input, image_out;
  auto* image_cmd =
      app.add_subcommand("image", "Binary image from subsampled 2-D DFT");
  image_cmd->add_option("--input", image_input, "Binary grid (rows of 0/1)")
      ->required();
  image_cmd->add_option("--noise-sigma", image.noise_sigma,
                        "Pixel noise standard deviation");
  image_cmd->add_option("--keep", image.keep,
                        "Retained DFT coefficients (default half, rounded up)");
  image_cmd->add_option("--seed", image.seed, "Seed");
  image_cmd->add_option("--out", image_out, "Output file prefix");
  AddSolverFlags(image_cmd, &image_flags);

  // verify
  soav::cli::VerifyConfig verify;
  SharedFlags verify_flags;
  std::string verify_matrix, verify_out;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Uniqueness / null space property / solver consistency checks");
  verify_cmd->add_option("--n", verify.n, "Signal length");
  verify_cmd->add_option("--m", verify.m, "Number of measurements");
  verify_cmd->add_option("--alphabet", verify.alphabet,
                         "Alphabet as symbol:prob,...");
  verify_cmd->add_option("--trials", verify.trials, "Number of instances");
  verify_cmd->add_option("--seed", verify.seed, "Master seed");
  verify_cmd->add_option("--matrix", verify_matrix,
                         "Fixed real matrix CSV used for every instance");
  verify_cmd->add_option("--nsp-samples", verify.nsp_samples,
                         "Random kernel directions per instance");
  verify_cmd->add_option("--out", verify_out, "JSON-lines output");
  AddSolverFlags(verify_cmd, &verify_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ExitCode::kExitOk : ExitCode::kExitInputError;
  }

  try {
    if (*solve_cmd) {
      solve.matrix = solve_matrix;
      solve.measurements = solve_measurements;
      solve.out = solve_out;
      if (!solve_dump.empty()) solve.dump_lp = solve_dump;
      solve.method = soav::ParseMethod(solve_flags.solver);
      solve.options = ToOptions(solve_flags);
      return soav::cli::RunSolve(solve, std::cout);
    }
    if (*sweep_cmd) {
      sweep.grid = soav::cli::PGrid::Parse(sweep_grid);
      sweep.method = soav::ParseMethod(sweep_flags.solver);
      sweep.options = ToOptions(sweep_flags);
      const auto records = soav::cli::RunSweep(sweep);
      WithOutput(sweep_out, [&](std::ostream& out) {
        soav::cli::WriteSweepCsv(out, records);
      });
      return ExitCode::kExitOk;
    }
    if (*image_cmd) {
      image.input = image_input;
      image.out = image_out;
      image.method = soav::ParseMethod(image_flags.solver);
      image.options = ToOptions(image_flags);
      return soav::cli::RunImage(image, std::cout);
    }
    if (*verify_cmd) {
      if (!verify_matrix.empty()) {
        verify.matrix = soav::ReadRealMatrixCsv(verify_matrix);
      }
      verify.options = ToOptions(verify_flags);
      soav::cli::VerifySummary summary;
      WithOutput(verify_out, [&](std::ostream& out) {
        summary = soav::cli::RunVerify(verify, out);
      });
      std::cerr << "verify: " << summary.trials << " instances, "
                << summary.unique_instances << " unique, "
                << summary.nsp_counterexamples << " NSP counterexamples, "
                << summary.violations << " consistency violations\n";
      return summary.violations == 0 ? ExitCode::kExitOk
                                     : ExitCode::kExitConsistencyViolation;
    }
  } catch (const soav::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCode::kExitInputError;
  } catch (const soav::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCode::kExitInputError;
  } catch (const soav::InfeasibleSystem& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCode::kExitSolverFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCode::kExitSolverFailure;
  }
  return ExitCode::kExitOk;
}
