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

#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>

#include "cli/commands.h"
#include "soav/analysis.h"
#include "soav/errors.h"
#include "soav/matrix_io.h"
#include "soav/measurement.h"
#include "soav/random.h"

namespace soav::cli {
namespace {

int CountMismatches(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return static_cast<int>((a.array() != b.array()).count());
}

double SafeNsr(const Eigen::VectorXd& x, const Eigen::VectorXd& xhat) {
  if (!(x.norm() > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  return Nsr(x, xhat);
}

void WriteFile(const std::filesystem::path& path,
               const std::function<void(std::ostream&)>& write) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open '" + path.string() + "' for writing");
  write(out);
}

std::filesystem::path WithSuffix(const std::filesystem::path& prefix,
                                 const std::string& suffix) {
  return prefix.string() + suffix;
}

}  // namespace

ImageReport RunImagePipeline(const Eigen::MatrixXd& image,
                             const ImageConfig& config) {
  config.options.Validate();
  if (!(config.noise_sigma >= 0.0)) throw InputError("noise sigma must be >= 0");
  const int rows = static_cast<int>(image.rows());
  const int cols = static_cast<int>(image.cols());
  const int num_pixels = rows * cols;
  if (num_pixels == 0) throw InputError("image is empty");
  const int keep = config.keep > 0 ? config.keep : (num_pixels + 1) / 2;
  if (keep > num_pixels) {
    throw InputError("cannot keep " + std::to_string(keep) + " of " +
                     std::to_string(num_pixels) + " DFT coefficients");
  }

  ImageReport report;
  report.rows = rows;
  report.cols = cols;
  report.keep = keep;

  report.noisy = image;
  Rng noise(DeriveSeed({config.seed, 1}));
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < rows; ++r) {
      report.noisy(r, c) += config.noise_sigma * noise.Normal();
    }
  }

  // vec(W_R X W_C) = (W_C (x) W_R) vec(X) because DFT matrices are symmetric.
  const ComplexMatrix w_rows = DftMatrix(rows);
  const ComplexMatrix w_cols = DftMatrix(cols);
  const ComplexMatrix spectrum =
      w_rows * report.noisy.cast<std::complex<double>>() * w_cols;
  const Eigen::VectorXcd full = Vec(spectrum);

  report.sampled_indices =
      SampleRowIndices(num_pixels, keep, DeriveSeed({config.seed, 2}));
  ComplexMatrix phi(keep, num_pixels);
  Eigen::VectorXcd y(keep);
  for (int i = 0; i < keep; ++i) {
    const int idx = report.sampled_indices[i];
    phi.row(i) = KronRow(w_cols, w_rows, idx);
    y[i] = full[idx];
  }
  const RealSystem system = Realify(phi, y);

  const auto soav_objective = PiecewiseLinearObjective::Build(
      Alphabet::Create({0.0, 1.0}, {0.5, 0.5}));
  const auto bp_objective =
      PiecewiseLinearObjective::Build(Alphabet::Create({0.0}, {1.0}));
  if (config.method == Method::kSplitting) {
    const auto projector = AffineProjector::Create(system.matrix, system.rhs);
    report.numerical_rank = projector.rank();
    report.soav_result = SplittingSolve(soav_objective, projector, system.matrix,
                                        system.rhs, config.options);
    report.bp_result = SplittingSolve(bp_objective, projector, system.matrix,
                                      system.rhs, config.options);
  } else {
    report.numerical_rank = NumericalRank(system.matrix);
    report.soav_result = SolveSoav(soav_objective, system.matrix, system.rhs,
                                   config.method, config.options);
    report.bp_result = BasisPursuit(system.matrix, system.rhs, config.options,
                                    config.method);
  }

  const Alphabet binary = Alphabet::Create({0.0, 1.0}, {0.5, 0.5});
  report.soav = Unvec(report.soav_result.z, rows, cols);
  report.bp = Unvec(report.bp_result.z, rows, cols);
  report.soav_rounded =
      Unvec(RoundToAlphabet(binary, report.soav_result.z), rows, cols);
  report.bp_rounded =
      Unvec(RoundToAlphabet(binary, report.bp_result.z), rows, cols);
  report.soav_pixel_errors = CountMismatches(report.soav_rounded, image);
  report.bp_pixel_errors = CountMismatches(report.bp_rounded, image);
  const Eigen::VectorXd truth = Vec(image);
  report.soav_nsr = SafeNsr(truth, report.soav_result.z);
  report.bp_nsr = SafeNsr(truth, report.bp_result.z);
  return report;
}

int RunImage(const ImageConfig& config, std::ostream& log) {
  const Eigen::MatrixXd image = ReadBinaryGrid(config.input);
  const ImageReport report = RunImagePipeline(image, config);

  if (!config.out.empty()) {
    WriteFile(WithSuffix(config.out, "_noisy.pgm"),
              [&](std::ostream& o) { WritePgm(o, report.noisy); });
    WriteFile(WithSuffix(config.out, "_soav.pgm"),
              [&](std::ostream& o) { WritePgm(o, report.soav); });
    WriteFile(WithSuffix(config.out, "_bp.pgm"),
              [&](std::ostream& o) { WritePgm(o, report.bp); });
    WriteFile(WithSuffix(config.out, "_soav.txt"),
              [&](std::ostream& o) { WriteBinaryGrid(o, report.soav_rounded); });
    WriteFile(WithSuffix(config.out, "_bp.txt"),
              [&](std::ostream& o) { WriteBinaryGrid(o, report.bp_rounded); });
    WriteIndexList(WithSuffix(config.out, "_indices.txt"),
                   report.sampled_indices);
  }

  log << "image " << report.rows << "x" << report.cols << ", kept "
      << report.keep << " of " << report.rows * report.cols
      << " DFT coefficients, realified rank " << report.numerical_rank << "\n";
  log << "soav: status " << ToString(report.soav_result.status)
      << ", iterations " << report.soav_result.iterations << ", nsr "
      << FormatDouble(report.soav_nsr) << ", pixel errors "
      << report.soav_pixel_errors << "\n";
  log << "bp:   status " << ToString(report.bp_result.status)
      << ", iterations " << report.bp_result.iterations << ", nsr "
      << FormatDouble(report.bp_nsr) << ", pixel errors "
      << report.bp_pixel_errors << "\n";

  const auto failed = [](SolveStatus s) {
    return s == SolveStatus::kInfeasible || s == SolveStatus::kNumericalFailure;
  };
  if (failed(report.soav_result.status) || failed(report.bp_result.status)) {
    return kExitSolverFailure;
  }
  return kExitOk;
}

}  // namespace soav::cli
