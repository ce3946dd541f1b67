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

#include <fstream>
#include <ostream>

#include "cli/commands.h"
#include "soav/errors.h"
#include "soav/lp_form.h"
#include "soav/matrix_io.h"
#include "soav/measurement.h"

namespace soav::cli {

std::filesystem::path RoundedPath(const std::filesystem::path& out) {
  std::filesystem::path rounded = out;
  rounded.replace_extension();
  rounded += ".rounded";
  rounded += out.has_extension() ? out.extension()
                                 : std::filesystem::path(".csv");
  return rounded;
}

int RunSolve(const SolveConfig& config, std::ostream& log) {
  config.options.Validate();
  const Alphabet alphabet = Alphabet::Parse(config.alphabet);
  const CsvMatrix phi = ReadMatrixCsv(config.matrix);
  const Eigen::VectorXcd y = ReadVectorCsv(config.measurements);
  if (phi.values.rows() != y.size()) {
    throw InputError("matrix has " + std::to_string(phi.values.rows()) +
                     " rows but measurements have " + std::to_string(y.size()) +
                     " entries");
  }

  RealSystem system;
  const bool complex_input = phi.is_complex || y.imag().squaredNorm() > 0.0;
  if (complex_input) {
    system = Realify(phi.values, y);
  } else {
    system.matrix = phi.values.real();
    system.rhs = y.real();
  }

  const auto objective = PiecewiseLinearObjective::Build(alphabet);
  if (config.dump_lp) {
    std::ofstream dump(*config.dump_lp, std::ios::binary);
    if (!dump) throw InputError("cannot write " + config.dump_lp->string());
    WriteLinearProgram(dump,
                       BuildSoavLp(objective, system.matrix, system.rhs).lp);
  }

  const SolveResult result = SolveSoav(objective, system.matrix, system.rhs,
                                       config.method, config.options);
  if (!config.out.empty()) {
    WriteMatrixCsv(config.out, Eigen::MatrixXd(result.z));
    WriteMatrixCsv(RoundedPath(config.out),
                   Eigen::MatrixXd(RoundToAlphabet(alphabet, result.z)));
  }
  log << "status: " << ToString(result.status) << "\n"
      << "objective: " << FormatDouble(result.objective) << "\n"
      << "residual: " << FormatDouble(result.feasibility_residual) << "\n"
      << "iterations: " << result.iterations << "\n"
      << "realified: " << (complex_input ? "yes" : "no") << "\n";
  return result.status == SolveStatus::kOptimal ? kExitOk : kExitSolverFailure;
}

}  // namespace soav::cli
