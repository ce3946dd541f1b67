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
#include <ostream>
#include <vector>

#include "cli/commands.h"
#include "json.hpp"
#include "soav/analysis.h"
#include "soav/errors.h"
#include "soav/random.h"

namespace soav::cli {
namespace {

using nlohmann::json;

constexpr double kSymbolTolerance = 1e-6;
constexpr double kDiscreteResidual = 1e-7;

json ToJson(const Eigen::VectorXd& v) {
  return json(std::vector<double>(v.data(), v.data() + v.size()));
}

bool NearlyDiscrete(const Alphabet& alphabet, const Eigen::VectorXd& z) {
  return (RoundToAlphabet(alphabet, z) - z).lpNorm<Eigen::Infinity>() <=
         kSymbolTolerance;
}

}  // namespace

VerifySummary RunVerify(const VerifyConfig& config, std::ostream& out) {
  config.options.Validate();
  if (config.trials < 0) throw InputError("trials must be non-negative");
  const Alphabet alphabet = Alphabet::Parse(config.alphabet);
  const auto objective = PiecewiseLinearObjective::Build(alphabet);
  const std::vector<double> symbols(alphabet.symbols().begin(),
                                    alphabet.symbols().end());
  const std::vector<double> probs(alphabet.probs().begin(),
                                  alphabet.probs().end());
  if (!config.matrix && (config.n < 1 || config.m < 1)) {
    throw InputError("n and m must be positive");
  }

  VerifySummary summary;
  for (int trial = 0; trial < config.trials; ++trial) {
    const uint64_t instance_seed =
        DeriveSeed({config.seed, static_cast<uint64_t>(trial)});
    const RealMatrix phi =
        config.matrix ? *config.matrix
                      : GaussianMatrix(config.m, config.n,
                                       DeriveSeed({instance_seed, 1}));
    const int n = static_cast<int>(phi.cols());
    const Eigen::VectorXd x =
        DrawSignal(symbols, probs, n, DeriveSeed({instance_seed, 2}));
    const Eigen::VectorXd y = phi * x;
    ++summary.trials;
    int violations = 0;

    const bool unique = CheckUniqueness(alphabet, phi);
    summary.unique_instances += unique ? 1 : 0;
    out << json{{"check", "uniqueness"},
                {"instance_seed", instance_seed},
                {"result", unique}}
               .dump()
        << '\n';

    const auto solutions = ExhaustiveSearch(alphabet, phi, y);
    json oracle{{"check", "oracle"},
                {"instance_seed", instance_seed},
                {"result", solutions.size()},
                {"signal", ToJson(x)}};
    // Uniqueness on the difference lattice forbids a second preimage.
    if (unique && solutions.size() > 1) {
      oracle["violation"] = "unique matrix with several discrete preimages";
      ++violations;
    }
    out << oracle.dump() << '\n';

    for (const Method method : {Method::kSimplex, Method::kSplitting}) {
      const SolveResult result =
          SolveSoav(objective, phi, y, method, config.options);
      std::string verdict = "not_discrete";
      const bool discrete = result.feasibility_residual <= kDiscreteResidual &&
                            NearlyDiscrete(alphabet, result.z);
      if (discrete && unique && solutions.size() == 1) {
        const bool match = RoundToAlphabet(alphabet, result.z) == solutions[0];
        verdict = match ? "consistent" : "violation";
        if (!match) ++violations;
      } else if (discrete) {
        verdict = "discrete_unchecked";
      }
      out << json{{"check", std::string("solver_") +
                                std::string(ToString(method))},
                  {"instance_seed", instance_seed},
                  {"result", verdict},
                  {"status", std::string(ToString(result.status))},
                  {"objective", result.objective},
                  {"signal_objective", objective.EvaluateSum(x)},
                  {"residual", result.feasibility_residual}}
                 .dump()
          << '\n';
    }

    const auto counterexample =
        NspFalsify(alphabet, phi, config.nsp_samples,
                   DeriveSeed({instance_seed, 3}));
    json nsp{{"check", "nsp"},
             {"instance_seed", instance_seed},
             {"result", counterexample ? "counterexample" : "none_found"}};
    if (counterexample) {
      ++summary.nsp_counterexamples;
      const Eigen::VectorXd alternate =
          counterexample->signal - counterexample->kernel_vector;
      nsp["counterexample"] = {
          {"kernel_vector", ToJson(counterexample->kernel_vector)},
          {"signal", ToJson(counterexample->signal)},
          {"margin", counterexample->margin}};
      // A counterexample must be a feasible point no worse than the signal.
      const double residual =
          (phi * alternate - phi * counterexample->signal).norm();
      if (residual > 1e-6 * (1.0 + (phi * counterexample->signal).norm()) ||
          counterexample->margin > 1e-9) {
        nsp["violation"] = "counterexample does not certify a rival optimum";
        ++violations;
      }
    }
    out << nsp.dump() << '\n';
    summary.violations += violations;
  }
  return summary;
}

}  // namespace soav::cli
