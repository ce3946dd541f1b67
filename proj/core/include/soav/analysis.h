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

#ifndef SOAV_ANALYSIS_H_
#define SOAV_ANALYSIS_H_

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "soav/alphabet.h"
#include "soav/measurement.h"

namespace soav {

// Nonzero v in D^N (D = DifferenceSet) with ||A v|| <= tol * ||v||, in
// odometer order (coordinate 0 fastest, differences ascending). Stops after
// `limit` hits. Throws BudgetExceeded when |D|^N exceeds kEnumerationBudget.
std::vector<Eigen::VectorXd> DifferenceLatticeKernel(const Alphabet& alphabet,
                                                     const RealMatrix& a,
                                                     double tol = 1e-8,
                                                     size_t limit = SIZE_MAX);

// True iff A is injective on X^N, tested through ker A meeting D^N only at
// the origin. Exhaustive, so only for small N.
bool CheckUniqueness(const Alphabet& alphabet, const RealMatrix& a,
                     double tol = 1e-8);

// A witness that the null space property fails: v in ker A, v != 0, and
// x in X^N with F(x - v) <= F(x).
struct NspCounterexample {
  Eigen::VectorXd kernel_vector;
  Eigen::VectorXd signal;
  // F(x - v) - F(x); at most zero (up to 1e-12 relative slack).
  double margin = 0.0;
};

inline constexpr double kNspEnumerationBudget = 1e6;

// Searches for a null space property violation. Candidate directions are
// every difference-lattice kernel member (when |D|^N fits the enumeration
// budget) followed by `samples` random combinations of an orthonormal kernel
// basis. For each direction all x in X^N are scanned in odometer order and
// the first violation is returned. Finding nothing is evidence for the
// property, never a proof. Throws BudgetExceeded when L^N exceeds
// kNspEnumerationBudget.
std::optional<NspCounterexample> NspFalsify(const Alphabet& alphabet,
                                            const RealMatrix& a, int samples,
                                            uint64_t seed);

// ||x - xhat|| / ||x||. Throws InputError on length mismatch or zero x.
double Nsr(const Eigen::Ref<const Eigen::VectorXd>& x,
           const Eigen::Ref<const Eigen::VectorXd>& xhat);

// True iff rounding xhat to the alphabet reproduces x exactly.
bool ExactRecovery(const Eigen::Ref<const Eigen::VectorXd>& x,
                   const Eigen::Ref<const Eigen::VectorXd>& xhat,
                   const Alphabet& alphabet);

}  // namespace soav

#endif  // SOAV_ANALYSIS_H_
