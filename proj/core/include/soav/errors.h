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

#ifndef SOAV_ERRORS_H_
#define SOAV_ERRORS_H_

#include <stdexcept>
#include <string>

namespace soav {

// Malformed or inconsistent caller input (bad alphabet, dimension mismatch,
// unparseable file).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// An enumeration would exceed its candidate budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what)
      : std::runtime_error(what) {}
};

// The constraint system {z : A z = y} is empty.
class InfeasibleSystem : public std::runtime_error {
 public:
  explicit InfeasibleSystem(const std::string& what)
      : std::runtime_error(what) {}
};

// A solver produced an output that violates its own optimality certificate.
class SolverFailure : public std::runtime_error {
 public:
  explicit SolverFailure(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace soav

#endif  // SOAV_ERRORS_H_
