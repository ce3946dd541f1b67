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

#ifndef SOAV_RANDOM_H_
#define SOAV_RANDOM_H_

#include <cstdint>
#include <initializer_list>

namespace soav {

// Counter-based generator "soav-splitmix64-ctr/1". Output k of a stream is
// Mix64(key + (k + 1) * golden_gamma) with key = Mix64(seed), so streams are
// reproducible bit-for-bit on any platform with IEEE doubles. Normals come
// from the Box-Muller transform.
class Rng {
 public:
  static constexpr const char* kName = "soav-splitmix64-ctr/1";

  explicit Rng(uint64_t seed);

  uint64_t NextU64();

  // Uniform on the open interval (0, 1), 53-bit resolution.
  double Uniform();

  // Uniform integer in [0, bound). bound must be positive.
  uint64_t UniformInt(uint64_t bound);

  double Normal();

  uint64_t counter() const { return counter_; }

 private:
  uint64_t key_;
  uint64_t counter_ = 0;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

// SplitMix64 finalizer.
uint64_t Mix64(uint64_t x);

// Order-sensitive hash of a sequence of integers, used to derive per-trial
// seeds that do not depend on which other trials exist.
uint64_t DeriveSeed(std::initializer_list<uint64_t> parts);

}  // namespace soav

#endif  // SOAV_RANDOM_H_
