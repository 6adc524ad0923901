// Copyright 2013 Google Inc. All Rights Reserved.
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

#ifndef LAUMON_POINT_H_
#define LAUMON_POINT_H_

#include <array>
#include <cstdint>
#include <random>

#include "laumon/exponents.h"

namespace laumon {

// An assignment of nonzero rationals to some of the variable slots.
class Point {
 public:
  Point();

  void Set(int var, const Rational& value);
  bool IsSet(int var) const { return set_[var]; }
  const Rational& Get(int var) const;

  // Throws std::invalid_argument if a variable with nonzero exponent is unset.
  Rational Monomial(const Exponents& e) const;

 private:
  std::array<Rational, kNumVars> value_;
  std::array<bool, kNumVars> set_;
};

// Thrown when a denominator vanishes at a sample point; callers resample.
struct VanishingDenominator {};

// Values +-a/b with 1 <= a, b <= 97, pairwise distinct, never +-1, for
// t_1..t_n, u, v and optionally z.
Point RandomPoint(std::mt19937_64& rng, int n, bool with_z);

// Seed for one check unit; stable across runs and worker orderings.
uint64_t UnitSeed(uint64_t base, const std::string& unit, uint64_t trial);

}  // namespace laumon

#endif  // LAUMON_POINT_H_
