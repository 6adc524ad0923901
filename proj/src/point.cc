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

#include "laumon/point.h"

#include <stdexcept>
#include <vector>

namespace laumon {

Point::Point() { set_.fill(false); }

void Point::Set(int var, const Rational& value) {
  if (value == 0) throw std::invalid_argument("point values must be nonzero");
  value_[var] = value;
  set_[var] = true;
}

const Rational& Point::Get(int var) const {
  if (!set_[var]) throw std::invalid_argument("unset variable " + VarName(var));
  return value_[var];
}

Rational Point::Monomial(const Exponents& e) const {
  Rational r(1);
  for (int k = 0; k < kNumVars; ++k) {
    if (e[k] != 0) r *= Pow(Get(k), e[k]);
  }
  return r;
}

Point RandomPoint(std::mt19937_64& rng, int n, bool with_z) {
  std::uniform_int_distribution<int> mag(1, 97);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<int> vars;
  for (int j = 1; j <= n; ++j) vars.push_back(TVar(j));
  vars.push_back(kU);
  vars.push_back(kV);
  if (with_z) vars.push_back(kZ);
  std::vector<Rational> used;
  Point p;
  for (int var : vars) {
    while (true) {
      Rational x(mag(rng), mag(rng));
      x.canonicalize();
      if (sign(rng)) x = -x;
      if (x == 1 || x == -1) continue;
      bool clash = false;
      for (const Rational& y : used) clash = clash || (x == y);
      if (clash) continue;
      used.push_back(x);
      p.Set(var, x);
      break;
    }
  }
  return p;
}

uint64_t UnitSeed(uint64_t base, const std::string& unit, uint64_t trial) {
  // FNV-1a over the unit name, mixed with base and trial.
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : unit) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  h ^= base + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= trial + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace laumon
