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

#include "laumon/exponents.h"

#include <numeric>
#include <stdexcept>

namespace laumon {

Exponents ZeroExponents() {
  Exponents e;
  e.fill(0);
  return e;
}

Exponents UnitExponents(int var, int32_t power) {
  Exponents e = ZeroExponents();
  e[var] = power;
  return e;
}

int32_t CheckedAdd(int32_t a, int32_t b) {
  int32_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
  return r;
}

int32_t CheckedMul(int32_t a, int32_t b) {
  int32_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
  return r;
}

Exponents Add(const Exponents& a, const Exponents& b) {
  Exponents r;
  for (int k = 0; k < kNumVars; ++k) r[k] = CheckedAdd(a[k], b[k]);
  return r;
}

Exponents Sub(const Exponents& a, const Exponents& b) {
  Exponents r;
  for (int k = 0; k < kNumVars; ++k) {
    if (__builtin_sub_overflow(a[k], b[k], &r[k])) {
      throw std::overflow_error("exponent overflow");
    }
  }
  return r;
}

Exponents Neg(const Exponents& a) { return Scale(a, -1); }

Exponents Scale(const Exponents& a, int32_t k) {
  Exponents r;
  for (int i = 0; i < kNumVars; ++i) r[i] = CheckedMul(a[i], k);
  return r;
}

bool IsZero(const Exponents& a) {
  for (int32_t x : a) {
    if (x != 0) return false;
  }
  return true;
}

int64_t TotalDegree(const Exponents& a) {
  int64_t s = 0;
  for (int32_t x : a) s += x;
  return s;
}

bool GrlexGreater(const Exponents& a, const Exponents& b) {
  int64_t da = TotalDegree(a), db = TotalDegree(b);
  if (da != db) return da > db;
  for (int k = 0; k < kNumVars; ++k) {
    if (a[k] != b[k]) return a[k] > b[k];
  }
  return false;
}

std::string VarName(int var) {
  if (var >= 0 && var < kMaxT) return "t" + std::to_string(var + 1);
  switch (var) {
    case kU: return "u";
    case kV: return "v";
    case kZ: return "z";
  }
  throw std::out_of_range("bad variable slot");
}

int VarIndex(const std::string& name) {
  if (name == "u") return kU;
  if (name == "v") return kV;
  if (name == "z") return kZ;
  if (name.size() == 2 && name[0] == 't' && name[1] >= '1' &&
      name[1] < '1' + kMaxT) {
    return name[1] - '1';
  }
  return -1;
}

std::string MonomialString(const Exponents& e) {
  std::string s;
  for (int k = 0; k < kNumVars; ++k) {
    if (e[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += VarName(k);
    if (e[k] != 1) s += "^" + std::to_string(e[k]);
  }
  return s.empty() ? "1" : s;
}

Rational Pow(const Rational& x, int64_t k) {
  if (k == 0) return Rational(1);
  if (x == 0) {
    if (k < 0) throw std::domain_error("zero to a negative power");
    return Rational(0);
  }
  unsigned long m = static_cast<unsigned long>(k < 0 ? -k : k);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), m);
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), m);
  Rational r = k > 0 ? Rational(num, den) : Rational(den, num);
  r.canonicalize();
  return r;
}

int32_t ContentGcd(const Exponents& a) {
  int32_t g = 0;
  for (int32_t x : a) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

}  // namespace laumon
