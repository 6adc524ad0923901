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

#ifndef LAUMON_EXPONENTS_H_
#define LAUMON_EXPONENTS_H_

#include <array>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace laumon {

using Rational = mpq_class;

// Variable slots: t_1..t_8, then u, v, z.
constexpr int kMaxT = 8;
constexpr int kU = 8;
constexpr int kV = 9;
constexpr int kZ = 10;
constexpr int kNumVars = 11;

using Exponents = std::array<int32_t, kNumVars>;

inline constexpr int TVar(int j) { return j - 1; }

Exponents ZeroExponents();
Exponents UnitExponents(int var, int32_t power = 1);

// Checked arithmetic; throws std::overflow_error.
int32_t CheckedAdd(int32_t a, int32_t b);
int32_t CheckedMul(int32_t a, int32_t b);
Exponents Add(const Exponents& a, const Exponents& b);
Exponents Sub(const Exponents& a, const Exponents& b);
Exponents Neg(const Exponents& a);
Exponents Scale(const Exponents& a, int32_t k);

bool IsZero(const Exponents& a);
int64_t TotalDegree(const Exponents& a);

// Graded-lex: total degree first, then t_1 > ... > t_8 > u > v > z.
// Returns true if a comes strictly before b (a is the larger monomial).
bool GrlexGreater(const Exponents& a, const Exponents& b);

std::string VarName(int var);
// Parses "t3", "u", "v", "z"; returns -1 if unknown.
int VarIndex(const std::string& name);

// x^e rendered as "t1^2*v^-1"; "1" for the empty monomial.
std::string MonomialString(const Exponents& e);

// Integer power of a rational, exact; 0^k for k < 0 throws.
Rational Pow(const Rational& x, int64_t k);

// Sign-normalized gcd of all entries (>= 0).
int32_t ContentGcd(const Exponents& a);

}  // namespace laumon

#endif  // LAUMON_EXPONENTS_H_
