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

#ifndef LAUMON_LAURENT_EXPR_H_
#define LAUMON_LAURENT_EXPR_H_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "laumon/polynomial.h"

namespace laumon {

// An irreducible-ish denominator factor. Either Phi_d(x^beta) with beta
// primitive and x^beta > 1 in graded-lex order, or an opaque polynomial
// with no monomial content and graded-lex leading coefficient 1.
class Factor {
 public:
  static Factor Cyclotomic(int order, const Exponents& base);
  static Factor Opaque(const Polynomial& p);

  bool is_cyclotomic() const { return order_ > 0; }
  int order() const { return order_; }
  const Exponents& base() const { return base_; }
  const Polynomial& poly() const { return poly_; }

  std::string ToString() const;

  bool operator<(const Factor& b) const;
  bool operator==(const Factor& b) const;

 private:
  int order_ = 0;
  Exponents base_{};
  Polynomial poly_;
};

// Coefficients of the d-th cyclotomic polynomial, low degree first.
const std::vector<long>& CyclotomicCoefficients(int d);

using FactorMap = std::map<Factor, int>;

// p = coeff * x^mono * prod factors^mult.
struct Splitting {
  Rational coeff;
  Exponents mono{};
  FactorMap factors;
};

// Splitting of 1 - x^alpha (sign = -1) or 1 + x^alpha (sign = +1).
// alpha must be nonzero.
Splitting SplitBinomial(const Exponents& alpha, int sign);
Splitting SplitPolynomial(const Polynomial& p);

// Exact rational function in t_1..t_8, u, v, z: numerator polynomial over a
// product of normalized factors, with no factor dividing the numerator.
class LaurentExpr {
 public:
  LaurentExpr() = default;
  LaurentExpr(const Rational& c);  // NOLINT: implicit scalar conversion
  LaurentExpr(int c) : LaurentExpr(Rational(c)) {}  // NOLINT
  explicit LaurentExpr(const Polynomial& p);
  static LaurentExpr Monomial(const Exponents& e, const Rational& c = 1);
  static LaurentExpr Variable(int var, int32_t power = 1);
  static LaurentExpr FromParts(Polynomial num, FactorMap den);

  const Polynomial& numerator() const { return num_; }
  const FactorMap& denominator() const { return den_; }
  Polynomial DenominatorPolynomial() const;

  bool IsZero() const { return num_.IsZero(); }
  bool IsPolynomial() const { return den_.empty(); }

  LaurentExpr operator-() const;
  LaurentExpr Plus(const LaurentExpr& b) const;
  LaurentExpr Minus(const LaurentExpr& b) const;
  LaurentExpr Times(const LaurentExpr& b) const;
  LaurentExpr Over(const LaurentExpr& b) const;
  LaurentExpr& operator+=(const LaurentExpr& b) { return *this = Plus(b); }
  LaurentExpr& operator-=(const LaurentExpr& b) { return *this = Minus(b); }
  LaurentExpr& operator*=(const LaurentExpr& b) { return *this = Times(b); }
  LaurentExpr& operator/=(const LaurentExpr& b) { return *this = Over(b); }
  LaurentExpr Inverse() const;
  LaurentExpr Power(int k) const;

  // Replaces x_var by x_var * m.
  LaurentExpr ScaleVar(int var, const Exponents& m) const;

  // Throws VanishingDenominator.
  Rational Evaluate(const Point& p) const;

  // Canonical text: "num" or "(num)/(F1^k1*F2^k2)", factors in map order.
  std::string ToString() const;
  static LaurentExpr Parse(const std::string& s);

  bool operator==(const LaurentExpr& b) const;
  bool operator!=(const LaurentExpr& b) const { return !(*this == b); }

 private:
  void Reduce();

  Polynomial num_;
  FactorMap den_;
};

inline LaurentExpr operator+(const LaurentExpr& a, const LaurentExpr& b) { return a.Plus(b); }
inline LaurentExpr operator-(const LaurentExpr& a, const LaurentExpr& b) { return a.Minus(b); }
inline LaurentExpr operator*(const LaurentExpr& a, const LaurentExpr& b) { return a.Times(b); }
inline LaurentExpr operator/(const LaurentExpr& a, const LaurentExpr& b) { return a.Over(b); }

// Parses a polynomial in canonical text form ("3/2*t1^2*v^-1 - u + 1").
Polynomial ParsePolynomial(const std::string& s);

}  // namespace laumon

#endif  // LAUMON_LAURENT_EXPR_H_
