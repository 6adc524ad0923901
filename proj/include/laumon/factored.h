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

#ifndef LAUMON_FACTORED_H_
#define LAUMON_FACTORED_H_

#include <map>
#include <string>
#include <vector>

#include "laumon/laurent_expr.h"

namespace laumon {

// coeff * x^mono * prod_alpha (1 - x^alpha)^k, alpha oriented so that
// x^alpha > 1 in graded-lex order. Every closed-form coefficient of the
// actions is of this shape, so it is the common currency of the library.
class Factored {
 public:
  using BinomialMap = std::map<Exponents, int>;

  Factored() : coeff_(1), mono_(ZeroExponents()) {}
  Factored(const Rational& c);  // NOLINT: implicit scalar conversion
  static Factored Monomial(const Exponents& e, const Rational& c = 1);
  // 1 - x^alpha; zero when alpha = 0.
  static Factored OneMinus(const Exponents& alpha);

  const Rational& coeff() const { return coeff_; }
  const Exponents& mono() const { return mono_; }
  const BinomialMap& binomials() const { return binomials_; }
  bool IsZero() const { return coeff_ == 0; }

  Factored operator*(const Factored& b) const;
  Factored operator/(const Factored& b) const;
  Factored operator-() const;
  Factored& operator*=(const Factored& b) { return *this = *this * b; }
  Factored& operator/=(const Factored& b) { return *this = *this / b; }
  Factored Inverse() const;
  Factored Power(int k) const;

  // Replaces x_var by x_var * m.
  Factored ScaleVar(int var, const Exponents& m) const;

  LaurentExpr ToExpr() const;
  // Throws VanishingDenominator if any denominator binomial vanishes.
  Rational Evaluate(const Point& p) const;

  std::string ToString() const;
  bool operator==(const Factored& b) const {
    return coeff_ == b.coeff_ && mono_ == b.mono_ && binomials_ == b.binomials_;
  }

 private:
  void MultiplyBinomial(const Exponents& alpha, int k);

  Rational coeff_;
  Exponents mono_;
  BinomialMap binomials_;
};

// Exact sum of factored terms over the least common denominator.
LaurentExpr SumToExpr(const std::vector<Factored>& terms);

}  // namespace laumon

#endif  // LAUMON_FACTORED_H_
