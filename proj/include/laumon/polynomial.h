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

#ifndef LAUMON_POLYNOMIAL_H_
#define LAUMON_POLYNOMIAL_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "laumon/exponents.h"
#include "laumon/point.h"

namespace laumon {

// Sparse Laurent polynomial over Q. Terms are kept sorted by GrlexGreater,
// with distinct exponents and nonzero coefficients.
class Polynomial {
 public:
  struct Term {
    Exponents exp;
    Rational coeff;
  };

  Polynomial() = default;
  explicit Polynomial(const Rational& c);
  static Polynomial Monomial(const Exponents& e, const Rational& c = 1);
  static Polynomial Variable(int var, int32_t power = 1);
  static Polynomial FromTerms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool IsZero() const { return terms_.empty(); }
  bool IsConstant() const;
  bool IsMonomial() const { return terms_.size() == 1; }
  const Term& Leading() const { return terms_.front(); }
  Rational ConstantTerm() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& b) const;
  Polynomial operator-(const Polynomial& b) const;
  Polynomial operator*(const Polynomial& b) const;
  Polynomial& operator+=(const Polynomial& b);
  Polynomial& operator-=(const Polynomial& b);
  Polynomial& operator*=(const Polynomial& b);

  Polynomial Scaled(const Rational& c) const;
  Polynomial TimesMonomial(const Exponents& e, const Rational& c = 1) const;
  Polynomial Power(unsigned k) const;

  // Entrywise minimum exponent over all terms (zero vector if empty).
  Exponents MinExponents() const;

  // this / divisor if the quotient is a Laurent polynomial.
  std::optional<Polynomial> DivideExact(const Polynomial& divisor) const;

  // Groups terms by the exponent of `var`; keys are that exponent, values
  // have the variable removed.
  std::map<int32_t, Polynomial> SplitByVar(int var) const;

  // Replaces x_var by x_var * m, i.e. multiplies each term by m^(exp of var).
  Polynomial ScaleVar(int var, const Exponents& m) const;

  Rational Evaluate(const Point& p) const;

  std::string ToString() const;

  bool operator==(const Polynomial& b) const;
  bool operator!=(const Polynomial& b) const { return !(*this == b); }
  bool operator<(const Polynomial& b) const;

 private:
  std::vector<Term> terms_;
};

}  // namespace laumon

#endif  // LAUMON_POLYNOMIAL_H_
