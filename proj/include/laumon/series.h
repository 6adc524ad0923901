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

#ifndef LAUMON_SERIES_H_
#define LAUMON_SERIES_H_

#include <stdexcept>
#include <vector>

#include "laumon/factored.h"

namespace laumon {

// at_infinity expands in w = z^-1, at_zero in w = z.
enum class Direction { kAtInfinity, kAtZero };

// Coefficients of w^start, ..., w^order.
struct LaurentSeries {
  Direction direction = Direction::kAtInfinity;
  int order = 0;
  int start = 0;
  std::vector<LaurentExpr> coeffs;

  // Coefficient of w^k; zero outside the stored range below order.
  LaurentExpr Coefficient(int k) const;
};

inline int WExponent(Direction d, int z_exponent) {
  return d == Direction::kAtInfinity ? -z_exponent : z_exponent;
}

// Long division of numerator by denominator in w. Requires the lowest
// w-coefficient of the denominator to be a monomial.
LaurentSeries ExpandSeries(const LaurentExpr& f, Direction d, int order);

// Second route for product-form input: multiplies truncated geometric
// series factor by factor over any scalar ring. `mono(e)` maps a z-free
// monomial to the scalar. Every binomial must have z-exponent in {-1,0,1};
// z-free binomials may only appear with positive multiplicity. Returns the
// coefficients of w^0..w^order, throwing if a negative power of w occurs.
template <class Scalar, class MonoFn>
std::vector<Scalar> ProductSeries(const Factored& f, Direction d, int order,
                                  MonoFn mono) {
  std::vector<Scalar> out(order + 1, Scalar(0));
  if (f.IsZero()) return out;
  Exponents lead = f.mono();
  Rational lead_coeff = f.coeff();
  int shift = WExponent(d, lead[kZ]);
  lead[kZ] = 0;
  struct Geo {
    Exponents gamma;
    int k;
  };
  std::vector<Geo> geos;
  std::vector<Scalar> constants;
  for (const auto& [alpha, k] : f.binomials()) {
    int s = WExponent(d, alpha[kZ]);
    Exponents gamma = alpha;
    gamma[kZ] = 0;
    if (s == 0) {
      if (k < 0) throw std::invalid_argument("z-free denominator in product series");
      Scalar one_minus = Scalar(1) - mono(gamma);
      for (int i = 0; i < k; ++i) constants.push_back(one_minus);
    } else if (s == 1) {
      geos.push_back({gamma, k});
    } else if (s == -1) {
      // (1 - g/w)^k = (-g)^k w^-k (1 - w/g)^k
      lead = Add(lead, Scale(gamma, k));
      if (k % 2 != 0) lead_coeff = -lead_coeff;
      shift -= k;
      geos.push_back({Neg(gamma), k});
    } else {
      throw std::invalid_argument("product series needs linear z-dependence");
    }
  }
  if (shift < 0) throw std::invalid_argument("series has negative powers of w");
  if (shift > order) return out;
  int len = order - shift + 1;
  std::vector<Scalar> ser(len, Scalar(0));
  ser[0] = mono(lead) * Scalar(lead_coeff);
  for (const Scalar& c : constants) ser[0] = ser[0] * c;
  for (const Geo& g : geos) {
    Scalar gamma = mono(g.gamma);
    for (int rep = 0; rep < (g.k < 0 ? -g.k : g.k); ++rep) {
      if (g.k > 0) {
        for (int m = len - 1; m >= 1; --m) ser[m] = ser[m] - gamma * ser[m - 1];
      } else {
        for (int m = 1; m < len; ++m) ser[m] = ser[m] + gamma * ser[m - 1];
      }
    }
  }
  for (int m = 0; m < len; ++m) out[m + shift] = ser[m];
  return out;
}

}  // namespace laumon

#endif  // LAUMON_SERIES_H_
