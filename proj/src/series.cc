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

#include "laumon/series.h"

#include <algorithm>
#include <map>

namespace laumon {

LaurentExpr LaurentSeries::Coefficient(int k) const {
  if (k < start || k > order) return LaurentExpr();
  return coeffs[k - start];
}

namespace {

std::map<int, Polynomial> ByW(const Polynomial& p, Direction d) {
  std::map<int, Polynomial> out;
  for (auto& [k, c] : p.SplitByVar(kZ)) out[WExponent(d, k)] = c;
  return out;
}

}  // namespace

LaurentSeries ExpandSeries(const LaurentExpr& f, Direction d, int order) {
  if (order < 0) throw std::invalid_argument("negative series order");
  LaurentSeries s;
  s.direction = d;
  s.order = order;
  std::map<int, Polynomial> num = ByW(f.numerator(), d);
  // z-free denominator factors are constants of the expansion.
  Polynomial zden(1);
  FactorMap constant_den;
  for (const auto& [fac, k] : f.denominator()) {
    bool has_z = false;
    for (const auto& t : fac.poly().terms()) has_z = has_z || t.exp[kZ] != 0;
    if (has_z) {
      zden *= fac.poly().Power(k);
    } else {
      constant_den[fac] = k;
    }
  }
  LaurentExpr scale = LaurentExpr::FromParts(Polynomial(1), constant_den);
  std::map<int, Polynomial> den = ByW(zden, d);
  int a = den.begin()->first;
  const Polynomial& da = den.begin()->second;
  if (!da.IsMonomial()) {
    throw std::invalid_argument("denominator not expandable in the requested direction");
  }
  Exponents inv_exp = Neg(da.Leading().exp);
  Rational inv_coeff = 1 / da.Leading().coeff;
  if (num.empty()) {
    s.start = 0;
    s.coeffs.assign(order + 1, LaurentExpr());
    return s;
  }
  int b = num.begin()->first;
  int low = b - a;
  s.start = std::min(0, low);
  s.coeffs.assign(std::max(0, order - s.start + 1), LaurentExpr());
  // q_{low+k} = (N_{b+k} - sum_{j>=1} D_{a+j} q_{low+k-j}) / D_a
  std::vector<Polynomial> q;
  for (int k = 0; low + k <= order; ++k) {
    Polynomial acc;
    auto it = num.find(b + k);
    if (it != num.end()) acc = it->second;
    for (int j = 1; j <= k; ++j) {
      auto dj = den.find(a + j);
      if (dj != den.end()) acc -= dj->second * q[k - j];
    }
    q.push_back(acc.TimesMonomial(inv_exp, inv_coeff));
  }
  for (size_t k = 0; k < q.size(); ++k) {
    int e = low + static_cast<int>(k);
    if (e >= s.start) s.coeffs[e - s.start] = LaurentExpr(q[k]) * scale;
  }
  return s;
}

}  // namespace laumon
