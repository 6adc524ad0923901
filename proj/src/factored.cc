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

#include "laumon/factored.h"

#include <algorithm>
#include <stdexcept>

namespace laumon {

Factored::Factored(const Rational& c) : coeff_(c), mono_(ZeroExponents()) {}

Factored Factored::Monomial(const Exponents& e, const Rational& c) {
  Factored f(c);
  if (c != 0) f.mono_ = e;
  return f;
}

Factored Factored::OneMinus(const Exponents& alpha) {
  Factored f;
  f.MultiplyBinomial(alpha, 1);
  return f;
}

void Factored::MultiplyBinomial(const Exponents& alpha, int k) {
  if (k == 0 || coeff_ == 0) return;
  if (laumon::IsZero(alpha)) {
    if (k < 0) throw std::domain_error("division by zero expression");
    *this = Factored(0);
    return;
  }
  Exponents key = alpha;
  if (!GrlexGreater(alpha, ZeroExponents())) {
    // 1 - x^a = -x^a (1 - x^-a)
    key = Neg(alpha);
    if (k % 2 != 0) coeff_ = -coeff_;
    mono_ = Add(mono_, Scale(alpha, k));
  }
  int& slot = binomials_[key];
  slot += k;
  if (slot == 0) binomials_.erase(key);
}

Factored Factored::operator*(const Factored& b) const {
  if (IsZero() || b.IsZero()) return Factored(0);
  Factored r = *this;
  r.coeff_ *= b.coeff_;
  r.mono_ = Add(r.mono_, b.mono_);
  for (const auto& [a, k] : b.binomials_) {
    int& slot = r.binomials_[a];
    slot += k;
    if (slot == 0) r.binomials_.erase(a);
  }
  return r;
}

Factored Factored::Inverse() const {
  if (IsZero()) throw std::domain_error("division by zero expression");
  Factored r;
  r.coeff_ = 1 / coeff_;
  r.mono_ = Neg(mono_);
  for (const auto& [a, k] : binomials_) r.binomials_[a] = -k;
  return r;
}

Factored Factored::operator/(const Factored& b) const { return *this * b.Inverse(); }

Factored Factored::operator-() const {
  Factored r = *this;
  r.coeff_ = -r.coeff_;
  return r;
}

Factored Factored::Power(int k) const {
  if (k == 0) return Factored(1);
  if (IsZero()) {
    if (k < 0) throw std::domain_error("division by zero expression");
    return Factored(0);
  }
  Factored r;
  r.coeff_ = Pow(coeff_, k);
  r.mono_ = Scale(mono_, k);
  for (const auto& [a, m] : binomials_) r.binomials_[a] = CheckedMul(m, k);
  return r;
}

Factored Factored::ScaleVar(int var, const Exponents& m) const {
  if (IsZero()) return *this;
  Factored r = Monomial(Add(mono_, Scale(m, mono_[var])), coeff_);
  for (const auto& [a, k] : binomials_) {
    r.MultiplyBinomial(Add(a, Scale(m, a[var])), k);
  }
  return r;
}

Rational Factored::Evaluate(const Point& p) const {
  if (IsZero()) return Rational(0);
  Rational den(1), num = coeff_ * p.Monomial(mono_);
  for (const auto& [a, k] : binomials_) {
    Rational x = 1 - p.Monomial(a);
    if (k < 0) {
      if (x == 0) throw VanishingDenominator();
      den *= Pow(x, -k);
    } else {
      num *= Pow(x, k);
    }
  }
  return num / den;
}

std::string Factored::ToString() const {
  std::string s = coeff_.get_str();
  if (!laumon::IsZero(mono_)) s += "*" + MonomialString(mono_);
  for (const auto& [a, k] : binomials_) {
    s += "*(1 - " + MonomialString(a) + ")^" + std::to_string(k);
  }
  return s;
}

LaurentExpr Factored::ToExpr() const { return SumToExpr({*this}); }

LaurentExpr SumToExpr(const std::vector<Factored>& terms) {
  struct Net {
    Rational coeff;
    Exponents mono;
    std::map<Factor, int> mult;
  };
  std::vector<Net> nets;
  std::map<Factor, int> lcm;
  std::map<Exponents, Splitting> splits;
  for (const Factored& t : terms) {
    if (t.IsZero()) continue;
    Net n{t.coeff(), t.mono(), {}};
    for (const auto& [a, k] : t.binomials()) {
      auto it = splits.find(a);
      if (it == splits.end()) it = splits.emplace(a, SplitBinomial(a, -1)).first;
      const Splitting& s = it->second;
      n.coeff *= Pow(s.coeff, k);
      n.mono = Add(n.mono, Scale(s.mono, k));
      for (const auto& [f, m] : s.factors) n.mult[f] += m * k;
    }
    for (const auto& [f, m] : n.mult) {
      if (m < 0) {
        int& slot = lcm[f];
        slot = std::max(slot, -m);
      }
    }
    nets.push_back(std::move(n));
  }
  std::map<std::pair<Factor, int>, Polynomial> powers;
  auto power = [&](const Factor& f, int k) -> const Polynomial& {
    auto key = std::make_pair(f, k);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, f.poly().Power(k)).first;
    return it->second;
  };
  Polynomial num;
  for (const Net& n : nets) {
    Polynomial p = Polynomial::Monomial(n.mono, n.coeff);
    for (const auto& [f, m] : n.mult) {
      auto it = lcm.find(f);
      int e = m + (it == lcm.end() ? 0 : it->second);
      if (e > 0) p *= power(f, e);
    }
    for (const auto& [f, l] : lcm) {
      if (n.mult.count(f) == 0) p *= power(f, l);
    }
    num += p;
  }
  return LaurentExpr::FromParts(std::move(num), std::move(lcm));
}

}  // namespace laumon
