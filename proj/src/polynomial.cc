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

#include "laumon/polynomial.h"

#include <algorithm>
#include <stdexcept>

namespace laumon {

namespace {

struct TermOrder {
  bool operator()(const Polynomial::Term& a, const Polynomial::Term& b) const {
    return GrlexGreater(a.exp, b.exp);
  }
};

// Merges a + sign * b, both sorted.
std::vector<Polynomial::Term> Merge(const std::vector<Polynomial::Term>& a,
                                    const std::vector<Polynomial::Term>& b,
                                    int sign) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && GrlexGreater(a[i].exp, b[j].exp))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || GrlexGreater(b[j].exp, a[i].exp)) {
      out.push_back({b[j].exp, sign > 0 ? b[j].coeff : Rational(-b[j].coeff)});
      ++j;
    } else {
      Rational c = a[i].coeff;
      if (sign > 0) {
        c += b[j].coeff;
      } else {
        c -= b[j].coeff;
      }
      if (c != 0) out.push_back({a[i].exp, c});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.push_back({ZeroExponents(), c});
}

Polynomial Polynomial::Monomial(const Exponents& e, const Rational& c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back({e, c});
  return p;
}

Polynomial Polynomial::Variable(int var, int32_t power) {
  return Monomial(UnitExponents(var, power));
}

Polynomial Polynomial::FromTerms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), TermOrder());
  Polynomial p;
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

bool Polynomial::IsConstant() const {
  return terms_.empty() || (terms_.size() == 1 && laumon::IsZero(terms_[0].exp));
}

Rational Polynomial::ConstantTerm() const {
  for (const Term& t : terms_) {
    if (laumon::IsZero(t.exp)) return t.coeff;
  }
  return Rational(0);
}

Polynomial Polynomial::operator-() const { return Scaled(-1); }

Polynomial Polynomial::operator+(const Polynomial& b) const {
  Polynomial p;
  p.terms_ = Merge(terms_, b.terms_, 1);
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& b) const {
  Polynomial p;
  p.terms_ = Merge(terms_, b.terms_, -1);
  return p;
}

Polynomial Polynomial::operator*(const Polynomial& b) const {
  if (IsZero() || b.IsZero()) return Polynomial();
  if (b.IsMonomial()) return TimesMonomial(b.terms_[0].exp, b.terms_[0].coeff);
  if (IsMonomial()) return b.TimesMonomial(terms_[0].exp, terms_[0].coeff);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * b.terms_.size());
  for (const Term& x : terms_) {
    for (const Term& y : b.terms_) {
      prod.push_back({Add(x.exp, y.exp), x.coeff * y.coeff});
    }
  }
  return FromTerms(std::move(prod));
}

Polynomial& Polynomial::operator+=(const Polynomial& b) { return *this = *this + b; }
Polynomial& Polynomial::operator-=(const Polynomial& b) { return *this = *this - b; }
Polynomial& Polynomial::operator*=(const Polynomial& b) { return *this = *this * b; }

Polynomial Polynomial::Scaled(const Rational& c) const {
  if (c == 0) return Polynomial();
  Polynomial p = *this;
  for (Term& t : p.terms_) t.coeff *= c;
  return p;
}

Polynomial Polynomial::TimesMonomial(const Exponents& e, const Rational& c) const {
  if (c == 0) return Polynomial();
  // Shifting by a fixed monomial preserves the graded-lex order.
  Polynomial p = *this;
  for (Term& t : p.terms_) {
    t.exp = Add(t.exp, e);
    t.coeff *= c;
  }
  return p;
}

Polynomial Polynomial::Power(unsigned k) const {
  Polynomial result(1), base = *this;
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

Exponents Polynomial::MinExponents() const {
  Exponents m = ZeroExponents();
  if (terms_.empty()) return m;
  m = terms_[0].exp;
  for (const Term& t : terms_) {
    for (int k = 0; k < kNumVars; ++k) m[k] = std::min(m[k], t.exp[k]);
  }
  return m;
}

std::optional<Polynomial> Polynomial::DivideExact(const Polynomial& divisor) const {
  if (divisor.IsZero()) throw std::domain_error("division by zero polynomial");
  if (IsZero()) return Polynomial();
  if (divisor.IsMonomial()) {
    const Term& d = divisor.terms_[0];
    return TimesMonomial(Neg(d.exp), 1 / d.coeff);
  }
  Exponents ma = MinExponents(), mb = divisor.MinExponents();
  Polynomial rem = TimesMonomial(Neg(ma));
  Polynomial b = divisor.TimesMonomial(Neg(mb));
  const Term& lead = b.terms_[0];
  std::vector<Term> quot;
  while (!rem.IsZero()) {
    const Term& lt = rem.terms_[0];
    Exponents diff = Sub(lt.exp, lead.exp);
    for (int32_t x : diff) {
      if (x < 0) return std::nullopt;
    }
    Rational c = lt.coeff / lead.coeff;
    quot.push_back({diff, c});
    rem -= b.TimesMonomial(diff, c);
  }
  Polynomial q = FromTerms(std::move(quot));
  return q.TimesMonomial(Sub(ma, mb));
}

std::map<int32_t, Polynomial> Polynomial::SplitByVar(int var) const {
  std::map<int32_t, std::vector<Term>> groups;
  for (const Term& t : terms_) {
    Term s = t;
    s.exp[var] = 0;
    groups[t.exp[var]].push_back(std::move(s));
  }
  std::map<int32_t, Polynomial> out;
  for (auto& [k, ts] : groups) out[k] = FromTerms(std::move(ts));
  return out;
}

Polynomial Polynomial::ScaleVar(int var, const Exponents& m) const {
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const Term& t : terms_) {
    ts.push_back({Add(t.exp, Scale(m, t.exp[var])), t.coeff});
  }
  return FromTerms(std::move(ts));
}

Rational Polynomial::Evaluate(const Point& p) const {
  Rational s(0);
  for (const Term& t : terms_) s += t.coeff * p.Monomial(t.exp);
  return s;
}

std::string Polynomial::ToString() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const Term& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    first = false;
    bool unit = laumon::IsZero(t.exp);
    if (unit) {
      s += c.get_str();
    } else {
      if (c != 1) s += c.get_str() + "*";
      s += MonomialString(t.exp);
    }
  }
  return s;
}

bool Polynomial::operator==(const Polynomial& b) const {
  if (terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].exp != b.terms_[i].exp || terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

bool Polynomial::operator<(const Polynomial& b) const {
  size_t n = std::min(terms_.size(), b.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    if (terms_[i].exp != b.terms_[i].exp) {
      return GrlexGreater(terms_[i].exp, b.terms_[i].exp);
    }
    if (terms_[i].coeff != b.terms_[i].coeff) return terms_[i].coeff < b.terms_[i].coeff;
  }
  return terms_.size() < b.terms_.size();
}

}  // namespace laumon
