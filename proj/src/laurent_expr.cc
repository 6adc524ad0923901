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

#include "laumon/laurent_expr.h"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <stdexcept>

namespace laumon {

namespace {

using Univariate = std::vector<Rational>;  // low degree first

void Trim(Univariate* p) {
  while (!p->empty() && p->back() == 0) p->pop_back();
}

// Returns quotient if d divides a exactly.
std::optional<Univariate> DivideUnivariate(const Univariate& a, const Univariate& d) {
  Univariate rem = a;
  Trim(&rem);
  if (rem.size() < d.size()) {
    if (rem.empty()) return Univariate();
    return std::nullopt;
  }
  Univariate q(rem.size() - d.size() + 1);
  for (size_t k = q.size(); k-- > 0;) {
    Rational c = rem[k + d.size() - 1] / d.back();
    q[k] = c;
    if (c == 0) continue;
    for (size_t j = 0; j < d.size(); ++j) rem[k + j] -= c * d[j];
  }
  for (const Rational& x : rem) {
    if (x != 0) return std::nullopt;
  }
  return q;
}

Polynomial ExpandInBase(const Univariate& coeffs, const Exponents& base) {
  std::vector<Polynomial::Term> ts;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] != 0) ts.push_back({Scale(base, static_cast<int32_t>(k)), coeffs[k]});
  }
  return Polynomial::FromTerms(std::move(ts));
}

void AddFactor(FactorMap* m, const Factor& f, int k) {
  if (k == 0) return;
  int& slot = (*m)[f];
  slot += k;
  if (slot == 0) m->erase(f);
}

// Removes from *den every factor that divides *num, as often as it does.
void Cancel(Polynomial* num, FactorMap* den) {
  if (num->IsZero()) {
    den->clear();
    return;
  }
  for (auto it = den->begin(); it != den->end();) {
    while (it->second > 0) {
      std::optional<Polynomial> q = num->DivideExact(it->first.poly());
      if (!q) break;
      *num = std::move(*q);
      --it->second;
    }
    if (it->second == 0) {
      it = den->erase(it);
    } else {
      ++it;
    }
  }
}

Polynomial FactorPower(const Factor& f, int k) { return f.poly().Power(k); }

}  // namespace

const std::vector<long>& CyclotomicCoefficients(int d) {
  static std::recursive_mutex mu;
  static std::map<int, std::vector<long>> cache;
  if (d < 1) throw std::invalid_argument("cyclotomic order must be positive");
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  // x^d - 1 divided by Phi_e for proper divisors e.
  std::vector<long> p(d + 1, 0);
  p[0] = -1;
  p[d] = 1;
  for (int e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    const std::vector<long>& phi = CyclotomicCoefficients(e);
    std::vector<long> q(p.size() - phi.size() + 1, 0);
    for (size_t k = q.size(); k-- > 0;) {
      long c = p[k + phi.size() - 1];  // phi is monic
      q[k] = c;
      for (size_t j = 0; j < phi.size(); ++j) p[k + j] -= c * phi[j];
    }
    p = q;
  }
  return cache.emplace(d, p).first->second;
}

Factor Factor::Cyclotomic(int order, const Exponents& base) {
  if (order < 1 || IsZero(base) || ContentGcd(base) != 1 ||
      !GrlexGreater(base, ZeroExponents())) {
    throw std::invalid_argument("bad cyclotomic factor");
  }
  Factor f;
  f.order_ = order;
  f.base_ = base;
  const std::vector<long>& c = CyclotomicCoefficients(order);
  Univariate u(c.begin(), c.end());
  f.poly_ = ExpandInBase(u, base);
  return f;
}

Factor Factor::Opaque(const Polynomial& p) {
  if (p.size() < 2) throw std::invalid_argument("opaque factor must be non-monomial");
  Factor f;
  f.poly_ = p;
  return f;
}

std::string Factor::ToString() const {
  if (is_cyclotomic()) {
    return "Phi" + std::to_string(order_) + "(" + MonomialString(base_) + ")";
  }
  return "{" + poly_.ToString() + "}";
}

bool Factor::operator<(const Factor& b) const {
  if (is_cyclotomic() != b.is_cyclotomic()) return is_cyclotomic();
  if (is_cyclotomic()) {
    if (order_ != b.order_) return order_ < b.order_;
    return base_ < b.base_;
  }
  return poly_ < b.poly_;
}

bool Factor::operator==(const Factor& b) const {
  if (is_cyclotomic() != b.is_cyclotomic()) return false;
  if (is_cyclotomic()) return order_ == b.order_ && base_ == b.base_;
  return poly_ == b.poly_;
}

Splitting SplitBinomial(const Exponents& alpha, int sign) {
  if (IsZero(alpha)) throw std::invalid_argument("binomial with zero exponent");
  int32_t g = ContentGcd(alpha);
  Exponents beta;
  for (int k = 0; k < kNumVars; ++k) beta[k] = alpha[k] / g;
  bool positive = GrlexGreater(beta, ZeroExponents());
  if (!positive) beta = Neg(beta);
  Splitting s;
  s.coeff = 1;
  s.mono = positive ? ZeroExponents() : alpha;
  if (sign < 0) {
    // y^g - 1 = prod_{d | g} Phi_d(y).
    if (positive) s.coeff = -1;
    for (int d = 1; d <= g; ++d) {
      if (g % d == 0) AddFactor(&s.factors, Factor::Cyclotomic(d, beta), 1);
    }
  } else {
    for (int d = 1; d <= 2 * g; ++d) {
      if ((2 * g) % d == 0 && g % d != 0) {
        AddFactor(&s.factors, Factor::Cyclotomic(d, beta), 1);
      }
    }
  }
  return s;
}

Splitting SplitPolynomial(const Polynomial& p) {
  if (p.IsZero()) throw std::domain_error("division by zero expression");
  Splitting s;
  if (p.IsMonomial()) {
    s.coeff = p.Leading().coeff;
    s.mono = p.Leading().exp;
    return s;
  }
  const auto& ts = p.terms();
  if (ts.size() == 2) {
    Rational ratio = ts[1].coeff / ts[0].coeff;
    if (ratio == 1 || ratio == -1) {
      s = SplitBinomial(Sub(ts[1].exp, ts[0].exp), ratio > 0 ? 1 : -1);
      s.coeff *= ts[0].coeff;
      s.mono = Add(s.mono, ts[0].exp);
      return s;
    }
  }
  Exponents m = p.MinExponents();
  Polynomial q = p.TimesMonomial(Neg(m));
  // Collinear support: q is a univariate polynomial in some x^beta.
  Exponents beta = ZeroExponents();
  for (const auto& t : q.terms()) {
    if (!IsZero(t.exp)) {
      int32_t g = ContentGcd(t.exp);
      for (int k = 0; k < kNumVars; ++k) beta[k] = t.exp[k] / g;
      break;
    }
  }
  if (!GrlexGreater(beta, ZeroExponents())) beta = Neg(beta);
  int lead_var = 0;
  while (beta[lead_var] == 0) ++lead_var;
  bool collinear = true;
  std::vector<std::pair<int32_t, Rational>> pts;
  for (const auto& t : q.terms()) {
    int32_t k = t.exp[lead_var] / beta[lead_var];
    if (Scale(beta, k) != t.exp) {
      collinear = false;
      break;
    }
    pts.push_back({k, t.coeff});
  }
  s.mono = m;
  if (collinear) {
    int32_t kmin = pts[0].first, kmax = pts[0].first;
    for (auto& [k, c] : pts) {
      kmin = std::min(kmin, k);
      kmax = std::max(kmax, k);
    }
    Univariate u(kmax - kmin + 1);
    for (auto& [k, c] : pts) u[k - kmin] = c;
    s.mono = Add(m, Scale(beta, kmin));
    for (int d = 1; u.size() > 1 && d <= 6 * static_cast<int>(u.size()) + 6; ++d) {
      const std::vector<long>& c = CyclotomicCoefficients(d);
      if (c.size() > u.size()) continue;
      Univariate phi(c.begin(), c.end());
      while (u.size() >= phi.size()) {
        std::optional<Univariate> quot = DivideUnivariate(u, phi);
        if (!quot) break;
        u = std::move(*quot);
        AddFactor(&s.factors, Factor::Cyclotomic(d, beta), 1);
      }
    }
    s.coeff = u.back();
    if (u.size() > 1) {
      for (Rational& x : u) x /= s.coeff;
      AddFactor(&s.factors, Factor::Opaque(ExpandInBase(u, beta)), 1);
    }
    return s;
  }
  s.coeff = q.Leading().coeff;
  AddFactor(&s.factors, Factor::Opaque(q.Scaled(1 / s.coeff)), 1);
  return s;
}

LaurentExpr::LaurentExpr(const Rational& c) : num_(c) {}

LaurentExpr::LaurentExpr(const Polynomial& p) : num_(p) {}

LaurentExpr LaurentExpr::Monomial(const Exponents& e, const Rational& c) {
  return LaurentExpr(Polynomial::Monomial(e, c));
}

LaurentExpr LaurentExpr::Variable(int var, int32_t power) {
  return LaurentExpr(Polynomial::Variable(var, power));
}

LaurentExpr LaurentExpr::FromParts(Polynomial num, FactorMap den) {
  LaurentExpr r;
  r.num_ = std::move(num);
  for (auto& [f, k] : den) {
    if (k < 0) throw std::invalid_argument("negative denominator multiplicity");
    if (k > 0) r.den_.emplace(f, k);
  }
  r.Reduce();
  return r;
}

void LaurentExpr::Reduce() { Cancel(&num_, &den_); }

Polynomial LaurentExpr::DenominatorPolynomial() const {
  Polynomial d(1);
  for (const auto& [f, k] : den_) d *= FactorPower(f, k);
  return d;
}

LaurentExpr LaurentExpr::operator-() const {
  LaurentExpr r = *this;
  r.num_ = -r.num_;
  return r;
}

LaurentExpr LaurentExpr::Plus(const LaurentExpr& b) const {
  if (IsZero()) return b;
  if (b.IsZero()) return *this;
  if (den_.empty() && b.den_.empty()) return LaurentExpr(num_ + b.num_);
  FactorMap lcm = den_;
  for (const auto& [f, k] : b.den_) {
    int& slot = lcm[f];
    slot = std::max(slot, k);
  }
  Polynomial ca(1), cb(1);
  for (const auto& [f, k] : lcm) {
    auto ia = den_.find(f);
    auto ib = b.den_.find(f);
    int ka = ia == den_.end() ? 0 : ia->second;
    int kb = ib == b.den_.end() ? 0 : ib->second;
    if (k > ka) ca *= FactorPower(f, k - ka);
    if (k > kb) cb *= FactorPower(f, k - kb);
  }
  return FromParts(num_ * ca + b.num_ * cb, std::move(lcm));
}

LaurentExpr LaurentExpr::Minus(const LaurentExpr& b) const { return Plus(-b); }

LaurentExpr LaurentExpr::Times(const LaurentExpr& b) const {
  if (IsZero() || b.IsZero()) return LaurentExpr();
  Polynomial na = num_, nb = b.num_;
  FactorMap da = den_, db = b.den_;
  Cancel(&na, &db);
  Cancel(&nb, &da);
  LaurentExpr r;
  r.num_ = na * nb;
  r.den_ = std::move(da);
  for (const auto& [f, k] : db) AddFactor(&r.den_, f, k);
  return r;
}

LaurentExpr LaurentExpr::Inverse() const {
  if (IsZero()) throw std::domain_error("division by zero expression");
  Splitting s = SplitPolynomial(num_);
  Polynomial num = Polynomial::Monomial(Neg(s.mono), 1 / s.coeff);
  for (const auto& [f, k] : den_) num *= FactorPower(f, k);
  return FromParts(std::move(num), std::move(s.factors));
}

LaurentExpr LaurentExpr::Over(const LaurentExpr& b) const {
  if (b.IsZero()) throw std::domain_error("division by zero expression");
  return *this * b.Inverse();
}

LaurentExpr LaurentExpr::Power(int k) const {
  if (k < 0) return Inverse().Power(-k);
  LaurentExpr r(1), base = *this;
  while (k) {
    if (k & 1) r *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return r;
}

LaurentExpr LaurentExpr::ScaleVar(int var, const Exponents& m) const {
  LaurentExpr r(num_.ScaleVar(var, m));
  for (const auto& [f, k] : den_) {
    r *= LaurentExpr(f.poly().ScaleVar(var, m)).Inverse().Power(k);
  }
  return r;
}

Rational LaurentExpr::Evaluate(const Point& p) const {
  Rational d(1);
  for (const auto& [f, k] : den_) {
    Rational x = f.poly().Evaluate(p);
    if (x == 0) throw VanishingDenominator();
    d *= Pow(x, k);
  }
  return num_.Evaluate(p) / d;
}

std::string LaurentExpr::ToString() const {
  if (den_.empty()) return num_.ToString();
  std::string s = "(" + num_.ToString() + ")/(";
  bool first = true;
  for (const auto& [f, k] : den_) {
    if (!first) s += "*";
    first = false;
    s += f.ToString();
    if (k != 1) s += "^" + std::to_string(k);
  }
  return s + ")";
}

bool LaurentExpr::operator==(const LaurentExpr& b) const {
  if (num_ == b.num_ && den_ == b.den_) return true;
  return (*this - b).IsZero();
}

// ---- Parsing of the canonical text form ----

namespace {

class Scanner {
 public:
  explicit Scanner(const std::string& s) : s_(s) {}

  void SkipSpace() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool AtEnd() {
    SkipSpace();
    return pos_ >= s_.size();
  }
  char Peek() {
    SkipSpace();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool Accept(char c) {
    if (Peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void Expect(char c) {
    if (!Accept(c)) Fail(std::string("expected '") + c + "'");
  }
  bool AcceptWord(const std::string& w) {
    SkipSpace();
    if (s_.compare(pos_, w.size(), w) == 0) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  std::string Digits() {
    SkipSpace();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) Fail("expected digits");
    return s_.substr(start, pos_ - start);
  }
  int32_t Integer() {
    bool neg = Accept('-');
    long long x = std::stoll(Digits());
    if (x > INT32_MAX) Fail("exponent too large");
    return static_cast<int32_t>(neg ? -x : x);
  }
  std::string Identifier() {
    SkipSpace();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }
  [[noreturn]] void Fail(const std::string& what) {
    throw std::invalid_argument("parse error at " + std::to_string(pos_) + ": " + what +
                                " in \"" + s_ + "\"");
  }

 private:
  const std::string& s_;
  size_t pos_ = 0;
};

Exponents ParseMonomialTail(Scanner* sc, Exponents e) {
  while (true) {
    std::string id = sc->Identifier();
    int var = VarIndex(id);
    if (var < 0) sc->Fail("unknown variable '" + id + "'");
    int32_t k = 1;
    if (sc->Accept('^')) k = sc->Integer();
    e[var] = CheckedAdd(e[var], k);
    if (!sc->Accept('*')) return e;
  }
}

Exponents ParseMonomial(Scanner* sc) {
  if (sc->Peek() == '1') {
    sc->Digits();
    return ZeroExponents();
  }
  return ParseMonomialTail(sc, ZeroExponents());
}

Polynomial ParsePolynomialFrom(Scanner* sc, char terminator) {
  std::vector<Polynomial::Term> ts;
  bool first = true;
  while (true) {
    char c = sc->Peek();
    if (c == terminator) break;
    int sign = 1;
    if (sc->Accept('-')) {
      sign = -1;
    } else if (!first) {
      sc->Expect('+');
    }
    first = false;
    Rational coeff(1);
    Exponents e = ZeroExponents();
    if (std::isdigit(static_cast<unsigned char>(sc->Peek()))) {
      std::string num = sc->Digits();
      std::string den = "1";
      if (sc->Accept('/')) den = sc->Digits();
      coeff = Rational(mpz_class(num), mpz_class(den));
      coeff.canonicalize();
      if (sc->Accept('*')) e = ParseMonomialTail(sc, e);
    } else {
      e = ParseMonomialTail(sc, e);
    }
    ts.push_back({e, sign * coeff});
  }
  if (ts.empty()) sc->Fail("empty polynomial");
  return Polynomial::FromTerms(std::move(ts));
}

}  // namespace

Polynomial ParsePolynomial(const std::string& s) {
  Scanner sc(s);
  Polynomial p = ParsePolynomialFrom(&sc, '\0');
  if (!sc.AtEnd()) sc.Fail("trailing input");
  return p;
}

LaurentExpr LaurentExpr::Parse(const std::string& s) {
  Scanner sc(s);
  if (!sc.Accept('(')) {
    Polynomial p = ParsePolynomialFrom(&sc, '\0');
    return LaurentExpr(p);
  }
  Polynomial num = ParsePolynomialFrom(&sc, ')');
  sc.Expect(')');
  sc.Expect('/');
  sc.Expect('(');
  FactorMap den;
  while (true) {
    Factor f;
    if (sc.AcceptWord("Phi")) {
      int d = std::stoi(sc.Digits());
      sc.Expect('(');
      Exponents base = ParseMonomial(&sc);
      sc.Expect(')');
      f = Factor::Cyclotomic(d, base);
    } else {
      sc.Expect('{');
      Polynomial p = ParsePolynomialFrom(&sc, '}');
      sc.Expect('}');
      f = Factor::Opaque(p);
    }
    int k = 1;
    if (sc.Accept('^')) k = sc.Integer();
    AddFactor(&den, f, k);
    if (!sc.Accept('*')) break;
  }
  sc.Expect(')');
  if (!sc.AtEnd()) sc.Fail("trailing input");
  return FromParts(std::move(num), std::move(den));
}

}  // namespace laumon
