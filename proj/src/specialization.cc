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

#include "laumon/specialization.h"

#include <algorithm>

#include "laumon/parallel.h"
#include "laumon/toroidal_action.h"

namespace laumon {

std::string LevelWeight::ToString() const {
  std::string s = "(";
  for (size_t k = 0; k < mu.size(); ++k) s += (k ? "," : "") + std::to_string(mu[k]);
  return s + ")";
}

void ValidateLevelWeight(const LevelWeight& w) {
  if (w.n < 1 || static_cast<int>(w.mu.size()) != w.n) {
    throw std::invalid_argument("weight needs n entries (mu_{1-n}, ..., mu_0)");
  }
  if (w.level < 1) throw std::invalid_argument("level must be positive");
  for (int k = 0; k + 1 < w.n; ++k) {
    if (w.mu[k] < w.mu[k + 1]) throw std::invalid_argument("weight " + w.ToString() + " is not dominant");
  }
  if (w.mu[w.n - 1] + w.level < w.mu[0]) {
    throw std::invalid_argument("weight " + w.ToString() + " exceeds the level");
  }
}

ExtendedWeight::ExtendedWeight(const LevelWeight& w) : w_(w) { ValidateLevelWeight(w); }

int64_t ExtendedWeight::operator()(int64_t i) const {
  int n = w_.n;
  // Representative r in {1-n, ..., 0}; mu[0] holds mu_{1-n}.
  int64_t r = ModRep(i, n) - n;
  return w_.mu[r + n - 1] + FloorDiv(-i, n) * w_.level;
}

ExtendedWeight ExtendWeight(const LevelWeight& w) { return ExtendedWeight(w); }

namespace {

bool Holds(const AffinePattern& p, const ExtendedWeight& mt, int64_t i, int64_t j, int64_t l) {
  return p.d(i, j) - mt(j) <= p.d(i + l, j + l) - mt(j + l);
}

void CheckN(const AffinePattern& p, const LevelWeight& w) {
  if (p.n() != w.n) throw std::invalid_argument("pattern and weight have different n");
}

}  // namespace

bool InDMu(const AffinePattern& p, const LevelWeight& w) {
  CheckN(p, w);
  ExtendedWeight mt(w);
  int n = p.n();
  for (int64_t j = 1; j <= n; ++j) {
    for (int64_t i = j; p.d(i, j) > 0; ++i) {
      for (int64_t l = 1; l < n; ++l) {
        if (!Holds(p, mt, i, j, l)) return false;
      }
    }
  }
  return true;
}

bool InDMuBruteForce(const AffinePattern& p, const LevelWeight& w, int64_t bound) {
  CheckN(p, w);
  ExtendedWeight mt(w);
  int n = p.n();
  for (int64_t j = 1; j <= n; ++j) {
    for (int64_t i = j; i <= j + p.MaxLength() + bound; ++i) {
      for (int64_t l = 0; l <= bound; ++l) {
        if (!Holds(p, mt, i, j, l)) return false;
      }
    }
  }
  return true;
}

// VPolynomial

VPolynomial::VPolynomial(const Rational& c, int64_t k) : low_(k) {
  if (c != 0) coeffs_.push_back(c);
  Trim();
}

void VPolynomial::Trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  size_t z = 0;
  while (z < coeffs_.size() && coeffs_[z] == 0) ++z;
  if (z > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(z));
    low_ += static_cast<int64_t>(z);
  }
  if (coeffs_.empty()) low_ = 0;
}

Rational VPolynomial::Coeff(int64_t k) const {
  if (IsZero() || k < low_ || k > high()) return 0;
  return coeffs_[static_cast<size_t>(k - low_)];
}

VPolynomial VPolynomial::operator+(const VPolynomial& b) const {
  if (IsZero()) return b;
  if (b.IsZero()) return *this;
  VPolynomial out;
  out.low_ = std::min(low_, b.low_);
  int64_t hi = std::max(high(), b.high());
  out.coeffs_.assign(static_cast<size_t>(hi - out.low_ + 1), Rational(0));
  for (size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k + static_cast<size_t>(low_ - out.low_)] += coeffs_[k];
  for (size_t k = 0; k < b.coeffs_.size(); ++k) {
    out.coeffs_[k + static_cast<size_t>(b.low_ - out.low_)] += b.coeffs_[k];
  }
  out.Trim();
  return out;
}

VPolynomial VPolynomial::operator-(const VPolynomial& b) const { return *this + b.Scaled(-1); }

VPolynomial VPolynomial::operator*(const VPolynomial& b) const {
  if (IsZero() || b.IsZero()) return {};
  VPolynomial out;
  out.low_ = low_ + b.low_;
  out.coeffs_.assign(coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (size_t x = 0; x < coeffs_.size(); ++x) {
    for (size_t y = 0; y < b.coeffs_.size(); ++y) out.coeffs_[x + y] += coeffs_[x] * b.coeffs_[y];
  }
  out.Trim();
  return out;
}

VPolynomial VPolynomial::Shift(int64_t k) const {
  VPolynomial out = *this;
  if (!out.IsZero()) out.low_ += k;
  return out;
}

VPolynomial VPolynomial::Scaled(const Rational& c) const {
  if (c == 0) return {};
  VPolynomial out = *this;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

Rational VPolynomial::Evaluate(const Rational& v) const {
  Rational acc(0);
  for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * v + coeffs_[k];
  return acc * Pow(v, low_);
}

std::string VPolynomial::ToString() const {
  if (IsZero()) return "0";
  std::string s;
  for (int64_t k = high(); k >= low_; --k) {
    Rational c = Coeff(k);
    if (c == 0) continue;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    std::string mono = k == 0 ? "" : (k == 1 ? "v" : "v^" + std::to_string(k));
    if (mono.empty()) {
      s += a.get_str();
    } else {
      if (a != 1) s += a.get_str() + "*";
      s += mono;
    }
  }
  return s;
}

void VPolynomial::DivMod(const VPolynomial& a, const VPolynomial& b, VPolynomial* q, VPolynomial* r) {
  if (b.IsZero()) throw std::domain_error("division by zero polynomial");
  if (a.low_ < 0 || b.low_ < 0) throw std::invalid_argument("DivMod needs polynomials");
  VPolynomial rem = a;
  VPolynomial quo;
  while (!rem.IsZero() && rem.high() >= b.high()) {
    VPolynomial t(rem.Leading() / b.Leading(), rem.high() - b.high());
    quo = quo + t;
    rem = rem - t * b;
  }
  *q = quo;
  *r = rem;
}

VPolynomial VPolynomial::Gcd(VPolynomial a, VPolynomial b) {
  while (!b.IsZero()) {
    VPolynomial q, r;
    DivMod(a, b, &q, &r);
    a = b;
    b = r;
  }
  if (a.IsZero()) return a;
  return a.Scaled(1 / a.Leading());
}

// SpecializedExpr

SpecializedExpr SpecializedExpr::FromParts(VPolynomial num, VPolynomial den) {
  if (den.IsZero()) throw std::domain_error("zero denominator");
  SpecializedExpr out;
  if (num.IsZero()) return out;
  // Fold v-powers of the denominator into the numerator.
  num = num.Shift(-den.low());
  den = den.Shift(-den.low());
  int64_t nlow = num.low();
  VPolynomial g = VPolynomial::Gcd(num.Shift(-nlow), den);
  VPolynomial q, r;
  VPolynomial::DivMod(num.Shift(-nlow), g, &q, &r);
  num = q.Shift(nlow);
  VPolynomial::DivMod(den, g, &q, &r);
  den = q;
  Rational lead = den.Leading();
  out.num_ = num.Scaled(1 / lead);
  out.den_ = den.Scaled(1 / lead);
  return out;
}

SpecializedExpr SpecializedExpr::operator+(const SpecializedExpr& b) const {
  return FromParts(num_ * b.den_ + b.num_ * den_, den_ * b.den_);
}

SpecializedExpr SpecializedExpr::operator-(const SpecializedExpr& b) const {
  return FromParts(num_ * b.den_ - b.num_ * den_, den_ * b.den_);
}

SpecializedExpr SpecializedExpr::operator*(const SpecializedExpr& b) const {
  return FromParts(num_ * b.num_, den_ * b.den_);
}

SpecializedExpr SpecializedExpr::operator/(const SpecializedExpr& b) const {
  return FromParts(num_ * b.den_, den_ * b.num_);
}

Rational SpecializedExpr::Evaluate(const Rational& v) const {
  Rational d = den_.Evaluate(v);
  if (d == 0) throw std::domain_error("specialized denominator vanishes at v = " + v.get_str());
  return num_.Evaluate(v) / d;
}

std::string SpecializedExpr::ToString() const {
  if (den_ == VPolynomial(Rational(1))) return num_.ToString();
  return "(" + num_.ToString() + ")/(" + den_.ToString() + ")";
}

// Specialization

int64_t Specialization::TExponent(int j) const { return ExtendedWeight(weight)(j) - j + 1; }

int64_t Specialization::VExponent(const Exponents& e) const {
  if (e[kZ] != 0) throw std::invalid_argument("cannot specialize an expression in z");
  int64_t k = e[kV] + UExponent() * e[kU];
  for (int j = 1; j <= kMaxT; ++j) {
    if (e[TVar(j)] == 0) continue;
    if (j > weight.n) throw std::invalid_argument("t" + std::to_string(j) + " outside 1..n");
    k += TExponent(j) * e[TVar(j)];
  }
  return k;
}

namespace {

VPolynomial SpecializePoly(const Polynomial& p, const Specialization& s) {
  VPolynomial out;
  for (const auto& t : p.terms()) out = out + VPolynomial(t.coeff, s.VExponent(t.exp));
  return out;
}

// 1 - v^k
VPolynomial OneMinusV(int64_t k) { return VPolynomial(Rational(1)) - VPolynomial(Rational(1), k); }

}  // namespace

SpecializedExpr Specialize(const LaurentExpr& x, const Specialization& s) {
  VPolynomial den(Rational(1));
  for (const auto& [f, k] : x.denominator()) {
    VPolynomial fv = SpecializePoly(f.poly(), s);
    if (fv.IsZero()) throw SpecializationError("denominator factor " + f.ToString() + " vanishes");
    for (int m = 0; m < k; ++m) den = den * fv;
  }
  return SpecializedExpr::FromParts(SpecializePoly(x.numerator(), s), den);
}

ProductZeros CountZeros(const ProductForm& f, const Specialization& s) {
  ProductZeros z;
  for (const auto& a : f.num) z.num += s.VExponent(a) == 0;
  for (const auto& b : f.den) z.den += s.VExponent(b) == 0;
  return z;
}

SpecializedExpr SpecializeProduct(const ProductForm& f, const Specialization& s) {
  VPolynomial num(f.coeff, s.VExponent(f.mono));
  VPolynomial den(Rational(1));
  for (const auto& a : f.num) num = num * OneMinusV(s.VExponent(a));
  for (const auto& b : f.den) {
    int64_t k = s.VExponent(b);
    if (k == 0) throw SpecializationError("denominator factor (1 - " + MonomialString(b) + ") vanishes");
    den = den * OneMinusV(k);
  }
  return SpecializedExpr::FromParts(num, den);
}

namespace {

AffinePattern MoveTarget(OpKind kind, const AffinePattern& src, int64_t i, int64_t j) {
  for (const auto& mv : NeighborsAffine(src, i, kind == OpKind::kF ? 1 : -1)) {
    if (mv.j == j) return mv.target;
  }
  throw std::invalid_argument("invalid affine move");
}

}  // namespace

SpecializedExpr RenormCoeff(OpKind kind, const AffinePattern& src, int64_t i, int64_t j, int r,
                            const Specialization& s) {
  if (kind == OpKind::kT) throw std::invalid_argument("RenormCoeff takes e or f");
  return SpecializeProduct(RenormalizedProduct(kind, MoveTarget(kind, src, i, j), i, j, r), s);
}

void ClosureReport::Merge(const ClosureReport& b) {
  internal += b.internal;
  crossing += b.crossing;
  denominator_violations += b.denominator_violations;
  numerator_violations += b.numerator_violations;
  if (first_violation.empty()) first_violation = b.first_violation;
}

VmuBlock BuildVmuBlock(const Specialization& s, const std::vector<int>& degree, int window) {
  const LevelWeight& w = s.weight;
  ValidateLevelWeight(w);
  if (w.n < 3) throw std::invalid_argument("V(mu) blocks need n >= 3");
  VmuBlock block;
  block.degree = degree;
  for (auto& p : EnumerateAffine(w.n, degree)) {
    ++block.all_patterns;
    if (InDMu(p, w)) block.basis.push_back(std::move(p));
  }
  ClosureReport& c = block.closure;
  auto violation = [&](const std::string& what, const AffinePattern& src, OpKind kind, int64_t i,
                       const AffinePattern& tgt) {
    if (c.first_violation.empty()) {
      c.first_violation = what + ": " + std::string(kind == OpKind::kE ? "e" : "f") + "_" + std::to_string(i) + " " + src.ToString() +
                          " -> " + tgt.ToString();
    }
  };
  for (size_t b = 0; b < block.basis.size(); ++b) {
    const AffinePattern& src = block.basis[b];
    for (int i = 1; i <= w.n; ++i) {
      for (OpKind kind : {OpKind::kE, OpKind::kF}) {
        for (const auto& mv : NeighborsAffine(src, i, kind == OpKind::kF ? 1 : -1)) {
          // Zero factors do not depend on the mode; r = 0 decides closure.
          ProductZeros z = CountZeros(RenormalizedProduct(kind, mv.target, i, mv.j, 0), s);
          if (InDMu(mv.target, w)) {
            ++c.internal;
            if (z.den > 0) {
              ++c.denominator_violations;
              violation("vanishing denominator", src, kind, i, mv.target);
              continue;
            }
            for (int r = -window; r <= window; ++r) {
              SpecializedExpr x = RenormCoeff(kind, src, i, mv.j, r, s);
              block.entries.push_back({kind, i, r, static_cast<int>(b), mv.target, x});
            }
          } else {
            ++c.crossing;
            if (z.den > 0 || z.num == 0) {
              ++c.numerator_violations;
              violation("nonvanishing coefficient leaves D(mu)", src, kind, i, mv.target);
            }
          }
        }
      }
    }
  }
  return block;
}

std::vector<VmuBlock> SpecializeCharacter(const Specialization& s, int max_total, int window, int workers) {
  std::vector<std::vector<int>> degrees = DegreeVectorsUpTo(s.weight.n, max_total);
  return ParallelMap<VmuBlock>(degrees.size(), workers, [&](size_t k) {
    VmuBlock b = BuildVmuBlock(s, degrees[k], window);
    b.entries.clear();
    return b;
  });
}

nlohmann::json ToJson(const ClosureReport& c) {
  nlohmann::json j;
  j["status"] = c.pass() ? "pass" : "fail";
  j["internal"] = c.internal;
  j["crossing"] = c.crossing;
  j["denominator_violations"] = c.denominator_violations;
  j["numerator_violations"] = c.numerator_violations;
  if (!c.first_violation.empty()) j["first_violation"] = c.first_violation;
  return j;
}

nlohmann::json CharacterJson(const Specialization& s, int max_total, int window,
                             const std::vector<VmuBlock>& blocks) {
  nlohmann::json j;
  j["n"] = s.weight.n;
  j["level"] = s.weight.level;
  j["mu"] = s.weight.mu;
  j["u_exponent"] = s.UExponent();
  j["max_degree"] = max_total;
  j["window"] = window;
  ClosureReport total;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& b : blocks) {
    nlohmann::json row;
    row["degree"] = b.degree;
    row["patterns"] = b.all_patterns;
    row["basis_size"] = b.basis.size();
    row["closure"] = ToJson(b.closure);
    rows.push_back(row);
    total.Merge(b.closure);
  }
  j["blocks"] = rows;
  j["closure"] = ToJson(total);
  return j;
}

}  // namespace laumon
