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

#include "laumon/tangent_oracle.h"

#include <stdexcept>

#include "laumon/toroidal_action.h"

namespace laumon {
namespace {

// Signed monomial sums before conversion to a multiset.
using Character = std::map<Exponents, int>;

class Builder {
 public:
  explicit Builder(const AffinePattern& p) : p_(p), n_(p.n()) {}

  // (t_a / t_b)^2 u^{2 floor(-b/n) - 2 floor(-a/n)} v^vexp
  Exponents Weight(int64_t a, int64_t b, int vexp) const {
    Exponents e = ZeroExponents();
    e[TVar(ModRep(a, n_))] += 2;
    e[TVar(ModRep(b, n_))] -= 2;
    e[kU] = static_cast<int32_t>(2 * FloorDiv(-b, n_) - 2 * FloorDiv(-a, n_));
    e[kV] = vexp;
    return e;
  }
  void Add(const Exponents& w, int m) {
    int& slot = ch_[w];
    slot += m;
    if (slot == 0) ch_.erase(w);
  }
  int d(int64_t i, int64_t j) const { return p_.d(i, j); }
  int64_t Reach() const { return p_.MaxLength() + n_ + 2; }
  const Character& character() const { return ch_; }

 private:
  const AffinePattern& p_;
  int n_;
  Character ch_;
};

void SpaceTerms(Builder* b, int n) {
  int64_t L = b->Reach();
  for (int64_t k = 1; k <= n; ++k) {
    // v^2 (v^{2a} - 1)(v^{-2c} - 1) / (v^2 - 1) = sum_{x<a} (v^{2+2x-2c} - v^{2+2x})
    for (int64_t l = k - L; l <= k; ++l) {
      int c = b->d(k, l);
      if (c == 0) continue;
      for (int64_t lp = k - 1 - L; lp <= k - 1; ++lp) {
        int a = b->d(k - 1, lp);
        for (int x = 0; x < a; ++x) {
          b->Add(b->Weight(l, lp, 2 + 2 * x - 2 * c), 1);
          b->Add(b->Weight(l, lp, 2 + 2 * x), -1);
        }
      }
      for (int64_t lp = k - L; lp <= k; ++lp) {
        int a = b->d(k, lp);
        for (int x = 0; x < a; ++x) {
          b->Add(b->Weight(l, lp, 2 + 2 * x - 2 * c), -1);
          b->Add(b->Weight(l, lp, 2 + 2 * x), 1);
        }
      }
      // -v^2 (v^{-2c} - 1) / (v^2 - 1) = sum_{y<c} v^{-2y}
      for (int y = 0; y < c; ++y) b->Add(b->Weight(l, k, -2 * y), 1);
    }
    for (int64_t lp = k - 1 - L; lp <= k - 1; ++lp) {
      int a = b->d(k - 1, lp);
      for (int x = 0; x < a; ++x) b->Add(b->Weight(k, lp, 2 + 2 * x), 1);
    }
  }
}

WeightMultiset ToMultiset(const Character& ch) {
  WeightMultiset out;
  for (const auto& [w, m] : ch) {
    if (m <= 0) throw std::logic_error("character cancellation left multiplicity " + std::to_string(m));
    if (IsZero(w)) throw std::logic_error("unit weight in tangent character");
    out[w] = m;
  }
  return out;
}

Factored Mono(const Exponents& e, const Rational& c = 1) { return Factored::Monomial(e, c); }
Exponents V(int k) { return UnitExponents(kV, k); }

const AffinePattern& Smaller(OpKind kind, const AffinePattern& src, const AffinePattern& tgt) {
  return kind == OpKind::kF ? src : tgt;
}

AffinePattern Target(OpKind kind, const AffinePattern& src, int64_t i, int64_t j) {
  int dir = kind == OpKind::kF ? 1 : -1;
  for (const auto& mv : NeighborsAffine(src, i, dir)) {
    if (mv.j == j) return mv.target;
  }
  throw std::invalid_argument("invalid affine move");
}

Exponents TJ(const AffinePattern& p, int64_t j, int vexp) {
  Exponents e = ZeroExponents();
  e[TVar(ModRep(j, p.n()))] = 2;
  e[kU] = static_cast<int32_t>(2 * CeilDiv(j, p.n()));
  e[kV] = vexp;
  return e;
}

}  // namespace

int64_t WeightCount(const WeightMultiset& w) {
  int64_t s = 0;
  for (const auto& [e, m] : w) s += m;
  return s;
}

std::string WeightString(const WeightMultiset& w) {
  std::string s;
  for (const auto& [e, m] : w) {
    if (!s.empty()) s += "; ";
    s += MonomialString(e) + " x" + std::to_string(m);
  }
  return s;
}

WeightMultiset TangentCharacterSpace(const AffinePattern& p) {
  Builder b(p);
  SpaceTerms(&b, p.n());
  return ToMultiset(b.character());
}

WeightMultiset TangentCharacterCorrespondence(const AffinePattern& small, int64_t i, int64_t j) {
  Target(OpKind::kF, small, i, j);
  Builder b(small);
  SpaceTerms(&b, small.n());
  int dij = b.d(i, j);
  b.Add(V(2), 1);
  // For j = i both terms refer to the same undefined entry and cancel.
  if (j <= i - 1) {
    b.Add(V(-2 * dij + 2 * b.d(i - 1, j)), -1);
    b.Add(b.Weight(j, i, -2 * dij + 2 * b.d(i, i)), 1);
  }
  for (int64_t k = i - 1 - b.Reach(); k <= i - 1; ++k) {
    if (k == j || b.d(i, k) == b.d(i - 1, k)) continue;
    b.Add(b.Weight(j, k, -2 * dij + 2 * b.d(i, k)), 1);
    b.Add(b.Weight(j, k, -2 * dij + 2 * b.d(i - 1, k)), -1);
  }
  return ToMultiset(b.character());
}

Factored LambdaProduct(const WeightMultiset& w) {
  Factored c;
  for (const auto& [e, m] : w) c *= Factored::OneMinus(e).Power(m);
  return c;
}

Factored CNorm(const AffinePattern& p) { return LambdaProduct(TangentCharacterSpace(p)); }

Factored WeightProduct(const AffinePattern& p) {
  Exponents e = ZeroExponents();
  for (const auto& [w, m] : TangentCharacterSpace(p)) e = Add(e, Scale(w, m));
  return Mono(e);
}

Factored BottCoefficient(OpKind kind, const AffinePattern& src, int64_t i, int64_t j, int r) {
  if (src.n() < 3) throw std::invalid_argument("Bott oracle needs n >= 3");
  AffinePattern tgt = Target(kind, src, i, j);
  // d is the smaller pattern of the pair throughout.
  const AffinePattern& d = Smaller(kind, src, tgt);
  int ii = static_cast<int>(i);
  Factored pre;
  if (kind == OpKind::kE) {
    pre = Mono(Add(Neg(AffineT(d.n(), i + 1)), V(d.Degree(i + 1) - d.Degree(i) - ii)));
    pre *= Mono(Scale(TJ(d, j, -2 * d.d(i, j) + ii), r));
  } else {
    // The display reads the larger pattern d' = d + box.
    const AffinePattern& big = tgt;
    Exponents L = TJ(big, j, -2 * big.d(i, j) + 2);
    pre = Mono(Add(Neg(AffineT(d.n(), i)), V(big.Degree(i) - big.Degree(i - 1) - 2 + ii)), -1);
    pre *= Mono(L) * Mono(Scale(Add(L, V(ii)), r));
  }
  return pre * LambdaProduct(TangentCharacterSpace(src)) /
         LambdaProduct(TangentCharacterCorrespondence(d, i, j));
}

Factored RenormalizedCoeff(OpKind kind, const AffinePattern& src, int64_t i, int64_t j, int r) {
  AffinePattern tgt = Target(kind, src, i, j);
  Factored plain = kind == OpKind::kE ? EModeCoeffAffine(src, i, j, r) : FModeCoeffAffine(src, i, j, r);
  return plain * CNorm(tgt) / CNorm(src);
}

Factored ProductForm::ToFactored() const {
  Factored c = Factored::Monomial(mono, coeff);
  for (const auto& a : num) c *= Factored::OneMinus(a);
  for (const auto& b : den) c /= Factored::OneMinus(b);
  return c;
}

ProductForm RenormalizedProduct(OpKind kind, const AffinePattern& d, int64_t i, int64_t j, int r) {
  int ii = static_cast<int>(i);
  Exponents pij = PWeight(d, i, j);
  int64_t k0 = DefaultCutoff(d, i);
  ProductForm f;
  f.den.push_back(V(2));
  if (kind == OpKind::kE) {
    f.mono = Add(Neg(AffineT(d.n(), i + 1)), V(d.Degree(i + 1) - d.Degree(i) - ii));
    f.mono = Add(f.mono, Scale(Add(pij, V(ii)), r));
    for (int64_t k = k0; k <= i; ++k) {
      if (k != j) f.den.push_back(Sub(pij, PWeight(d, i, k)));
    }
    for (int64_t k = k0; k <= i - 1; ++k) f.num.push_back(Sub(pij, PWeight(d, i - 1, k)));
    return f;
  }
  f.coeff = -1;
  f.mono = Add(Add(Neg(AffineT(d.n(), i)), V(d.Degree(i) - d.Degree(i - 1) + ii)), pij);
  f.mono = Add(f.mono, Scale(Add(pij, V(ii + 2)), r));
  for (int64_t k = k0; k <= i; ++k) {
    if (k != j) f.den.push_back(Sub(PWeight(d, i, k), pij));
  }
  for (int64_t k = k0; k <= i + 1; ++k) f.num.push_back(Sub(PWeight(d, i + 1, k), pij));
  return f;
}

Factored RenormalizedClosedE(const AffinePattern& d, int64_t i, int64_t j, int r) {
  return RenormalizedProduct(OpKind::kE, d, i, j, r).ToFactored();
}

Factored RenormalizedClosedF(const AffinePattern& d, int64_t i, int64_t j, int r) {
  return RenormalizedProduct(OpKind::kF, d, i, j, r).ToFactored();
}

Factored RenormalizedFromAdjoint(OpKind kind, const AffinePattern& src, int64_t i, int64_t j, int r) {
  AffinePattern tgt = Target(kind, src, i, j);
  const AffinePattern& d = Smaller(kind, src, tgt);
  int ii = static_cast<int>(i);
  int D = d.Degree(i + 1) - 2 * d.Degree(i) + d.Degree(i - 1);
  Exponents tt = Sub(AffineT(d.n(), i), AffineT(d.n(), i + 1));
  Exponents p = PWeight(d, i, j);
  if (kind == OpKind::kE) {
    // e from the larger src down to d, via f from d up to src.
    return -FModeCoeffAffine(d, i, j, r) * Mono(Sub(Add(tt, V(D + 1 - 2 * ii)), p));
  }
  return -EModeCoeffAffine(tgt, i, j, r) * Mono(Add(Add(Neg(tt), V(-D + 2 * ii - 1)), p));
}

}  // namespace laumon
