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

#include "laumon/toroidal_action.h"

#include <stdexcept>
#include <string>

#include "laumon/series.h"

namespace laumon {
namespace {

Exponents V(int k) { return UnitExponents(kV, k); }
Exponents Zinv() { return UnitExponents(kZ, -1); }
Factored Mono(const Exponents& e, const Rational& c = 1) { return Factored::Monomial(e, c); }
Factored OneMinus(const Exponents& a) { return Factored::OneMinus(a); }

void CheckN(const AffinePattern& p) {
  if (p.n() < 3) throw std::invalid_argument("toroidal action needs n >= 3");
}

int64_t Cutoff(const AffinePattern& p, int64_t i, std::optional<int64_t> cutoff) {
  if (!cutoff) return DefaultCutoff(p, i);
  if (*cutoff > i - p.MaxLength()) throw std::invalid_argument("cutoff above the support");
  return *cutoff;
}

void CheckMove(const AffinePattern& src, int64_t i, int64_t j, int dir) {
  CheckN(src);
  for (const auto& mv : NeighborsAffine(src, i, dir)) {
    if (mv.j == j) return;
  }
  throw std::invalid_argument("invalid affine move at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
}

// Coefficient bodies with the t/u part of the prefactor supplied by the caller.
Factored FBody(const AffinePattern& src, int64_t i, int64_t j, int r, int64_t k0,
               const Exponents& tu) {
  Exponents pij = PWeight(src, i, j);
  Factored c = Mono(Add(Add(tu, V(src.Degree(i) - src.Degree(i - 1) - 1 + static_cast<int>(i))), pij), -1);
  c /= OneMinus(V(2));
  for (int64_t k = k0; k <= i; ++k) {
    if (k != j) c /= OneMinus(Sub(pij, PWeight(src, i, k)));
  }
  for (int64_t k = k0; k <= i - 1; ++k) c *= OneMinus(Sub(pij, PWeight(src, i - 1, k)));
  return c * Mono(Scale(FSpectralAffine(src, i, j), r));
}

Factored EBody(const AffinePattern& src, int64_t i, int64_t j, int r, int64_t k0,
               const Exponents& tu) {
  Exponents pij = PWeight(src, i, j);
  Factored c = Mono(Add(tu, V(src.Degree(i + 1) - src.Degree(i) + 1 - static_cast<int>(i))));
  c /= OneMinus(V(2));
  for (int64_t k = k0; k <= i; ++k) {
    if (k != j) c /= OneMinus(Sub(PWeight(src, i, k), pij));
  }
  for (int64_t k = k0; k <= i + 1; ++k) c *= OneMinus(Sub(PWeight(src, i + 1, k), pij));
  return c * Mono(Scale(ESpectralAffine(src, i, j), r));
}

}  // namespace

Exponents AffineT(int n, int64_t k) {
  Exponents e = UnitExponents(TVar(ModRep(k, n)));
  e[kU] = static_cast<int32_t>(FloorDiv(k - 1, n));
  return e;
}

int64_t DefaultCutoff(const AffinePattern& p, int64_t i) { return i - p.MaxLength() - p.n() - 2; }

Exponents FSpectralAffine(const AffinePattern& src, int64_t i, int64_t j) {
  return Add(PWeight(src, i, j), V(static_cast<int>(i)));
}
Exponents ESpectralAffine(const AffinePattern& src, int64_t i, int64_t j) {
  return Add(PWeight(src, i, j), V(static_cast<int>(i) + 2));
}

Factored FModeCoeffAffine(const AffinePattern& src, int64_t i, int64_t j, int r,
                          std::optional<int64_t> cutoff) {
  CheckMove(src, i, j, 1);
  return FBody(src, i, j, r, Cutoff(src, i, cutoff), Neg(AffineT(src.n(), i)));
}

Factored EModeCoeffAffine(const AffinePattern& src, int64_t i, int64_t j, int r,
                          std::optional<int64_t> cutoff) {
  CheckMove(src, i, j, -1);
  return EBody(src, i, j, r, Cutoff(src, i, cutoff), Neg(AffineT(src.n(), i + 1)));
}

Factored PsiEigenvalueAffine(const AffinePattern& p, int64_t i, std::optional<int64_t> cutoff) {
  CheckN(p);
  int64_t k0 = Cutoff(p, i, cutoff);
  int n = p.n();
  int ii = static_cast<int>(i);
  Factored c = Mono(Add(Add(Neg(AffineT(n, i + 1)), AffineT(n, i)),
                        V(p.Degree(i + 1) - 2 * p.Degree(i) + p.Degree(i - 1) - 1)));
  for (int64_t j = k0; j <= i; ++j) {
    c /= OneMinus(Add(Zinv(), Add(V(ii + 2), PWeight(p, i, j))));
    c /= OneMinus(Add(Zinv(), Add(V(ii), PWeight(p, i, j))));
  }
  for (int64_t j = k0; j <= i + 1; ++j) c *= OneMinus(Add(Zinv(), Add(V(ii + 2), PWeight(p, i + 1, j))));
  for (int64_t j = k0; j <= i - 1; ++j) c *= OneMinus(Add(Zinv(), Add(V(ii), PWeight(p, i - 1, j))));
  return c;
}

LaurentExpr PsiModeAffine(const AffinePattern& p, int64_t i, int m, int sign) {
  if ((sign > 0 && m < 0) || (sign < 0 && m > 0)) return LaurentExpr(0);
  Direction d = sign > 0 ? Direction::kAtInfinity : Direction::kAtZero;
  int k = WExponent(d, -m);
  return ExpandSeries(PsiEigenvalueAffine(p, i).ToExpr(), d, k).Coefficient(k);
}

Exponents HatShift(int n) {
  Exponents e = V(n);
  e[kU] = 2;
  return e;
}

Factored HatPsi(const AffinePattern& p) {
  return PsiEigenvalueAffine(p, p.n()).ScaleVar(kZ, HatShift(p.n()));
}

Exponents AffineKappaE() {
  Exponents e = V(1);
  e[kU] = -2;
  return e;
}

ChevalleyOps Chevalley(const AffinePattern& p, int i) {
  CheckN(p);
  int n = p.n();
  if (i < 0 || i >= n) throw std::out_of_range("Chevalley index must be in 0..n-1");
  int delta0 = i == 0 ? 1 : 0;
  auto t = [&](int k) { return UnitExponents(TVar(ModRep(k, n))); };
  ChevalleyOps ops;
  Exponents k = Add(Sub(t(i), t(i + 1)), V(-2 * p.Degree(i) + p.Degree(i - 1) + p.Degree(i + 1) - 1));
  k[kU] -= delta0;
  ops.k = Mono(k);
  for (const auto& mv : NeighborsAffine(p, i, -1)) {
    ops.e.push_back({mv.target, EBody(p, i, mv.j, 0, DefaultCutoff(p, i), Neg(t(i + 1))),
                     ESpectralAffine(p, i, mv.j)});
  }
  Exponents tu = Neg(t(i));
  tu[kU] += delta0;
  for (const auto& mv : NeighborsAffine(p, i, 1)) {
    ops.f.push_back({mv.target, FBody(p, i, mv.j, 0, DefaultCutoff(p, i), tu),
                     FSpectralAffine(p, i, mv.j)});
  }
  return ops;
}

AffineGradedVector ApplyAffine(const AffineModeSpec& op, const AffineGradedVector& x) {
  AffineGradedVector out;
  auto add = [&](const AffinePattern& key, const LaurentExpr& c) {
    if (c.IsZero()) return;
    auto it = out.find(key);
    if (it == out.end()) {
      out.emplace(key, c);
    } else {
      it->second += c;
      if (it->second.IsZero()) out.erase(it);
    }
  };
  int n = -1;
  for (const auto& [p, c] : x) {
    if (n >= 0 && p.n() != n) throw std::invalid_argument("mixed n in graded vector");
    n = p.n();
    CheckN(p);
    bool hat = op.kind == AffineModeKind::kEHat || op.kind == AffineModeKind::kFHat ||
               op.kind == AffineModeKind::kPsiHatPlus || op.kind == AffineModeKind::kPsiHatMinus;
    bool chev = op.kind == AffineModeKind::kChevalleyK || op.kind == AffineModeKind::kChevalleyE ||
                op.kind == AffineModeKind::kChevalleyF;
    if (hat && op.node != n) throw std::invalid_argument("hat operators live at node n");
    if (!chev && (op.node < 1 || op.node > n)) throw std::out_of_range("node out of range");
    Factored shift = hat ? Mono(Scale(HatShift(n), -op.mode)) : Factored(1);
    switch (op.kind) {
      case AffineModeKind::kF:
      case AffineModeKind::kFHat:
        for (const auto& mv : NeighborsAffine(p, op.node, 1)) {
          add(mv.target, c * (FModeCoeffAffine(p, op.node, mv.j, op.mode) * shift).ToExpr());
        }
        break;
      case AffineModeKind::kE:
      case AffineModeKind::kEHat:
        for (const auto& mv : NeighborsAffine(p, op.node, -1)) {
          add(mv.target, c * (EModeCoeffAffine(p, op.node, mv.j, op.mode) * shift).ToExpr());
        }
        break;
      case AffineModeKind::kPsiPlus:
      case AffineModeKind::kPsiMinus:
      case AffineModeKind::kPsiHatPlus:
      case AffineModeKind::kPsiHatMinus: {
        int sign = (op.kind == AffineModeKind::kPsiPlus || op.kind == AffineModeKind::kPsiHatPlus) ? 1 : -1;
        if (sign * op.mode < 0) throw std::invalid_argument("psi mode has the wrong sign");
        add(p, c * PsiModeAffine(p, op.node, op.mode, sign) * shift.ToExpr());
        break;
      }
      case AffineModeKind::kChevalleyK:
        add(p, c * Chevalley(p, op.node).k.ToExpr());
        break;
      case AffineModeKind::kChevalleyE:
        for (const auto& s : Chevalley(p, op.node).e) add(s.target, c * s.coeff.ToExpr());
        break;
      case AffineModeKind::kChevalleyF:
        for (const auto& s : Chevalley(p, op.node).f) add(s.target, c * s.coeff.ToExpr());
        break;
    }
  }
  return out;
}

ToroidalAction::ToroidalAction(int n, bool normalized) : n_(n), normalized_(normalized) {
  if (n < 3 || n > 8) throw std::invalid_argument("toroidal action needs 3 <= n <= 8");
}

std::vector<int> ToroidalAction::Nodes() const {
  std::vector<int> v;
  for (int i = 1; i <= n_; ++i) v.push_back(i);
  return v;
}

std::vector<Step<AffinePattern>> ToroidalAction::Steps(const OpRef& op,
                                                       const AffinePattern& src) const {
  if (op.node < 1 || op.node > n_) throw std::out_of_range("node out of range");
  if (op.hat && op.node != n_) throw std::invalid_argument("hat operators live at node n");
  std::vector<Step<AffinePattern>> out;
  Exponents hat = op.hat ? Neg(HatShift(n_)) : ZeroExponents();
  switch (op.kind) {
    case OpKind::kF:
      for (auto& mv : NeighborsAffine(src, op.node, 1)) {
        out.push_back({std::move(mv.target), FModeCoeffAffine(src, op.node, mv.j, 0),
                       Add(FSpectralAffine(src, op.node, mv.j), hat)});
      }
      break;
    case OpKind::kE:
      for (auto& mv : NeighborsAffine(src, op.node, -1)) {
        Factored c = EModeCoeffAffine(src, op.node, mv.j, 0);
        if (normalized_) c *= Mono(AffineKappaE());
        out.push_back({std::move(mv.target), c, Add(ESpectralAffine(src, op.node, mv.j), hat)});
      }
      break;
    case OpKind::kT:
      throw std::invalid_argument("no Cartan generators t_i in the toroidal action");
  }
  return out;
}

Factored ToroidalAction::Psi(const OpRef& node, const AffinePattern& p) const {
  if (node.hat) {
    if (node.node != n_) throw std::invalid_argument("hat operators live at node n");
    return HatPsi(p);
  }
  return PsiEigenvalueAffine(p, node.node);
}

int ToroidalAction::Cartan(int k, int l) const {
  if (k == l) return 2;
  int d = ((k - l) % n_ + n_) % n_;
  return (d == 1 || d == n_ - 1) ? -1 : 0;
}

std::vector<AffinePattern> ToroidalAction::Basis(int max_total) const {
  return EnumerateAffineUpTo(n_, max_total);
}

std::vector<int> ToroidalAction::ShiftKey(std::vector<int> key, const OpRef& op, int sign) const {
  key[op.node % n_] += sign * (op.kind == OpKind::kF ? 1 : -1);
  return key;
}

}  // namespace laumon
