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

#include "laumon/finite_action.h"

#include <stdexcept>
#include <string>

#include "laumon/series.h"

namespace laumon {
namespace {

Exponents V(int k) { return UnitExponents(kV, k); }
Exponents T(int j, int k = 1) { return UnitExponents(TVar(j), k); }
Exponents Zinv() { return UnitExponents(kZ, -1); }

Factored Mono(const Exponents& e, const Rational& c = 1) { return Factored::Monomial(e, c); }
Factored OneMinus(const Exponents& a) { return Factored::OneMinus(a); }

void CheckNode(const FinitePattern& p, int i) {
  if (i < 1 || i > p.n() - 1) throw std::out_of_range("node out of range: " + std::to_string(i));
}

void CheckMove(const FinitePattern& src, int i, int j, int delta) {
  CheckNode(src, i);
  if (j < 1 || j > i || !src.With(i, j, delta).IsValid()) {
    throw std::invalid_argument("invalid move at (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
  }
}

}  // namespace

std::string OpName(const OpRef& op) {
  std::string s = op.kind == OpKind::kE ? "e" : op.kind == OpKind::kF ? "f" : "t";
  if (op.hat) s += "^";
  s += std::to_string(op.node);
  if (op.kind == OpKind::kT && op.power != 1) s += "^" + std::to_string(op.power);
  return s;
}

Factored VMinusVInverse() { return Mono(V(-1), -1) * OneMinus(V(2)); }

Exponents FSpectral(const FinitePattern& src, int i, int j) { return Add(SWeight(src, i, j), V(i)); }
Exponents ESpectral(const FinitePattern& src, int i, int j) {
  return Add(SWeight(src, i, j), V(i + 2));
}

Factored FModeCoeff(const FinitePattern& src, int i, int j, int r) {
  CheckMove(src, i, j, 1);
  Exponents sij = SWeight(src, i, j);
  Factored c = Mono(Add(Add(T(i, -1), V(src.Degree(i) - src.Degree(i - 1) - 1 + i)), sij), -1);
  c /= OneMinus(V(2));
  for (int k = 1; k <= i; ++k) {
    if (k != j) c /= OneMinus(Sub(sij, SWeight(src, i, k)));
  }
  for (int k = 1; k <= i - 1; ++k) c *= OneMinus(Sub(sij, SWeight(src, i - 1, k)));
  return c * Mono(Scale(FSpectral(src, i, j), r));
}

Factored EModeCoeff(const FinitePattern& src, int i, int j, int r) {
  CheckMove(src, i, j, -1);
  Exponents sij = SWeight(src, i, j);
  Factored c = Mono(Add(T(i + 1, -1), V(src.Degree(i + 1) - src.Degree(i) + 1 - i)));
  c /= OneMinus(V(2));
  for (int k = 1; k <= i; ++k) {
    if (k != j) c /= OneMinus(Sub(SWeight(src, i, k), sij));
  }
  for (int k = 1; k <= i + 1; ++k) c *= OneMinus(Sub(SWeight(src, i + 1, k), sij));
  return c * Mono(Scale(ESpectral(src, i, j), r));
}

// Written out in t, v and d directly, without the s-weights.
Factored ZeroModeF(const FinitePattern& src, int i, int j) {
  CheckMove(src, i, j, 1);
  auto tv = [](int a, int ta, int b, int tb, int vexp) {
    Exponents e = ZeroExponents();
    e[TVar(a)] += ta;
    e[TVar(b)] += tb;
    e[kV] += vexp;
    return e;
  };
  int dij = src.d(i, j);
  Exponents pre = tv(i, -1, j, 2, src.Degree(i) - src.Degree(i - 1) - 1 + i - 2 * dij);
  Factored c = Mono(pre, -1) / OneMinus(V(2));
  for (int k = 1; k <= i; ++k) {
    if (k == j) continue;
    c /= OneMinus(tv(j, 2, k, -2, 2 * src.d(i, k) - 2 * dij));
  }
  for (int k = 1; k <= i - 1; ++k) c *= OneMinus(tv(j, 2, k, -2, 2 * src.d(i - 1, k) - 2 * dij));
  return c;
}

Factored ZeroModeE(const FinitePattern& src, int i, int j) {
  CheckMove(src, i, j, -1);
  auto tv = [](int a, int ta, int b, int tb, int vexp) {
    Exponents e = ZeroExponents();
    e[TVar(a)] += ta;
    e[TVar(b)] += tb;
    e[kV] += vexp;
    return e;
  };
  int dij = src.d(i, j);
  Exponents pre = ZeroExponents();
  pre[TVar(i + 1)] = -1;
  pre[kV] = src.Degree(i + 1) - src.Degree(i) + 1 - i;
  Factored c = Mono(pre) / OneMinus(V(2));
  for (int k = 1; k <= i; ++k) {
    if (k == j) continue;
    c /= OneMinus(tv(k, 2, j, -2, 2 * dij - 2 * src.d(i, k)));
  }
  for (int k = 1; k <= i + 1; ++k) {
    c *= OneMinus(tv(k, 2, j, -2, 2 * dij - 2 * src.d(i + 1, k)));
  }
  return c;
}

namespace {

Factored PsiPrefactor(const FinitePattern& p, int i) {
  return Mono(Add(Add(T(i + 1, -1), T(i)),
                  V(p.Degree(i + 1) - 2 * p.Degree(i) + p.Degree(i - 1) - 1)));
}

}  // namespace

Factored PsiEigenvalue(const FinitePattern& p, int i) {
  CheckNode(p, i);
  Factored c = PsiPrefactor(p, i);
  for (int j = 1; j <= i; ++j) {
    c /= OneMinus(Add(Zinv(), Add(V(i + 2), SWeight(p, i, j))));
    c /= OneMinus(Add(Zinv(), Add(V(i), SWeight(p, i, j))));
  }
  for (int j = 1; j <= i + 1; ++j) c *= OneMinus(Add(Zinv(), Add(V(i + 2), SWeight(p, i + 1, j))));
  for (int j = 1; j <= i - 1; ++j) c *= OneMinus(Add(Zinv(), Add(V(i), SWeight(p, i - 1, j))));
  return c;
}

Factored BSeries(const FinitePattern& p, int m) {
  if (m < 0 || m > p.n()) throw std::out_of_range("row out of range");
  Factored c;
  for (int j = 1; j <= m; ++j) c *= OneMinus(Add(Zinv(), SWeight(p, m, j)));
  return c;
}

Factored PsiFromASeries(const FinitePattern& p, int i) {
  CheckNode(p, i);
  // a(z v^-k): z^-1 -> z^-1 v^k
  auto at = [](const Factored& a, int k) { return a.ScaleVar(kZ, V(-k)); };
  Factored a_prev = BSeries(p, i - 1), a_i = BSeries(p, i), a_next = BSeries(p, i + 1);
  return PsiPrefactor(p, i) * at(a_next, i + 2) * at(a_prev, i) / (at(a_i, i + 2) * at(a_i, i));
}

Factored PsiFromBmi(const FinitePattern& p, int i, int m) {
  CheckNode(p, i);
  if (m < 0 || m >= i) throw std::out_of_range("cutoff must satisfy 0 <= m < i");
  auto at = [](const Factored& a, int k) { return a.ScaleVar(kZ, V(-k)); };
  Factored bm = BSeries(p, m);
  Factored b_mi = BSeries(p, i) / bm;
  Factored b_prev = BSeries(p, i - 1) / bm;
  Factored b_next = BSeries(p, i + 1) / bm;
  return PsiPrefactor(p, i) * at(b_prev, i) * at(b_next, i + 2) /
         (at(b_mi, i + 2) * at(b_mi, i));
}

LaurentExpr PsiMode(const FinitePattern& p, int i, int m, int sign) {
  if ((sign > 0 && m < 0) || (sign < 0 && m > 0)) return LaurentExpr(0);
  Direction d = sign > 0 ? Direction::kAtInfinity : Direction::kAtZero;
  int k = WExponent(d, -m);
  return ExpandSeries(PsiEigenvalue(p, i).ToExpr(), d, k).Coefficient(k);
}

LaurentExpr ChiCoeff(const FinitePattern& p, int i, int a) {
  CheckNode(p, i);
  auto s = [&](int k, int j) { return SWeight(p, k, j); };
  Factored pre = Mono(Add(Add(T(i + 1, -1), T(i, -1)), V(-1 + p.Degree(i + 1) - p.Degree(i - 1))), -1);
  pre /= -OneMinus(V(2));  // (v^2 - 1)
  std::vector<Factored> terms;
  for (int j = 1; j <= i; ++j) {
    Exponents sij = s(i, j);
    Factored x = pre * Mono(Add(sij, Scale(Add(sij, V(i)), a)));
    Factored y = -pre * Mono(Add(Add(V(2), sij), Scale(Add(sij, V(i + 2)), a)));
    for (int k = 1; k <= i; ++k) {
      if (k == j) continue;
      x /= OneMinus(Sub(sij, s(i, k))) * OneMinus(Sub(Add(V(2), s(i, k)), sij));
      y /= OneMinus(Sub(s(i, k), sij)) * OneMinus(Sub(Add(V(2), sij), s(i, k)));
    }
    for (int k = 1; k <= i - 1; ++k) {
      x *= OneMinus(Sub(sij, s(i - 1, k)));
      y *= OneMinus(Sub(Add(V(2), sij), s(i - 1, k)));
    }
    for (int k = 1; k <= i + 1; ++k) {
      x *= OneMinus(Sub(Add(V(2), s(i + 1, k)), sij));
      y *= OneMinus(Sub(s(i + 1, k), sij));
    }
    terms.push_back(x);
    terms.push_back(y);
  }
  return SumToExpr(terms);
}

Factored TCartan(const FinitePattern& p, int i) {
  if (i < 1 || i > p.n()) throw std::out_of_range("t_cartan index out of range");
  return Mono(Add(T(i), V(p.Degree(i - 1) - p.Degree(i) + i - 1)));
}

Exponents FiniteKappaE() { return V(1); }

GradedVector Apply(const ModeSpec& op, const GradedVector& x) {
  GradedVector out;
  auto add = [&](const FinitePattern& key, const LaurentExpr& c) {
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
    switch (op.kind) {
      case ModeKind::kF:
        for (const auto& mv : Neighbors(p, op.node, 1)) {
          add(mv.target, c * FModeCoeff(p, op.node, mv.j, op.mode).ToExpr());
        }
        break;
      case ModeKind::kE:
        for (const auto& mv : Neighbors(p, op.node, -1)) {
          add(mv.target, c * EModeCoeff(p, op.node, mv.j, op.mode).ToExpr());
        }
        break;
      case ModeKind::kPsiPlus:
        if (op.mode < 0) throw std::invalid_argument("psi_plus needs mode >= 0");
        add(p, c * PsiMode(p, op.node, op.mode, 1));
        break;
      case ModeKind::kPsiMinus:
        if (op.mode > 0) throw std::invalid_argument("psi_minus needs mode <= 0");
        add(p, c * PsiMode(p, op.node, op.mode, -1));
        break;
      case ModeKind::kTCartan:
        add(p, c * TCartan(p, op.node).ToExpr());
        break;
    }
  }
  return out;
}

FiniteAction::FiniteAction(int n, bool normalized) : n_(n), normalized_(normalized) {
  if (n < 2 || n > 8) throw std::invalid_argument("n must be in 2..8");
}

std::vector<int> FiniteAction::Nodes() const {
  std::vector<int> v;
  for (int i = 1; i < n_; ++i) v.push_back(i);
  return v;
}

std::vector<Step<FinitePattern>> FiniteAction::Steps(const OpRef& op,
                                                     const FinitePattern& src) const {
  if (op.hat) throw std::invalid_argument("hat operators are toroidal only");
  std::vector<Step<FinitePattern>> out;
  switch (op.kind) {
    case OpKind::kF:
      for (auto& mv : Neighbors(src, op.node, 1)) {
        out.push_back({std::move(mv.target), FModeCoeff(src, op.node, mv.j, 0),
                       FSpectral(src, op.node, mv.j)});
      }
      break;
    case OpKind::kE:
      for (auto& mv : Neighbors(src, op.node, -1)) {
        Factored c = EModeCoeff(src, op.node, mv.j, 0);
        if (normalized_) c *= Mono(FiniteKappaE());
        out.push_back({std::move(mv.target), c, ESpectral(src, op.node, mv.j)});
      }
      break;
    case OpKind::kT:
      out.push_back({src, TCartan(src, op.node).Power(op.power), ZeroExponents()});
      break;
  }
  return out;
}

Factored FiniteAction::Psi(const OpRef& node, const FinitePattern& p) const {
  if (node.hat) throw std::invalid_argument("hat operators are toroidal only");
  return PsiEigenvalue(p, node.node);
}

int FiniteAction::Cartan(int k, int l) const {
  if (k == l) return 2;
  return (k - l == 1 || l - k == 1) ? -1 : 0;
}

std::vector<FinitePattern> FiniteAction::Basis(int max_total) const {
  return EnumerateFiniteUpTo(n_, max_total);
}

std::vector<int> FiniteAction::ShiftKey(std::vector<int> key, const OpRef& op, int sign) const {
  if (op.kind == OpKind::kT) return key;
  key[op.node - 1] += sign * (op.kind == OpKind::kF ? 1 : -1);
  return key;
}

}  // namespace laumon
