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

#include <random>

#include "doctest.h"
#include "laumon/finite_action.h"
#include "laumon/point.h"
#include "laumon/series.h"

namespace laumon {
namespace {

LaurentExpr X(int var, int k = 1) { return LaurentExpr::Variable(var, k); }
LaurentExpr Tt(int j, int k = 1) { return X(TVar(j), k); }
LaurentExpr Vv(int k = 1) { return X(kV, k); }
LaurentExpr Zz(int k = 1) { return X(kZ, k); }

FinitePattern Zero(int n) { return FinitePattern(n); }

// Oracle: the coefficient products evaluated directly over Q from the
// point values, without going through exponent vectors.
struct Direct {
  const Point& pt;
  const FinitePattern& p;
  Rational t(int j) const { return pt.Get(TVar(j)); }
  Rational v() const { return pt.Get(kV); }
  Rational s(int i, int j) const { return t(j) * t(j) * Pow(v(), -2 * p.d(i, j)); }
  Rational F(int i, int j, int r) const {
    Rational sij = s(i, j);
    Rational c = -Pow(v(), p.Degree(i) - p.Degree(i - 1) - 1 + i) / t(i) * sij *
                 Pow(sij * Pow(v(), i), r) / (1 - v() * v());
    for (int k = 1; k <= i; ++k) {
      if (k != j) c /= 1 - sij / s(i, k);
    }
    for (int k = 1; k < i; ++k) c *= 1 - sij / s(i - 1, k);
    return c;
  }
  Rational E(int i, int j, int r) const {
    Rational sij = s(i, j);
    Rational c = Pow(v(), p.Degree(i + 1) - p.Degree(i) + 1 - i) / t(i + 1) *
                 Pow(sij * Pow(v(), i + 2), r) / (1 - v() * v());
    for (int k = 1; k <= i; ++k) {
      if (k != j) c /= 1 - s(i, k) / sij;
    }
    for (int k = 1; k <= i + 1; ++k) c *= 1 - s(i + 1, k) / sij;
    return c;
  }
};

TEST_CASE("finite coefficients: worked examples") {
  FinitePattern z = Zero(2);
  CHECK(FModeCoeff(z, 1, 1, 0).ToExpr() == -Tt(1) / (1 - Vv(2)));
  CHECK(FModeCoeff(z, 1, 1, 1).ToExpr() == -Tt(1, 3) * Vv() / (1 - Vv(2)));
  FinitePattern one = FinitePattern::FromRows(2, {{1}});
  LaurentExpr e0 = Tt(2, -1) * Vv(-1) * (1 - Tt(2, 2) * Tt(1, -2) * Vv(2));
  CHECK(EModeCoeff(one, 1, 1, 0).ToExpr() == e0);
  CHECK(EModeCoeff(one, 1, 1, 1).ToExpr() == e0 * Tt(1, 2) * Vv());
  CHECK_THROWS_AS(EModeCoeff(z, 1, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(FModeCoeff(one.With(1, 1, -1), 1, 2, 0), std::invalid_argument);
}

TEST_CASE("finite apply") {
  GradedVector x{{Zero(2), LaurentExpr(1)}};
  GradedVector f = Apply({ModeKind::kF, 1, 0}, x);
  REQUIRE(f.size() == 1);
  CHECK(f.begin()->first == FinitePattern::FromRows(2, {{1}}));
  CHECK(f.begin()->second == -Tt(1) / (1 - Vv(2)));
  CHECK(Apply({ModeKind::kE, 1, 0}, x).empty());
  GradedVector t = Apply({ModeKind::kTCartan, 1, 0}, x);
  CHECK(t.at(Zero(2)) == Tt(1));
  GradedVector mixed{{Zero(2), LaurentExpr(1)}, {Zero(3), LaurentExpr(1)}};
  CHECK_THROWS_AS(Apply({ModeKind::kF, 1, 0}, mixed), std::invalid_argument);
}

TEST_CASE("finite coefficients match a direct evaluation") {
  std::mt19937_64 rng(7);
  for (int n = 2; n <= 4; ++n) {
    for (const auto& p : EnumerateFiniteUpTo(n, 3)) {
      Point pt = RandomPoint(rng, n, false);
      Direct dir{pt, p};
      for (int i = 1; i < n; ++i) {
        for (int r = -2; r <= 2; ++r) {
          for (const auto& mv : Neighbors(p, i, 1)) {
            CHECK(FModeCoeff(p, i, mv.j, r).Evaluate(pt) == dir.F(i, mv.j, r));
          }
          for (const auto& mv : Neighbors(p, i, -1)) {
            CHECK(EModeCoeff(p, i, mv.j, r).Evaluate(pt) == dir.E(i, mv.j, r));
          }
        }
      }
    }
  }
}

TEST_CASE("zero modes agree with the t, v, d form") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& p : EnumerateFiniteUpTo(n, 3)) {
      for (int i = 1; i < n; ++i) {
        for (const auto& mv : Neighbors(p, i, 1)) {
          CHECK(FModeCoeff(p, i, mv.j, 0).ToExpr() == ZeroModeF(p, i, mv.j).ToExpr());
        }
        for (const auto& mv : Neighbors(p, i, -1)) {
          CHECK(EModeCoeff(p, i, mv.j, 0).ToExpr() == ZeroModeE(p, i, mv.j).ToExpr());
        }
      }
    }
  }
}

TEST_CASE("spectral recursion") {
  for (const auto& p : EnumerateFiniteUpTo(3, 3)) {
    for (int i = 1; i < 3; ++i) {
      for (const auto& mv : Neighbors(p, i, 1)) {
        Exponents b = Add(SWeight(p, i, mv.j), UnitExponents(kV, i));
        for (int r = -2; r < 2; ++r) {
          CHECK(FModeCoeff(p, i, mv.j, r + 1) ==
                FModeCoeff(p, i, mv.j, r) * Factored::Monomial(b));
        }
      }
      for (const auto& mv : Neighbors(p, i, -1)) {
        Exponents b = Add(SWeight(p, i, mv.j), UnitExponents(kV, i + 2));
        for (int r = -2; r < 2; ++r) {
          CHECK(EModeCoeff(p, i, mv.j, r + 1) ==
                EModeCoeff(p, i, mv.j, r) * Factored::Monomial(b));
        }
      }
    }
  }
}

TEST_CASE("psi eigenvalue: vacuum and zero modes") {
  LaurentExpr vac = Tt(2, -1) * Tt(1) * Vv(-1) * (1 - Tt(2, 2) * Vv(3) * Zz(-1)) /
                    (1 - Tt(1, 2) * Vv() * Zz(-1));
  CHECK(PsiEigenvalue(Zero(2), 1).ToExpr() == vac);
  for (int i = 1; i <= 3; ++i) {
    LaurentExpr g = Tt(i + 1, -1) * Tt(i) * Vv(-1) *
                    (1 - Tt(i + 1, 2) * Vv(i + 2) * Zz(-1)) / (1 - Tt(i, 2) * Vv(i) * Zz(-1));
    CHECK(PsiEigenvalue(Zero(4), i).ToExpr() == g);
  }
  CHECK(PsiMode(Zero(2), 1, 1, 1) == Tt(2, -1) * Tt(1) * Vv(-1) * (Tt(1, 2) * Vv() - Tt(2, 2) * Vv(3)));
  CHECK(PsiMode(Zero(2), 1, 1, -1).IsZero());
  CHECK(PsiMode(Zero(2), 1, -1, 1).IsZero());
  for (const auto& p : EnumerateFiniteUpTo(3, 3)) {
    for (int i = 1; i < 3; ++i) {
      int e = p.Degree(i + 1) - 2 * p.Degree(i) + p.Degree(i - 1) - 1;
      LaurentExpr k = Tt(i) * Tt(i + 1, -1) * Vv(e);
      CHECK(PsiMode(p, i, 0, 1) == k);
      CHECK(PsiMode(p, i, 0, -1) == k.Inverse());
    }
  }
}

TEST_CASE("b-series") {
  CHECK(BSeries(Zero(3), 0) == Factored(1));
  CHECK(BSeries(Zero(3), 2).ToExpr() == (1 - Tt(1, 2) * Zz(-1)) * (1 - Tt(2, 2) * Zz(-1)));
  CHECK(BSeries(FinitePattern::FromRows(2, {{1}}), 1).ToExpr() == 1 - Tt(1, 2) * Vv(-2) * Zz(-1));
}

TEST_CASE("psi: eigenvalue, a-series and b_mi routes agree") {
  for (int n = 2; n <= 3; ++n) {
    for (const auto& p : EnumerateFiniteUpTo(n, 3)) {
      for (int i = 1; i < n; ++i) {
        LaurentExpr direct = PsiEigenvalue(p, i).ToExpr();
        CHECK(PsiFromASeries(p, i).ToExpr() == direct);
        for (int m = 0; m < i; ++m) CHECK(PsiFromBmi(p, i, m).ToExpr() == direct);
      }
    }
  }
  for (const auto& p : EnumerateFiniteUpTo(4, 2)) {
    for (int i = 1; i < 4; ++i) {
      LaurentExpr first = PsiFromBmi(p, i, 0).ToExpr();
      for (int m = 1; m < i; ++m) CHECK(PsiFromBmi(p, i, m).ToExpr() == first);
    }
  }
}

TEST_CASE("psi modes: expansion and product routes agree") {
  for (const auto& p : EnumerateFiniteUpTo(3, 2)) {
    for (int i = 1; i < 3; ++i) {
      Factored psi = PsiEigenvalue(p, i);
      auto mono = [](const Exponents& e) { return Polynomial::Monomial(e); };
      auto plus = ProductSeries<Polynomial>(psi, Direction::kAtInfinity, 3, mono);
      auto minus = ProductSeries<Polynomial>(psi, Direction::kAtZero, 3, mono);
      for (int m = 0; m <= 3; ++m) {
        CHECK(PsiMode(p, i, m, 1) == LaurentExpr(plus[m]));
        CHECK(PsiMode(p, i, -m, -1) == LaurentExpr(minus[m]));
      }
    }
  }
}

TEST_CASE("chi: psi modes and the commutator diagonal") {
  LaurentExpr vv = Vv() - Vv(-1);
  for (int n = 2; n <= 3; ++n) {
    for (const auto& p : EnumerateFiniteUpTo(n, 2)) {
      for (int i = 1; i < n; ++i) {
        for (int a = -2; a <= 2; ++a) {
          LaurentExpr chi = ChiCoeff(p, i, a);
          LaurentExpr psi = PsiMode(p, i, a, 1) - PsiMode(p, i, a, -1);
          if (a >= 0) CHECK(chi == psi);
          if (a < 0) CHECK(chi == psi);
          // literal operators: chi = v (v - v^-1) [e_{i,a}, f_{i,0}] on the diagonal
          GradedVector x{{p, LaurentExpr(1)}};
          GradedVector ef = Apply({ModeKind::kE, i, a}, Apply({ModeKind::kF, i, 0}, x));
          GradedVector fe = Apply({ModeKind::kF, i, 0}, Apply({ModeKind::kE, i, a}, x));
          LaurentExpr diag = (ef.count(p) ? ef.at(p) : LaurentExpr(0)) -
                             (fe.count(p) ? fe.at(p) : LaurentExpr(0));
          CHECK(chi == Vv() * vv * diag);
        }
      }
    }
  }
}

TEST_CASE("t_cartan") {
  FinitePattern p = FinitePattern::FromRows(3, {{2}, {1, 0}});
  CHECK(TCartan(p, 1).ToExpr() == Tt(1) * Vv(-2));
  CHECK(TCartan(p, 2).ToExpr() == Tt(2) * Vv(2 - 1 + 1));
  CHECK(TCartan(p, 3).ToExpr() == Tt(3) * Vv(1 + 2));
  CHECK_THROWS_AS(TCartan(p, 4), std::out_of_range);
}

}  // namespace
}  // namespace laumon
