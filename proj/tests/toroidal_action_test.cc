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
#include "laumon/point.h"
#include "laumon/toroidal_action.h"

namespace laumon {
namespace {

LaurentExpr X(int var, int k = 1) { return LaurentExpr::Variable(var, k); }
LaurentExpr Tt(int j, int k = 1) { return X(TVar(j), k); }
LaurentExpr Vv(int k = 1) { return X(kV, k); }
LaurentExpr Uu(int k = 1) { return X(kU, k); }
LaurentExpr Zz(int k = 1) { return X(kZ, k); }

// Oracle: the affine products evaluated over Q with a generous fixed lower
// bound and an explicit t_{k+n} = u t_k.
struct DirectAffine {
  const Point& pt;
  const AffinePattern& p;
  int n() const { return p.n(); }
  Rational T(int64_t k) const {
    return pt.Get(TVar(ModRep(k, n()))) * Pow(pt.Get(kU), FloorDiv(k - 1, n()));
  }
  Rational v() const { return pt.Get(kV); }
  Rational P(int64_t i, int64_t j) const {
    Rational t = pt.Get(TVar(ModRep(j, n())));
    return t * t * Pow(v(), -2 * p.d(i, j)) * Pow(pt.Get(kU), 2 * CeilDiv(j, n()));
  }
  int64_t Low(int64_t i) const { return i - 40; }
  Rational F(int64_t i, int64_t j, int r) const {
    Rational pij = P(i, j);
    Rational c = -Pow(v(), p.Degree(i) - p.Degree(i - 1) - 1 + i) / T(i) * pij *
                 Pow(pij * Pow(v(), i), r) / (1 - v() * v());
    for (int64_t k = Low(i); k <= i; ++k) {
      if (k != j) c /= 1 - pij / P(i, k);
    }
    for (int64_t k = Low(i); k < i; ++k) c *= 1 - pij / P(i - 1, k);
    return c;
  }
  Rational E(int64_t i, int64_t j, int r) const {
    Rational pij = P(i, j);
    Rational c = Pow(v(), p.Degree(i + 1) - p.Degree(i) + 1 - i) / T(i + 1) *
                 Pow(pij * Pow(v(), i + 2), r) / (1 - v() * v());
    for (int64_t k = Low(i); k <= i; ++k) {
      if (k != j) c /= 1 - P(i, k) / pij;
    }
    for (int64_t k = Low(i); k <= i + 1; ++k) c *= 1 - P(i + 1, k) / pij;
    return c;
  }
};

TEST_CASE("affine coefficients match a direct evaluation") {
  std::mt19937_64 rng(11);
  for (int n = 3; n <= 4; ++n) {
    for (const auto& p : EnumerateAffineUpTo(n, 2)) {
      Point pt = RandomPoint(rng, n, false);
      DirectAffine dir{pt, p};
      for (int i = 1; i <= n; ++i) {
        for (int r = -2; r <= 2; ++r) {
          for (const auto& mv : NeighborsAffine(p, i, 1)) {
            CHECK(FModeCoeffAffine(p, i, mv.j, r).Evaluate(pt) == dir.F(i, mv.j, r));
          }
          for (const auto& mv : NeighborsAffine(p, i, -1)) {
            CHECK(EModeCoeffAffine(p, i, mv.j, r).Evaluate(pt) == dir.E(i, mv.j, r));
          }
        }
      }
    }
  }
}

TEST_CASE("affine: cutoff independence") {
  for (const auto& p : EnumerateAffineUpTo(3, 2)) {
    for (int i = 1; i <= 3; ++i) {
      int64_t top = i - p.MaxLength();
      LaurentExpr psi = PsiEigenvalueAffine(p, i).ToExpr();
      for (int64_t c = top; c >= top - 7; --c) {
        CHECK(PsiEigenvalueAffine(p, i, c).ToExpr() == psi);
        for (const auto& mv : NeighborsAffine(p, i, 1)) {
          CHECK(FModeCoeffAffine(p, i, mv.j, 0, c).ToExpr() ==
                FModeCoeffAffine(p, i, mv.j, 0).ToExpr());
        }
        for (const auto& mv : NeighborsAffine(p, i, -1)) {
          CHECK(EModeCoeffAffine(p, i, mv.j, 0, c).ToExpr() ==
                EModeCoeffAffine(p, i, mv.j, 0).ToExpr());
        }
      }
      CHECK_THROWS_AS(PsiEigenvalueAffine(p, i, top + 1), std::invalid_argument);
    }
  }
}

TEST_CASE("affine psi: vacuum and zero modes") {
  AffinePattern z(3);
  for (int i = 1; i <= 2; ++i) {
    LaurentExpr g = Tt(i + 1, -1) * Tt(i) * Vv(-1) *
                    (1 - Zz(-1) * Vv(i + 2) * Tt(i + 1, 2) * Uu(2)) /
                    (1 - Zz(-1) * Vv(i) * Tt(i, 2) * Uu(2));
    CHECK(PsiEigenvalueAffine(z, i).ToExpr() == g);
  }
  // i = n with t_{n+1} = u t_1
  LaurentExpr gn = Tt(1, -1) * Uu(-1) * Tt(3) * Vv(-1) *
                   (1 - Zz(-1) * Vv(5) * Tt(1, 2) * Uu(4)) / (1 - Zz(-1) * Vv(3) * Tt(3, 2) * Uu(2));
  CHECK(PsiEigenvalueAffine(z, 3).ToExpr() == gn);
  for (const auto& p : EnumerateAffineUpTo(3, 2)) {
    for (int i = 1; i <= 3; ++i) {
      int e = p.Degree(i + 1) - 2 * p.Degree(i) + p.Degree(i - 1) - 1;
      LaurentExpr k = Tt(i) * Tt(i % 3 + 1, -1) * Vv(e) * (i == 3 ? Uu(-1) : LaurentExpr(1));
      CHECK(PsiModeAffine(p, i, 0, 1) == k);
      CHECK(PsiModeAffine(p, i, 0, -1) == k.Inverse());
    }
  }
  CHECK_THROWS_AS(PsiEigenvalueAffine(AffinePattern(2), 1), std::invalid_argument);
  CHECK_THROWS_AS(ToroidalAction(2), std::invalid_argument);
}

TEST_CASE("affine spectral recursion") {
  for (const auto& p : EnumerateAffineUpTo(3, 2)) {
    for (int i = 1; i <= 3; ++i) {
      for (const auto& mv : NeighborsAffine(p, i, -1)) {
        Factored step = Factored::Monomial(ESpectralAffine(p, i, mv.j));
        for (int r = -2; r < 2; ++r) {
          CHECK(EModeCoeffAffine(p, i, mv.j, r + 1) == EModeCoeffAffine(p, i, mv.j, r) * step);
        }
      }
    }
  }
}

TEST_CASE("periodic shift between nodes k and k - n") {
  int n = 3;
  LaurentExpr hat = Vv(n) * Uu(2);
  for (const auto& p : EnumerateAffineUpTo(n, 2)) {
    for (int k = 1; k <= n; ++k) {
      for (const auto& mv : NeighborsAffine(p, k, 1)) {
        LaurentExpr base = FModeCoeffAffine(p, k - n, mv.j - n, 0).ToExpr() /
                           FModeCoeffAffine(p, k, mv.j, 0).ToExpr();
        CHECK(base == Uu(-1) * Vv(-n));
        for (int r = -2; r <= 2; ++r) {
          LaurentExpr ratio = FModeCoeffAffine(p, k - n, mv.j - n, r).ToExpr() /
                              FModeCoeffAffine(p, k, mv.j, r).ToExpr();
          CHECK(ratio / base == hat.Power(-r));
        }
      }
      for (const auto& mv : NeighborsAffine(p, k, -1)) {
        LaurentExpr base = EModeCoeffAffine(p, k - n, mv.j - n, 0).ToExpr() /
                           EModeCoeffAffine(p, k, mv.j, 0).ToExpr();
        CHECK(base == Uu() * Vv(n));
        for (int r = -2; r <= 2; ++r) {
          LaurentExpr ratio = EModeCoeffAffine(p, k - n, mv.j - n, r).ToExpr() /
                              EModeCoeffAffine(p, k, mv.j, r).ToExpr();
          CHECK(ratio / base == hat.Power(-r));
        }
      }
    }
  }
}

TEST_CASE("hat shift") {
  AffinePattern z(3);
  AffineGradedVector x{{z, LaurentExpr(1)}};
  for (int r = -1; r <= 1; ++r) {
    auto plain = ApplyAffine({AffineModeKind::kF, 3, r}, x);
    auto hat = ApplyAffine({AffineModeKind::kFHat, 3, r}, x);
    REQUIRE(plain.size() == 1);
    CHECK(hat.begin()->second == plain.begin()->second * (Vv(3) * Uu(2)).Power(-r));
  }
  CHECK_THROWS_AS(ApplyAffine({AffineModeKind::kFHat, 2, 0}, x), std::invalid_argument);
  CHECK(HatPsi(z).ToExpr() ==
        PsiEigenvalueAffine(z, 3).ToExpr().ScaleVar(kZ, HatShift(3)));
}

TEST_CASE("Chevalley generators") {
  int n = 3;
  AffinePattern z(n);
  CHECK(Chevalley(z, 1).k.ToExpr() == Tt(2, -1) * Tt(1) * Vv(-1));
  CHECK(Chevalley(z, 0).k.ToExpr() == Tt(1, -1) * Tt(3) * Uu(-1) * Vv(-1));
  for (const auto& p : EnumerateAffineUpTo(n, 2)) {
    for (int i = 1; i < n; ++i) {
      ChevalleyOps ops = Chevalley(p, i);
      auto moves = NeighborsAffine(p, i, -1);
      REQUIRE(ops.e.size() == moves.size());
      for (size_t a = 0; a < moves.size(); ++a) {
        CHECK(ops.e[a].coeff == EModeCoeffAffine(p, i, moves[a].j, 0));
      }
      CHECK(ops.k.ToExpr() == PsiModeAffine(p, i, 0, 1));
    }
    // node 0 against the hat-shifted node n zero modes
    ChevalleyOps ops0 = Chevalley(p, 0);
    CHECK(ops0.k.ToExpr() == PsiModeAffine(p, n, 0, 1));
    auto fn = NeighborsAffine(p, n, 1);
    REQUIRE(ops0.f.size() == fn.size());
    for (size_t a = 0; a < fn.size(); ++a) {
      CHECK(ops0.f[a].target == fn[a].target);
      CHECK(ops0.f[a].coeff.ToExpr() / FModeCoeffAffine(p, n, fn[a].j, 0).ToExpr() ==
            Uu(-1) * Vv(-n));
    }
    auto en = NeighborsAffine(p, n, -1);
    REQUIRE(ops0.e.size() == en.size());
    for (size_t a = 0; a < en.size(); ++a) {
      CHECK(ops0.e[a].coeff.ToExpr() / EModeCoeffAffine(p, n, en[a].j, 0).ToExpr() ==
            Uu() * Vv(n));
    }
  }
}

}  // namespace
}  // namespace laumon
