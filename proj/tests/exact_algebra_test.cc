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
#include "laumon/factored.h"
#include "laumon/laurent_expr.h"
#include "laumon/series.h"

namespace laumon {
namespace {

LaurentExpr T(int j, int k = 1) { return LaurentExpr::Variable(TVar(j), k); }
LaurentExpr V(int k = 1) { return LaurentExpr::Variable(kV, k); }
LaurentExpr U(int k = 1) { return LaurentExpr::Variable(kU, k); }
LaurentExpr Z(int k = 1) { return LaurentExpr::Variable(kZ, k); }

Point At(std::initializer_list<std::pair<int, Rational>> vals) {
  Point p;
  for (auto& [var, x] : vals) p.Set(var, x);
  return p;
}

// A small random rational function in t1, t2, u, v.
LaurentExpr RandomExpr(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-3, 3), ex(-2, 2), len(1, 3);
  auto poly = [&]() {
    LaurentExpr p;
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
      Exponents e = ZeroExponents();
      e[TVar(1)] = ex(rng);
      e[TVar(2)] = ex(rng);
      e[kV] = ex(rng);
      e[kU] = ex(rng) / 2;
      int c = coef(rng);
      p += LaurentExpr::Monomial(e, c == 0 ? 1 : c);
    }
    return p;
  };
  LaurentExpr num = poly(), den = poly();
  while (den.IsZero()) den = poly();
  return num / den;
}

TEST_CASE("arith examples") {
  CHECK(T(1) * V() / (T(1) * V()) == LaurentExpr(1));
  LaurentExpr q = (1 - V(2)) / (1 - V());
  CHECK(q == 1 + V());
  CHECK(q.IsPolynomial());
  CHECK(q.numerator() == (1 + V()).numerator());
  CHECK_THROWS_AS((1 - T(1, 2) * T(2, -2)) / LaurentExpr(0), std::domain_error);
}

TEST_CASE("evaluate examples") {
  CHECK(V(2).Evaluate(At({{kV, 3}})) == 9);
  CHECK(((1 - V(2)) / (1 - V())).Evaluate(At({{kV, 2}})) == 3);
  CHECK((T(1, 2) * V(-2)).Evaluate(At({{TVar(1), 2}, {kV, 3}})) == Rational(4, 9));
  CHECK_THROWS_AS((1 / (1 - V())).Evaluate(At({{kV, 1}})), VanishingDenominator);
}

TEST_CASE("cyclotomic table") {
  CHECK(CyclotomicCoefficients(1) == std::vector<long>{-1, 1});
  CHECK(CyclotomicCoefficients(2) == std::vector<long>{1, 1});
  CHECK(CyclotomicCoefficients(6) == std::vector<long>{1, -1, 1});
  CHECK(CyclotomicCoefficients(12) == std::vector<long>{1, 0, -1, 0, 1});
}

TEST_CASE("canonical form is independent of parenthesization") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    LaurentExpr a = RandomExpr(rng), b = RandomExpr(rng), c = RandomExpr(rng);
    LaurentExpr x = (a + b) * c, y = a * c + b * c;
    CHECK(x == y);
    LaurentExpr p = (a * b) * c, r = a * (b * c);
    CHECK(p.ToString() == r.ToString());
    if (!b.IsZero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    LaurentExpr a = RandomExpr(rng), b = RandomExpr(rng);
    Point p = RandomPoint(rng, 2, false);
    try {
      Rational ea = a.Evaluate(p), eb = b.Evaluate(p);
      CHECK((a + b).Evaluate(p) == ea + eb);
      CHECK((a - b).Evaluate(p) == ea - eb);
      CHECK((a * b).Evaluate(p) == ea * eb);
      if (eb != 0) CHECK((a / b).Evaluate(p) == ea / eb);
      ++checked;
    } catch (const VanishingDenominator&) {
    }
  }
  CHECK(checked > 40);
}

TEST_CASE("text form round trips exactly") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    LaurentExpr a = RandomExpr(rng) / (1 - T(1, 2) * V(-4)) / (1 + U(2) * Z(-1));
    std::string s = a.ToString();
    LaurentExpr b = LaurentExpr::Parse(s);
    CHECK(b.ToString() == s);
    CHECK(b == a);
  }
  CHECK(LaurentExpr::Parse("-3/2*t1^2*v^-1 + u - 1").ToString() == "-3/2*t1^2*v^-1 + u - 1");
  CHECK_THROWS_AS(LaurentExpr::Parse("t9"), std::invalid_argument);
}

TEST_CASE("binomial splitting") {
  // 1 - v^6 = -Phi1 Phi2 Phi3 Phi6 (v)
  Exponents a = UnitExponents(kV, 6);
  Splitting s = SplitBinomial(a, -1);
  CHECK(s.coeff == -1);
  CHECK(s.factors.size() == 4);
  LaurentExpr prod = LaurentExpr(s.coeff);
  for (auto& [f, k] : s.factors) prod *= LaurentExpr(f.poly()).Power(k);
  CHECK(prod == 1 - V(6));
  // Denominator 1 + v + v^2 is recognized as Phi3(v).
  LaurentExpr e = 1 / (1 + V() + V(2));
  REQUIRE(e.denominator().size() == 1);
  CHECK(e.denominator().begin()->first.ToString() == "Phi3(v)");
}

TEST_CASE("factored products agree with expression arithmetic") {
  Exponents a = ZeroExponents();
  a[TVar(1)] = 2;
  a[kV] = -2;
  Exponents b = UnitExponents(kV, 2);
  Factored f = Factored::Monomial(UnitExponents(kU, 3), Rational(-2, 3)) *
               Factored::OneMinus(a).Power(2) / Factored::OneMinus(b) /
               Factored::OneMinus(Neg(a));
  LaurentExpr g = Rational(-2, 3) * U(3) * (1 - T(1, 2) * V(-2)).Power(2) /
                  (1 - V(2)) / (1 - T(1, -2) * V(2));
  CHECK(f.ToExpr() == g);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    Point p = RandomPoint(rng, 2, false);
    CHECK(f.Evaluate(p) == g.Evaluate(p));
  }
  CHECK(Factored::OneMinus(ZeroExponents()).IsZero());
  CHECK_THROWS_AS(Factored::OneMinus(ZeroExponents()).Inverse(), std::domain_error);
  // Sum with cancellation across distinct binomials: 1/(1-v) - (1+v)/(1-v^2) = 0.
  Factored x = Factored::OneMinus(UnitExponents(kV, 1)).Inverse();
  Factored y = Factored::OneMinus(UnitExponents(kV, 2)).Inverse();
  LaurentExpr s = SumToExpr({x, -y, -(y * Factored::Monomial(UnitExponents(kV, 1)))});
  CHECK(s.IsZero());
}

TEST_CASE("series examples") {
  LaurentExpr f = 1 / (1 - T(1) * Z(-1));
  LaurentSeries s = ExpandSeries(f, Direction::kAtInfinity, 2);
  CHECK(s.start == 0);
  CHECK(s.coeffs.size() == 3);
  CHECK(s.Coefficient(0) == 1);
  CHECK(s.Coefficient(1) == T(1));
  CHECK(s.Coefficient(2) == T(1, 2));

  LaurentSeries s0 = ExpandSeries(Z() / (Z() - 1), Direction::kAtZero, 2);
  CHECK(s0.Coefficient(0) == 0);
  CHECK(s0.Coefficient(1) == -1);
  CHECK(s0.Coefficient(2) == -1);

  LaurentExpr psi = T(2, -1) * T(1) * V(-1) * (1 - T(2, 2) * V(3) * Z(-1)) /
                    (1 - T(1, 2) * V() * Z(-1));
  LaurentSeries sp = ExpandSeries(psi, Direction::kAtInfinity, 0);
  CHECK(sp.Coefficient(0) == T(2, -1) * T(1) * V(-1));
  CHECK_THROWS_AS(ExpandSeries(1 / (1 + T(1) + Z()), Direction::kAtZero, 2),
                  std::invalid_argument);
}

TEST_CASE("series recomposition and two routes") {
  // psi-like product with z-free constants and both orientations of binomials.
  Exponents g1 = ZeroExponents(), g2 = ZeroExponents(), g3 = ZeroExponents();
  g1[TVar(1)] = 2; g1[kV] = 1; g1[kZ] = -1;
  g2[TVar(2)] = -2; g2[kV] = 3; g2[kU] = 2; g2[kZ] = -1;
  g3[TVar(1)] = -2; g3[kV] = -1; g3[kZ] = -1;
  Factored f = Factored::Monomial(UnitExponents(kV, -1), 3) * Factored::OneMinus(g1).Inverse() *
               Factored::OneMinus(g2) * Factored::OneMinus(g3).Power(-2) *
               Factored::OneMinus(UnitExponents(kV, 2));
  LaurentExpr e = f.ToExpr();
  for (Direction d : {Direction::kAtInfinity, Direction::kAtZero}) {
    const int order = 5;
    LaurentSeries s = ExpandSeries(e, d, order);
    std::vector<Polynomial> route2 = ProductSeries<Polynomial>(
        f, d, order, [](const Exponents& x) { return Polynomial::Monomial(x); });
    for (int k = 0; k <= order; ++k) CHECK(s.Coefficient(k) == LaurentExpr(route2[k]));
    // Recomposition: series * den agrees with num through the order.
    LaurentExpr trunc;
    for (int k = s.start; k <= order; ++k) {
      trunc += s.Coefficient(k) * (d == Direction::kAtInfinity ? Z(-k) : Z(k));
    }
    LaurentExpr resid = trunc * LaurentExpr(e.DenominatorPolynomial()) - LaurentExpr(e.numerator());
    int a = 1 << 20;
    for (auto& [zk, c] : e.DenominatorPolynomial().SplitByVar(kZ)) a = std::min(a, WExponent(d, zk));
    int survivors = 0;
    for (auto& [zk, c] : resid.numerator().SplitByVar(kZ)) {
      // Only the truncation tail may survive.
      if (WExponent(d, zk) <= order + a) CHECK(c.IsZero());
      ++survivors;
    }
    CHECK(survivors > 0);
    std::mt19937_64 rng(9);
    Point p = RandomPoint(rng, 2, false);
    std::vector<Rational> route3 = ProductSeries<Rational>(
        f, d, order, [&](const Exponents& x) { return p.Monomial(x); });
    for (int k = 0; k <= order; ++k) CHECK(route3[k] == route2[k].Evaluate(p));
  }
}

}  // namespace
}  // namespace laumon
