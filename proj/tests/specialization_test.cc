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

#include <random>

#include "doctest.h"
#include "laumon/toroidal_action.h"

namespace laumon {
namespace {

LaurentExpr X(int var, int k = 1) { return LaurentExpr::Variable(var, k); }
SpecializedExpr VPow(int64_t k) { return SpecializedExpr::FromParts(VPolynomial(1, k), VPolynomial(Rational(1))); }

LevelWeight W(int n, int k, std::vector<int> mu) { return {n, k, std::move(mu)}; }

// Random dominant weight of level K.
LevelWeight RandomWeight(std::mt19937_64& rng, int n, int k) {
  std::uniform_int_distribution<int> d(0, k);
  std::vector<int> mu(n);
  for (auto& x : mu) x = d(rng);
  std::sort(mu.begin(), mu.end(), std::greater<int>());
  int shift = std::uniform_int_distribution<int>(-2, 2)(rng);
  for (auto& x : mu) x += shift;
  return W(n, k, mu);
}

TEST_CASE("weight extension") {
  ExtendedWeight a = ExtendWeight(W(2, 1, {1, 0}));
  CHECK(a(1) == 0);
  CHECK(a(2) == -1);
  CHECK(a(0) == 0);
  CHECK(a(-1) == 1);
  for (int n = 2; n <= 4; ++n) {
    for (int k = 1; k <= 3; ++k) {
      ExtendedWeight z = ExtendWeight(W(n, k, std::vector<int>(n, 0)));
      for (int64_t i = -10; i <= 10; ++i) CHECK(z(i) == FloorDiv(-i, n) * k);
    }
  }
  std::mt19937_64 rng(5);
  LevelWeight w = W(3, 2, {2, 1, 0});
  ExtendedWeight m = ExtendWeight(w);
  std::uniform_int_distribution<int64_t> pick(-1000, 1000);
  for (int t = 0; t < 100; ++t) {
    int64_t i = pick(rng);
    CHECK(m(i + 3) == m(i) - 2);
    CHECK(m(i + 1) <= m(i));
  }
  CHECK_THROWS_AS(ExtendWeight(W(3, 1, {0, 1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(ExtendWeight(W(3, 1, {2, 1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(ExtendWeight(W(3, 0, {0, 0, 0})), std::invalid_argument);
}

TEST_CASE("D(mu): reduced check agrees with brute force") {
  std::mt19937_64 rng(17);
  AffinePattern empty(3);
  int in = 0, out = 0;
  for (int k = 1; k <= 2; ++k) {
    for (int trial = 0; trial < 4; ++trial) {
      LevelWeight w = RandomWeight(rng, 3, k);
      CHECK(InDMu(empty, w));
      for (const auto& p : EnumerateAffineUpTo(3, 3)) {
        bool fast = InDMu(p, w);
        CHECK(fast == InDMuBruteForce(p, w, 9));
        (fast ? in : out) += 1;
      }
    }
  }
  CHECK(in > 0);
  CHECK(out > 0);
}

TEST_CASE("D(mu): a pattern failing at l = 1 is rejected") {
  LevelWeight w = W(3, 1, {0, 0, 0});
  ExtendedWeight mt(w);
  bool found = false;
  for (const auto& p : EnumerateAffineUpTo(3, 2)) {
    bool fails_at_one = false;
    for (int64_t j = 1; j <= 3; ++j) {
      for (int64_t i = j; i <= j + p.MaxLength(); ++i) {
        if (p.d(i, j) - mt(j) > p.d(i + 1, j + 1) - mt(j + 1)) fails_at_one = true;
      }
    }
    if (!fails_at_one) continue;
    found = true;
    CHECK_FALSE(InDMu(p, w));
  }
  CHECK(found);
}

TEST_CASE("univariate arithmetic") {
  VPolynomial one(Rational(1));
  VPolynomial vm1 = VPolynomial(1, 1) - one;
  VPolynomial v2m1 = VPolynomial(1, 2) - one;
  SpecializedExpr q = SpecializedExpr::FromParts(v2m1, vm1);
  CHECK(q == SpecializedExpr::FromParts(VPolynomial(1, 1) + one, one));
  CHECK(q.ToString() == "v + 1");
  SpecializedExpr r = SpecializedExpr::FromParts(vm1, v2m1.Shift(-3));
  CHECK(r.ToString() == "(v^3)/(v + 1)");
  CHECK(r.Evaluate(Rational(2)) == Rational(8, 3));
  CHECK_THROWS(SpecializedExpr::FromParts(one, VPolynomial()));
}

TEST_CASE("specialization substitution") {
  for (int k = 1; k <= 2; ++k) {
    Specialization s{W(3, k, {1, 0, 0}), 0};
    ExtendedWeight mt(s.weight);
    CHECK(Specialize(X(kU) * X(kV, k + 3), s) == SpecializedExpr(1));
    for (int j = 1; j <= 3; ++j) {
      CHECK(Specialize(X(TVar(j), 2), s) == VPow(2 * mt(j) - 2 * j + 2));
    }
  }
  Specialization s{W(3, 1, {0, 0, 0}), 0};
  LaurentExpr a = (X(TVar(1)) + X(kU)) / (1 - X(kV, 3) * X(TVar(2)));
  LaurentExpr b = X(kV) - X(TVar(3), -1) * X(kU, 2);
  CHECK(Specialize(a * b, s) == Specialize(a, s) * Specialize(b, s));
  CHECK(Specialize(a + b, s) == Specialize(a, s) + Specialize(b, s));
  CHECK(Specialize(a / b, s) == Specialize(a, s) / Specialize(b, s));
  // t_2 = v^{mu~_2 - 1} = v^{-2} at mu = 0, K = 1.
  CHECK_THROWS_AS(Specialize(1 / (1 - X(kV, 2) * X(TVar(2))), s), SpecializationError);
  CHECK_THROWS_AS(Specialize(X(kZ), s), std::invalid_argument);
}

TEST_CASE("renormalized coefficients: conjugation route and spectral factors") {
  Specialization s{W(3, 2, {1, 0, 0}), 0};
  int compared = 0;
  for (const auto& p : EnumerateAffineUpTo(3, 2)) {
    for (int64_t i = 1; i <= 3; ++i) {
      for (OpKind kind : {OpKind::kE, OpKind::kF}) {
        for (const auto& mv : NeighborsAffine(p, i, kind == OpKind::kF ? 1 : -1)) {
          SpecializedExpr x0, x1;
          try {
            x0 = RenormCoeff(kind, p, i, mv.j, 0, s);
            x1 = RenormCoeff(kind, p, i, mv.j, 1, s);
          } catch (const SpecializationError&) {
            continue;
          }
          SpecializedExpr conj;
          try {
            conj = Specialize(RenormalizedCoeff(kind, p, i, mv.j, 0).ToExpr(), s);
          } catch (const SpecializationError&) {
            continue;
          }
          CHECK(conj == x0);
          ++compared;
          int shift = kind == OpKind::kE ? static_cast<int>(i) : static_cast<int>(i) + 2;
          Exponents spectral = Add(PWeight(mv.target, i, mv.j), UnitExponents(kV, shift));
          CHECK(x1 == x0 * VPow(s.VExponent(spectral)));
        }
      }
    }
  }
  CHECK(compared > 50);
}

TEST_CASE("V(mu) closure") {
  for (int k = 1; k <= 2; ++k) {
    Specialization s{W(3, k, {0, 0, 0}), 0};
    ClosureReport total;
    int64_t basis = 0;
    for (const auto& b : SpecializeCharacter(s, 2, 1, 2)) {
      total.Merge(b.closure);
      basis += static_cast<int64_t>(b.basis.size());
      CHECK(b.basis.size() <= static_cast<size_t>(b.all_patterns));
    }
    CHECK(total.pass());
    CHECK(total.internal > 0);
    CHECK(total.crossing > 0);
    CHECK(basis > 1);
  }
  VmuBlock block = BuildVmuBlock({W(3, 1, {0, 0, 0}), 0}, {0, 0, 0}, 1);
  REQUIRE(block.basis.size() == 1);
  // Only node n (the affine node) lowers the level-one vacuum; three modes.
  REQUIRE(block.entries.size() == 3);
  for (const auto& e : block.entries) CHECK(e.node == 3);
  CHECK_THROWS(BuildVmuBlock({W(2, 1, {0, 0}), 0}, {0, 0}, 1));
}

TEST_CASE("V(mu) closure fails under the shifted specialization") {
  Specialization s{W(3, 1, {0, 0, 0}), 1};
  ClosureReport total;
  for (const auto& b : SpecializeCharacter(s, 2, 0, 1)) total.Merge(b.closure);
  CHECK_FALSE(total.pass());
  CHECK(total.numerator_violations > 0);
  CHECK_FALSE(total.first_violation.empty());
}

}  // namespace
}  // namespace laumon
