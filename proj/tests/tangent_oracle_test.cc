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

#include "doctest.h"
#include "laumon/toroidal_action.h"

namespace laumon {
namespace {

struct Case {
  OpKind kind;
  AffinePattern src;
  int64_t i;
  int64_t j;
};

// Every single-box move out of a pattern with at most max_total boxes.
std::vector<Case> Moves(int n, int max_total) {
  std::vector<Case> out;
  for (const auto& p : EnumerateAffineUpTo(n, max_total)) {
    for (int64_t i = 1; i <= n; ++i) {
      for (const auto& mv : NeighborsAffine(p, i, -1)) out.push_back({OpKind::kE, p, i, mv.j});
      for (const auto& mv : NeighborsAffine(p, i, 1)) out.push_back({OpKind::kF, p, i, mv.j});
    }
  }
  return out;
}

TEST_CASE("tangent character sizes") {
  for (int n = 3; n <= 4; ++n) {
    for (const auto& p : EnumerateAffineUpTo(n, 2)) {
      CHECK(WeightCount(TangentCharacterSpace(p)) == 2 * p.Total());
      for (int64_t i = 1; i <= n; ++i) {
        for (const auto& mv : NeighborsAffine(p, i, 1)) {
          CHECK(WeightCount(TangentCharacterCorrespondence(p, i, mv.j)) == 2 * p.Total() + 1);
        }
      }
    }
  }
  AffinePattern empty = EnumerateAffineUpTo(3, 0).at(0);
  CHECK(TangentCharacterSpace(empty).empty());
  CHECK(CNorm(empty) == Factored());
}

TEST_CASE("single box: weights and normalization") {
  for (const auto& p : EnumerateAffineTotal(3, 1)) {
    WeightMultiset w = TangentCharacterSpace(p);
    CHECK(WeightCount(w) == 2);
    Exponents prod = ZeroExponents();
    Factored c;
    for (const auto& [e, m] : w) {
      prod = Add(prod, Scale(e, m));
      c *= Factored::OneMinus(e).Power(m);
    }
    CHECK(WeightProduct(p) == Factored::Monomial(prod));
    CHECK(CNorm(p) == c);
  }
}

TEST_CASE("fixed-point formula reproduces the closed-form coefficients") {
  int checked = 0;
  for (const auto& c : Moves(3, 2)) {
    for (int r = -1; r <= 1; ++r) {
      Factored closed = c.kind == OpKind::kE ? EModeCoeffAffine(c.src, c.i, c.j, r)
                                             : FModeCoeffAffine(c.src, c.i, c.j, r);
      CHECK(BottCoefficient(c.kind, c.src, c.i, c.j, r) == closed);
      ++checked;
    }
  }
  CHECK(checked == 207);
}

TEST_CASE("renormalized coefficients: closed forms and adjoint route") {
  for (const auto& c : Moves(3, 2)) {
    AffinePattern tgt = c.src;
    for (const auto& mv : NeighborsAffine(c.src, c.i, c.kind == OpKind::kF ? 1 : -1)) {
      if (mv.j == c.j) tgt = mv.target;
    }
    for (int r = -1; r <= 1; ++r) {
      Factored renorm = RenormalizedCoeff(c.kind, c.src, c.i, c.j, r);
      Factored closed = c.kind == OpKind::kE ? RenormalizedClosedE(tgt, c.i, c.j, r) : RenormalizedClosedF(tgt, c.i, c.j, r);
      CHECK(renorm == closed);
      CHECK(RenormalizedFromAdjoint(c.kind, c.src, c.i, c.j, r) == renorm);
    }
  }
}

TEST_CASE("oracle rejects invalid moves and n = 2") {
  AffinePattern empty = EnumerateAffineUpTo(3, 0).at(0);
  CHECK_THROWS(BottCoefficient(OpKind::kE, empty, 1, 1, 0));
  CHECK_THROWS(BottCoefficient(OpKind::kF, EnumerateAffineUpTo(2, 0).at(0), 1, 1, 0));
}

}  // namespace
}  // namespace laumon
