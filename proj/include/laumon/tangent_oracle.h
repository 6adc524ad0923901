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

#ifndef LAUMON_TANGENT_ORACLE_H_
#define LAUMON_TANGENT_ORACLE_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "laumon/action.h"
#include "laumon/patterns.h"

namespace laumon {

// Torus weights with positive multiplicities.
using WeightMultiset = std::map<Exponents, int>;

int64_t WeightCount(const WeightMultiset& w);
// "t1^2*t2^-2*v^2 x1; ..." in key order.
std::string WeightString(const WeightMultiset& w);

// Tangent space to the affine Laumon space at p. Throws std::logic_error if
// cancellation leaves a nonpositive multiplicity or a unit weight.
WeightMultiset TangentCharacterSpace(const AffinePattern& p);
// Tangent space to the correspondence at (small, small + box (i, j)).
WeightMultiset TangentCharacterCorrespondence(const AffinePattern& small, int64_t i, int64_t j);

// prod (1 - w)^m, the normalization constant C_d.
Factored LambdaProduct(const WeightMultiset& w);
Factored CNorm(const AffinePattern& p);
// prod w^m, the literal product of the weights.
Factored WeightProduct(const AffinePattern& p);

// Matrix coefficient of e_{i,r} or f_{i,r} from src recomputed by the
// fixed-point formula: prefactor * Lambda(T_src) / Lambda(T_corr).
Factored BottCoefficient(OpKind kind, const AffinePattern& src, int64_t i, int64_t j, int r);

// Coefficient in the renormalized basis: plain * C(target) / C(source).
Factored RenormalizedCoeff(OpKind kind, const AffinePattern& src, int64_t i, int64_t j, int r);
// Unreduced product coeff * x^mono * prod (1 - x^a) / prod (1 - x^b).
struct ProductForm {
  Rational coeff = 1;
  Exponents mono = ZeroExponents();
  std::vector<Exponents> num;
  std::vector<Exponents> den;

  Factored ToFactored() const;
};

// Closed forms in the renormalized basis; p and d are read from the target.
ProductForm RenormalizedProduct(OpKind kind, const AffinePattern& target, int64_t i, int64_t j, int r);
Factored RenormalizedClosedE(const AffinePattern& target, int64_t i, int64_t j, int r);
Factored RenormalizedClosedF(const AffinePattern& target, int64_t i, int64_t j, int r);
// Renormalized coefficient from the opposite plain operator:
// e<d'->d> = -f[d->d'] t_i t_{i+1}^-1 v^{D+1-2i} / p_ij(d),
// f<d->d'> = -e[d'->d] t_i^-1 t_{i+1} v^{-D+2i-1} p_ij(d),
// d the smaller pattern and D = d_{i+1} - 2 d_i + d_{i-1} of d.
Factored RenormalizedFromAdjoint(OpKind kind, const AffinePattern& src, int64_t i, int64_t j, int r);

}  // namespace laumon

#endif  // LAUMON_TANGENT_ORACLE_H_
