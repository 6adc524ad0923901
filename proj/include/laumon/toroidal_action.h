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

#ifndef LAUMON_TOROIDAL_ACTION_H_
#define LAUMON_TOROIDAL_ACTION_H_

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "laumon/action.h"
#include "laumon/laurent_expr.h"
#include "laumon/patterns.h"

namespace laumon {

// t_k for any integer k, extended by t_{k+n} = u t_k.
Exponents AffineT(int n, int64_t k);

// Default lower column bound for the telescoped products; every cutoff
// c <= i - MaxLength() gives the same value.
int64_t DefaultCutoff(const AffinePattern& p, int64_t i);

// Matrix coefficients at any integer node i and column j; products run over
// columns k >= cutoff. Throws std::invalid_argument for an invalid move or
// an inadmissible cutoff, and for n < 3.
Factored FModeCoeffAffine(const AffinePattern& src, int64_t i, int64_t j, int r,
                          std::optional<int64_t> cutoff = std::nullopt);
Factored EModeCoeffAffine(const AffinePattern& src, int64_t i, int64_t j, int r,
                          std::optional<int64_t> cutoff = std::nullopt);
Exponents FSpectralAffine(const AffinePattern& src, int64_t i, int64_t j);
Exponents ESpectralAffine(const AffinePattern& src, int64_t i, int64_t j);

Factored PsiEigenvalueAffine(const AffinePattern& p, int64_t i,
                             std::optional<int64_t> cutoff = std::nullopt);
LaurentExpr PsiModeAffine(const AffinePattern& p, int64_t i, int m, int sign);

// v^n u^2; hat-shifted node-n series are x_n(z v^n u^2).
Exponents HatShift(int n);
// psi_n(z v^n u^2).
Factored HatPsi(const AffinePattern& p);

// The e-operators used for relation checking carry this constant.
Exponents AffineKappaE();

// Chevalley generators k_i, e_i, f_i at i in 0..n-1.
struct ChevalleyOps {
  Factored k;
  std::vector<Step<AffinePattern>> e;
  std::vector<Step<AffinePattern>> f;
};
ChevalleyOps Chevalley(const AffinePattern& p, int i);

enum class AffineModeKind {
  kE,
  kF,
  kPsiPlus,
  kPsiMinus,
  kEHat,
  kFHat,
  kPsiHatPlus,
  kPsiHatMinus,
  kChevalleyK,
  kChevalleyE,
  kChevalleyF
};

struct AffineModeSpec {
  AffineModeKind kind;
  int node;  // 1..n; Chevalley kinds take 0..n-1
  int mode = 0;
};

using AffineGradedVector = std::map<AffinePattern, LaurentExpr>;

AffineGradedVector ApplyAffine(const AffineModeSpec& op, const AffineGradedVector& x);

// Sparse action used by the relation engine; nodes 1..n.
class ToroidalAction {
 public:
  using Pattern = AffinePattern;

  explicit ToroidalAction(int n, bool normalized = true);

  int n() const { return n_; }
  std::vector<int> Nodes() const;
  bool IsAffine() const { return true; }
  std::vector<Step<AffinePattern>> Steps(const OpRef& op, const AffinePattern& src) const;
  Factored Psi(const OpRef& node, const AffinePattern& p) const;
  // Cartan matrix of the cyclic quiver.
  int Cartan(int k, int l) const;
  std::vector<AffinePattern> Basis(int max_total) const;
  std::vector<int> DegreeKey(const AffinePattern& p) const { return p.DegreeVector(); }
  std::vector<int> ShiftKey(std::vector<int> key, const OpRef& op, int sign) const;

 private:
  int n_;
  bool normalized_;
};

}  // namespace laumon

#endif  // LAUMON_TOROIDAL_ACTION_H_
