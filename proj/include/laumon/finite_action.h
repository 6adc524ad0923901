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

#ifndef LAUMON_FINITE_ACTION_H_
#define LAUMON_FINITE_ACTION_H_

#include <map>
#include <vector>

#include "laumon/action.h"
#include "laumon/laurent_expr.h"
#include "laumon/patterns.h"

namespace laumon {

// Matrix coefficients of f_{i,r} and e_{i,r} between fixed points, read off
// the source pattern. Throws std::invalid_argument for an invalid move.
Factored FModeCoeff(const FinitePattern& src, int i, int j, int r);
Factored EModeCoeff(const FinitePattern& src, int i, int j, int r);
// Spectral parameters: s_ij v^i for f, s_ij v^{i+2} for e.
Exponents FSpectral(const FinitePattern& src, int i, int j);
Exponents ESpectral(const FinitePattern& src, int i, int j);

// Zero-mode coefficients written directly in t, v and d_ij.
Factored ZeroModeF(const FinitePattern& src, int i, int j);
Factored ZeroModeE(const FinitePattern& src, int i, int j);

// Eigenvalue of psi_i(z) as a product in z.
Factored PsiEigenvalue(const FinitePattern& p, int i);
// prod_{j<=m} (1 - z^-1 s_mj), 0 <= m <= n.
Factored BSeries(const FinitePattern& p, int m);
// The same eigenvalue assembled from a_j(z) = b_j(z) with shifted arguments.
Factored PsiFromASeries(const FinitePattern& p, int i);
// The four-factor expression with b_mi = b_i / b_m, 0 <= m < i.
Factored PsiFromBmi(const FinitePattern& p, int i, int m);

// Coefficient of z^-m in the expansion at infinity (+) or zero (-);
// zero when the sign and m disagree.
LaurentExpr PsiMode(const FinitePattern& p, int i, int m, int sign);

LaurentExpr ChiCoeff(const FinitePattern& p, int i, int a);

// Eigenvalue of t_i: t_i v^{d_{i-1} - d_i + i - 1}, 1 <= i <= n.
Factored TCartan(const FinitePattern& p, int i);

// The e-operators used for relation checking carry this constant.
Exponents FiniteKappaE();

enum class ModeKind { kE, kF, kPsiPlus, kPsiMinus, kTCartan };

struct ModeSpec {
  ModeKind kind;
  int node;
  int mode = 0;
};

using GradedVector = std::map<FinitePattern, LaurentExpr>;

// Applies the literal operator. Throws on mixed n or bad node.
GradedVector Apply(const ModeSpec& op, const GradedVector& x);

// Sparse action used by the relation engine.
class FiniteAction {
 public:
  using Pattern = FinitePattern;

  // normalized: e-steps carry FiniteKappaE().
  explicit FiniteAction(int n, bool normalized = true);

  int n() const { return n_; }
  std::vector<int> Nodes() const;
  bool IsAffine() const { return false; }
  std::vector<Step<FinitePattern>> Steps(const OpRef& op, const FinitePattern& src) const;
  Factored Psi(const OpRef& node, const FinitePattern& p) const;
  // Cartan matrix entry of sl_n.
  int Cartan(int k, int l) const;
  std::vector<FinitePattern> Basis(int max_total) const;
  std::vector<int> DegreeKey(const FinitePattern& p) const { return p.DegreeVector(); }
  std::vector<int> ShiftKey(std::vector<int> key, const OpRef& op, int sign) const;

 private:
  int n_;
  bool normalized_;
};

}  // namespace laumon

#endif  // LAUMON_FINITE_ACTION_H_
