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

#ifndef LAUMON_INVARIANTS_H_
#define LAUMON_INVARIANTS_H_

#include <vector>

#include "laumon/relations.h"

namespace laumon {

// Structural cross-checks reported in the same format as the relation
// suites. Each compares two independent computations of one quantity on
// every pattern with at most max_total boxes.

// e_{i,0} / f_{i,0} coefficients against the t, v, d zero-mode formulas.
Report ZeroModeFormulaCheck(int n, int max_total);
// psi eigenvalue product against the a-series route.
Report PsiRoutesCheck(int n, int max_total);
// Vacuum psi against the closed two-factor form, every node.
Report PsiVacuumCheck(int n);
// psi via the b-series for every admissible m against m = 0.
Report FiniteCutoffCheck(int n, int max_total);
// Affine psi and e/f coefficients for cutoffs down to depth below the
// largest admissible one against the default cutoff.
Report AffineCutoffCheck(int n, int max_total, int depth);
// Coefficients at node k - n over node k: ratio(r) / ratio(0) equals
// (v^n u^2)^-r and ratio(0) is u^-1 v^-n (f) or u v^n (e).
Report PeriodicShiftCheck(int n, int max_total, int window);
// Chevalley node 0 against hat-shifted node n zero modes; informational.
Report ChevalleyNodeZeroCheck(int n, int max_total);

// Tangent characters, fixed-point coefficients and renormalized forms:
// sizes, Bott against closed forms, C-conjugation against the renormalized closed forms,
// adjoint route against C-conjugation. Modes in [-window, window].
std::vector<Report> OracleSuite(int n, int max_total, int window);

}  // namespace laumon

#endif  // LAUMON_INVARIANTS_H_
