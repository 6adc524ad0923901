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

#include "laumon/invariants.h"

#include <string>

#include "laumon/finite_action.h"
#include "laumon/tangent_oracle.h"
#include "laumon/toroidal_action.h"

namespace laumon {
namespace {

class Tally {
 public:
  Tally(const std::string& relation, const std::string& family, int n, bool affine, int max_total,
        int window) {
    r_.relation = relation;
    r_.family = family;
    r_.n = n;
    r_.affine = affine;
    r_.scope.max_total = max_total;
    r_.scope.window = window;
  }

  // Records one compared entry; keeps the first mismatch.
  void Entry(bool ok, const std::string& source, const std::string& target, std::vector<int> modes,
             const std::string& residual) {
    ++r_.entries_checked;
    if (ok || r_.counterexample) return;
    r_.counterexample = Counterexample{source, target, std::move(modes), residual, ""};
  }
  template <class A, class B>
  void Compare(const A& got, const B& want, const std::string& source, const std::string& target,
               std::vector<int> modes) {
    bool ok = got == want;
    Entry(ok, source, target, std::move(modes), ok ? "" : (got - want).ToString());
  }
  Report Done() {
    r_.pass = !r_.counterexample.has_value();
    return r_;
  }

 private:
  Report r_;
};

LaurentExpr X(int var, int k = 1) { return LaurentExpr::Variable(var, k); }

int Int(int64_t x) { return static_cast<int>(x); }

}  // namespace

Report ZeroModeFormulaCheck(int n, int max_total) {
  Tally t("zero_mode_formulas", "zero_modes", n, false, max_total, 0);
  for (const auto& p : EnumerateFiniteUpTo(n, max_total)) {
    for (int i = 1; i < n; ++i) {
      for (const auto& mv : Neighbors(p, i, 1)) {
        t.Compare(FModeCoeff(p, i, mv.j, 0).ToExpr(), ZeroModeF(p, i, mv.j).ToExpr(), p.ToString(),
                  mv.target.ToString(), {i, mv.j});
      }
      for (const auto& mv : Neighbors(p, i, -1)) {
        t.Compare(EModeCoeff(p, i, mv.j, 0).ToExpr(), ZeroModeE(p, i, mv.j).ToExpr(), p.ToString(),
                  mv.target.ToString(), {i, mv.j});
      }
    }
  }
  return t.Done();
}

Report PsiRoutesCheck(int n, int max_total) {
  Tally t("psi_two_routes", "psi_routes", n, false, max_total, 0);
  for (const auto& p : EnumerateFiniteUpTo(n, max_total)) {
    for (int i = 1; i < n; ++i) {
      t.Compare(PsiFromASeries(p, i).ToExpr(), PsiEigenvalue(p, i).ToExpr(), p.ToString(), p.ToString(), {i});
    }
  }
  return t.Done();
}

Report PsiVacuumCheck(int n) {
  Tally t("psi_vacuum", "psi_routes", n, false, 0, 0);
  FinitePattern z(n);
  for (int i = 1; i < n; ++i) {
    LaurentExpr want = X(TVar(i + 1), -1) * X(TVar(i)) * X(kV, -1) *
                       (1 - X(TVar(i + 1), 2) * X(kV, i + 2) * X(kZ, -1)) /
                       (1 - X(TVar(i), 2) * X(kV, i) * X(kZ, -1));
    t.Compare(PsiEigenvalue(z, i).ToExpr(), want, z.ToString(), z.ToString(), {i});
  }
  return t.Done();
}

Report FiniteCutoffCheck(int n, int max_total) {
  Tally t("psi_b_series_cutoff", "cutoff", n, false, max_total, 0);
  for (const auto& p : EnumerateFiniteUpTo(n, max_total)) {
    for (int i = 1; i < n; ++i) {
      LaurentExpr first = PsiFromBmi(p, i, 0).ToExpr();
      for (int m = 1; m < i; ++m) t.Compare(PsiFromBmi(p, i, m).ToExpr(), first, p.ToString(), p.ToString(), {i, m});
    }
  }
  return t.Done();
}

Report AffineCutoffCheck(int n, int max_total, int depth) {
  Tally t("affine_cutoff", "cutoff", n, true, max_total, 0);
  for (const auto& p : EnumerateAffineUpTo(n, max_total)) {
    for (int i = 1; i <= n; ++i) {
      int64_t top = i - p.MaxLength();
      LaurentExpr psi = PsiEigenvalueAffine(p, i).ToExpr();
      for (int64_t c = top; c >= top - depth; --c) {
        t.Compare(PsiEigenvalueAffine(p, i, c).ToExpr(), psi, p.ToString(), p.ToString(), {i, Int(c)});
        for (const auto& mv : NeighborsAffine(p, i, 1)) {
          t.Compare(FModeCoeffAffine(p, i, mv.j, 0, c).ToExpr(), FModeCoeffAffine(p, i, mv.j, 0).ToExpr(),
                    p.ToString(), mv.target.ToString(), {i, Int(mv.j), Int(c)});
        }
        for (const auto& mv : NeighborsAffine(p, i, -1)) {
          t.Compare(EModeCoeffAffine(p, i, mv.j, 0, c).ToExpr(), EModeCoeffAffine(p, i, mv.j, 0).ToExpr(),
                    p.ToString(), mv.target.ToString(), {i, Int(mv.j), Int(c)});
        }
      }
    }
  }
  return t.Done();
}

Report PeriodicShiftCheck(int n, int max_total, int window) {
  Tally t("periodic_shift", "periodic_shift", n, true, max_total, window);
  LaurentExpr hat = X(kV, n) * X(kU, 2);
  for (const auto& p : EnumerateAffineUpTo(n, max_total)) {
    for (int k = 1; k <= n; ++k) {
      for (OpKind kind : {OpKind::kF, OpKind::kE}) {
        bool f = kind == OpKind::kF;
        auto coeff = [&](int64_t i, int64_t j, int r) {
          return (f ? FModeCoeffAffine(p, i, j, r) : EModeCoeffAffine(p, i, j, r)).ToExpr();
        };
        LaurentExpr base_want = f ? X(kU, -1) * X(kV, -n) : X(kU) * X(kV, n);
        for (const auto& mv : NeighborsAffine(p, k, f ? 1 : -1)) {
          LaurentExpr base = coeff(k - n, mv.j - n, 0) / coeff(k, mv.j, 0);
          t.Compare(base, base_want, p.ToString(), mv.target.ToString(), {k, Int(mv.j), 0});
          for (int r = -window; r <= window; ++r) {
            LaurentExpr ratio = coeff(k - n, mv.j - n, r) / coeff(k, mv.j, r);
            t.Compare(ratio / base, hat.Power(-r), p.ToString(), mv.target.ToString(), {k, Int(mv.j), r});
          }
        }
      }
    }
  }
  return t.Done();
}

Report ChevalleyNodeZeroCheck(int n, int max_total) {
  Tally t("chevalley_node_zero", "chevalley", n, true, max_total, 0);
  for (const auto& p : EnumerateAffineUpTo(n, max_total)) {
    ChevalleyOps ops = Chevalley(p, 0);
    // Rescaling z leaves the zero mode of the hat-shifted psi unchanged.
    t.Compare(ops.k.ToExpr(), PsiModeAffine(p, n, 0, 1), p.ToString(), p.ToString(), {0});
    auto fn = NeighborsAffine(p, n, 1);
    t.Entry(ops.f.size() == fn.size(), p.ToString(), "", {0}, "f move count");
    for (size_t a = 0; a < fn.size() && a < ops.f.size(); ++a) {
      t.Compare(ops.f[a].coeff.ToExpr() / FModeCoeffAffine(p, n, fn[a].j, 0).ToExpr(), X(kU, -1) * X(kV, -n),
                p.ToString(), fn[a].target.ToString(), {0, Int(fn[a].j)});
    }
    auto en = NeighborsAffine(p, n, -1);
    t.Entry(ops.e.size() == en.size(), p.ToString(), "", {0}, "e move count");
    for (size_t a = 0; a < en.size() && a < ops.e.size(); ++a) {
      t.Compare(ops.e[a].coeff.ToExpr() / EModeCoeffAffine(p, n, en[a].j, 0).ToExpr(), X(kU) * X(kV, n),
                p.ToString(), en[a].target.ToString(), {0, Int(en[a].j)});
    }
  }
  return t.Done();
}

std::vector<Report> OracleSuite(int n, int max_total, int window) {
  Tally sizes("tangent_sizes", "oracle", n, true, max_total, 0);
  Tally bott("bott_closed_form", "oracle", n, true, max_total, window);
  Tally closed_form("renormalized_closed_form", "oracle", n, true, max_total, window);
  Tally adjoint("renormalized_adjoint", "oracle", n, true, max_total, window);
  for (const auto& p : EnumerateAffineUpTo(n, max_total)) {
    int64_t space = WeightCount(TangentCharacterSpace(p));
    sizes.Entry(space == 2 * p.Total(), p.ToString(), p.ToString(), {},
                space == 2 * p.Total() ? "" : "size " + std::to_string(space));
    for (int i = 1; i <= n; ++i) {
      for (OpKind kind : {OpKind::kE, OpKind::kF}) {
        bool f = kind == OpKind::kF;
        for (const auto& mv : NeighborsAffine(p, i, f ? 1 : -1)) {
          std::string src = p.ToString(), tgt = mv.target.ToString();
          if (f) {
            int64_t corr = WeightCount(TangentCharacterCorrespondence(p, i, mv.j));
            sizes.Entry(corr == 2 * p.Total() + 1, src, tgt, {i, Int(mv.j)},
                        corr == 2 * p.Total() + 1 ? "" : "size " + std::to_string(corr));
          }
          for (int r = -window; r <= window; ++r) {
            std::vector<int> modes{i, Int(mv.j), r};
            Factored closed = f ? FModeCoeffAffine(p, i, mv.j, r) : EModeCoeffAffine(p, i, mv.j, r);
            Factored b = BottCoefficient(kind, p, i, mv.j, r);
            bott.Entry(b == closed, src, tgt, modes, b == closed ? "" : (b.ToExpr() - closed.ToExpr()).ToString());
            Factored renorm = RenormalizedCoeff(kind, p, i, mv.j, r);
            Factored gt = f ? RenormalizedClosedF(mv.target, i, mv.j, r) : RenormalizedClosedE(mv.target, i, mv.j, r);
            closed_form.Entry(renorm == gt, src, tgt, modes, renorm == gt ? "" : (renorm.ToExpr() - gt.ToExpr()).ToString());
            Factored adj = RenormalizedFromAdjoint(kind, p, i, mv.j, r);
            adjoint.Entry(adj == renorm, src, tgt, modes,
                          adj == renorm ? "" : (adj.ToExpr() - renorm.ToExpr()).ToString());
          }
        }
      }
    }
  }
  return {sizes.Done(), bott.Done(), closed_form.Done(), adjoint.Done()};
}

}  // namespace laumon
