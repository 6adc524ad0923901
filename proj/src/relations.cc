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

#include "laumon/relations.h"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <sstream>

#include "laumon/parallel.h"
#include "laumon/point.h"
#include "laumon/series.h"

namespace laumon {
namespace {

Factored Mono(const Exponents& e, const Rational& c = 1) { return Factored::Monomial(e, c); }
Factored VPow(int k) { return Mono(UnitExponents(kV, k)); }

OpRef Op(OpKind kind, int node, bool hat = false, int power = 1) {
  OpRef o;
  o.kind = kind;
  o.node = node;
  o.hat = hat;
  o.power = power;
  return o;
}

std::string PointString(const Point& p) {
  std::string s;
  for (int var = 0; var < kNumVars; ++var) {
    if (!p.IsSet(var)) continue;
    if (!s.empty()) s += ",";
    s += VarName(var) + "=" + p.Get(var).get_str();
  }
  return s;
}

// Pattern counts per degree vector, enumerated independently of the basis.
size_t CountWithDegree(const FiniteAction& a, const std::vector<int>& deg) {
  return EnumerateFinite(a.n(), deg).size();
}
size_t CountWithDegree(const ToroidalAction& a, const std::vector<int>& deg) {
  return EnumerateAffine(a.n(), deg).size();
}
int KeyLength(const FiniteAction& a) { return a.n() - 1; }
int KeyLength(const ToroidalAction& a) { return a.n(); }

template <class Action>
std::vector<int> NetShift(const Action& action, const std::vector<Letter>& letters,
                          std::vector<int> key) {
  for (const Letter& l : letters) key = action.ShiftKey(key, l.op, 1);
  return key;
}

bool AllNonNegative(const std::vector<int>& k) {
  for (int x : k) {
    if (x < 0) return false;
  }
  return true;
}

int Sum(const std::vector<int>& k) {
  int s = 0;
  for (int x : k) s += x;
  return s;
}

template <class Action>
int64_t Predicted(const Action& action, const std::vector<Letter>& letters, int slots,
                  const Scope& scope) {
  int64_t modes = 1;
  for (int s = 0; s < slots; ++s) modes *= 2 * scope.window + 1;
  int64_t total = 0;
  for (const auto& deg : DegreeVectorsUpTo(KeyLength(action), scope.max_total)) {
    std::vector<int> t = NetShift(action, letters, deg);
    if (!AllNonNegative(t) || Sum(t) > scope.max_total) continue;
    total += static_cast<int64_t>(CountWithDegree(action, deg) * CountWithDegree(action, t)) * modes;
  }
  return total;
}

struct UnitResult {
  int64_t entries = 0;
  std::optional<Counterexample> cex;
};

void Merge(const std::vector<UnitResult>& units, Report* r) {
  for (const auto& u : units) {
    r->entries_checked += u.entries;
    if (u.cex && !r->counterexample) r->counterexample = u.cex;
  }
  r->pass = !r->counterexample.has_value();
  if (r->predicted_entries >= 0 && r->predicted_entries != r->entries_checked) r->pass = false;
}

template <class P>
struct Path {
  P target;
  Factored coeff;
  std::vector<Exponents> betas;
};

template <class Action>
std::vector<Path<typename Action::Pattern>> WordPaths(const Action& action, const Word& w,
                                                      const typename Action::Pattern& src) {
  using P = typename Action::Pattern;
  std::vector<Path<P>> paths{{src, w.scalar, std::vector<Exponents>(w.letters.size(), ZeroExponents())}};
  for (size_t idx = w.letters.size(); idx-- > 0;) {
    std::vector<Path<P>> next;
    for (const auto& path : paths) {
      for (auto& st : action.Steps(w.letters[idx].op, path.target)) {
        Path<P> q{std::move(st.target), path.coeff * st.coeff, path.betas};
        q.betas[idx] = st.beta;
        next.push_back(std::move(q));
      }
    }
    paths = std::move(next);
  }
  return paths;
}

int LetterMode(const Letter& l, const std::vector<int>& slots) {
  return l.slot < 0 ? l.offset : slots[l.slot] + l.offset;
}

// All slot assignments in [-R, R]^k in lexicographic order.
std::vector<std::vector<int>> ModeTuples(int k, int R) {
  std::vector<std::vector<int>> out{{}};
  for (int s = 0; s < k; ++s) {
    std::vector<std::vector<int>> next;
    for (const auto& t : out) {
      for (int a = -R; a <= R; ++a) {
        auto u = t;
        u.push_back(a);
        next.push_back(u);
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::string StrategyName(Strategy s) { return s == Strategy::kSymbolic ? "symbolic" : "random"; }

nlohmann::json ToJson(const Report& r) {
  nlohmann::json j;
  j["relation"] = r.relation;
  j["family"] = r.family;
  j["scope"] = {{"n", r.n},
                {"affine", r.affine},
                {"max_total", r.scope.max_total},
                {"window", r.scope.window},
                {"strategy", StrategyName(r.scope.strategy)},
                {"seed", r.scope.seed},
                {"trials", r.scope.strategy == Strategy::kRandom ? r.scope.trials : 0}};
  j["status"] = r.pass ? "pass" : "fail";
  j["entries_checked"] = r.entries_checked;
  if (r.predicted_entries >= 0) j["predicted_entries"] = r.predicted_entries;
  if (r.counterexample) {
    const Counterexample& c = *r.counterexample;
    j["counterexample"] = {{"source", c.source},
                           {"target", c.target},
                           {"modes", c.modes},
                           {"residual", c.residual}};
    if (!c.point.empty()) j["counterexample"]["point"] = c.point;
  }
  return j;
}

int WorkersFromEnv() {
  const char* s = std::getenv("LAUMON_WORKERS");
  if (s == nullptr) return 1;
  int w = std::atoi(s);
  return w > 0 ? w : 1;
}

// ---- Builders ----

Factored QuantumTwo() {
  return VPow(-1) * Factored::OneMinus(UnitExponents(kV, 4)) / Factored::OneMinus(UnitExponents(kV, 2));
}

Relation PairRelation(const OpRef& x, const OpRef& y, int q_exp, const std::string& family) {
  Relation r;
  r.family = family;
  r.id = family + ":" + OpName(x) + "," + OpName(y) + ":q=v^" + std::to_string(q_exp);
  r.num_slots = 2;
  Factored mq = -VPow(q_exp);
  r.words = {{Factored(1), {{x, 0, 1}, {y, 1, 0}}},
             {mq, {{x, 0, 0}, {y, 1, 1}}},
             {mq, {{y, 1, 0}, {x, 0, 1}}},
             {Factored(1), {{y, 1, 1}, {x, 0, 0}}}};
  return r;
}

Relation Commutation(const OpRef& x, const OpRef& y, const std::string& family) {
  Relation r;
  r.family = family;
  r.id = family + ":" + OpName(x) + "," + OpName(y);
  r.num_slots = 2;
  r.words = {{Factored(1), {{x, 0, 0}, {y, 1, 0}}}, {Factored(-1), {{y, 1, 0}, {x, 0, 0}}}};
  return r;
}

Relation CommutatorRelation(int k, int l) {
  OpRef e = Op(OpKind::kE, k), f = Op(OpKind::kF, l);
  Relation r = Commutation(e, f, "x_commutator");
  if (k == l) r.psi.push_back({Op(OpKind::kE, k), -VMinusVInverse().Inverse(), {0, 1}});
  return r;
}

Relation SerreRelation(const OpRef& x, const OpRef& y, const Factored& middle,
                       const std::string& family) {
  Relation r;
  r.family = family;
  r.id = family + ":" + OpName(x) + "," + OpName(y);
  r.num_slots = 3;
  for (auto [a, b] : {std::pair{0, 1}, std::pair{1, 0}}) {
    r.words.push_back({Factored(1), {{x, a, 0}, {x, b, 0}, {y, 2, 0}}});
    r.words.push_back({-middle, {{x, a, 0}, {y, 2, 0}, {x, b, 0}}});
    r.words.push_back({Factored(1), {{y, 2, 0}, {x, a, 0}, {x, b, 0}}});
  }
  return r;
}

std::vector<Relation> GlRelations(int n) {
  std::vector<Relation> out;
  auto T = [](int i, int p = 1) { return Op(OpKind::kT, i, false, p); };
  auto zero = [](const OpRef& o) { return Letter{o, -1, 0}; };
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Relation r;
      r.family = "gl_cartan_commute";
      r.id = "gl_cartan_commute:t" + std::to_string(i) + ",t" + std::to_string(j);
      r.words = {{Factored(1), {zero(T(i)), zero(T(j))}}, {Factored(-1), {zero(T(j)), zero(T(i))}}};
      out.push_back(r);
    }
    Relation inv;
    inv.family = "gl_cartan_commute";
    inv.id = "gl_cartan_commute:t" + std::to_string(i) + "^-1";
    inv.words = {{Factored(1), {zero(T(i)), zero(T(i, -1))}},
                 {Factored(1), {zero(T(i, -1)), zero(T(i))}},
                 {Factored(-2), {}}};
    out.push_back(inv);
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j < n; ++j) {
      int ex = (i == j ? 1 : 0) - (i == j + 1 ? 1 : 0);
      for (OpKind kind : {OpKind::kE, OpKind::kF}) {
        OpRef x = Op(kind, j);
        int e = kind == OpKind::kE ? ex : -ex;
        Relation r;
        r.family = "gl_cartan_conjugation";
        r.id = "gl_cartan_conjugation:t" + std::to_string(i) + "," + OpName(x);
        r.words = {{Factored(1), {zero(T(i)), zero(x), zero(T(i, -1))}}, {-VPow(e), {zero(x)}}};
        out.push_back(r);
      }
    }
  }
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      Relation r;
      r.family = "gl_ef_commutator";
      r.id = "gl_ef_commutator:e" + std::to_string(i) + ",f" + std::to_string(j);
      OpRef e = Op(OpKind::kE, i), f = Op(OpKind::kF, j);
      r.words = {{Factored(1), {zero(e), zero(f)}}, {Factored(-1), {zero(f), zero(e)}}};
      if (i == j) {
        Factored s = VMinusVInverse().Inverse();
        r.words.push_back({-s, {zero(T(i)), zero(T(i + 1, -1))}});
        r.words.push_back({s, {zero(T(i, -1)), zero(T(i + 1))}});
      }
      out.push_back(r);
    }
  }
  auto zero_modes = [](Relation r) {
    r.num_slots = 0;
    for (auto& w : r.words) {
      for (auto& l : w.letters) l.slot = -1;
    }
    return r;
  };
  for (int i = 1; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      for (OpKind kind : {OpKind::kE, OpKind::kF}) {
        Relation r = zero_modes(Commutation(Op(kind, i), Op(kind, j), "gl_distant_commute"));
        out.push_back(r);
      }
    }
  }
  for (int i = 1; i < n; ++i) {
    for (int j : {i - 1, i + 1}) {
      if (j < 1 || j >= n) continue;
      for (OpKind kind : {OpKind::kE, OpKind::kF}) {
        out.push_back(zero_modes(SerreRelation(Op(kind, i), Op(kind, j), QuantumTwo(), "gl_serre")));
      }
    }
  }
  return out;
}

Relation NestedGlSerre(int i, int j) {
  // [e_i, [e_i, e_j]_v]_v = e_i e_i e_j - 2v e_i e_j e_i + v^2 e_j e_i e_i
  OpRef x = Op(OpKind::kE, i), y = Op(OpKind::kE, j);
  Relation r;
  r.family = "gl_serre_nested";
  r.id = "gl_serre_nested:" + OpName(x) + "," + OpName(y);
  r.words = {{Factored(1), {{x, -1, 0}, {x, -1, 0}, {y, -1, 0}}},
             {Mono(UnitExponents(kV, 1), -2), {{x, -1, 0}, {y, -1, 0}, {x, -1, 0}}},
             {VPow(2), {{y, -1, 0}, {x, -1, 0}, {x, -1, 0}}}};
  return r;
}

// ---- Engine ----

template <class Action>
Report VerifyRelation(const Action& action, const Relation& rel, const Scope& scope) {
  using P = typename Action::Pattern;
  Report rep;
  rep.relation = rel.id;
  rep.family = rel.family;
  rep.n = action.n();
  rep.affine = action.IsAffine();
  rep.scope = scope;
  const std::vector<Letter>& shape = rel.words.front().letters;
  rep.predicted_entries = Predicted(action, shape, rel.num_slots, scope);

  std::vector<P> basis = action.Basis(scope.max_total);
  std::map<std::vector<int>, std::vector<P>> blocks;
  for (const P& p : basis) blocks[action.DegreeKey(p)].push_back(p);
  for (auto& [key, b] : blocks) std::sort(b.begin(), b.end());
  std::vector<std::vector<int>> tuples = ModeTuples(rel.num_slots, scope.window);
  int max_psi_mode = scope.window * rel.num_slots;

  auto unit = [&](size_t idx) -> UnitResult {
    UnitResult res;
    const P& src = basis[idx];
    auto it = blocks.find(NetShift(action, shape, action.DegreeKey(src)));
    if (it == blocks.end()) return res;
    const std::vector<P>& block = it->second;
    std::vector<Path<P>> paths;
    std::vector<const Word*> owner;
    for (const Word& w : rel.words) {
      for (auto& p : WordPaths(action, w, src)) {
        if (!std::binary_search(block.begin(), block.end(), p.target)) {
          throw std::logic_error("relation " + rel.id + " left its target block");
        }
        paths.push_back(std::move(p));
        owner.push_back(&w);
      }
    }
    std::vector<Factored> psis;
    for (const PsiTerm& t : rel.psi) psis.push_back(action.Psi(t.node, src));

    auto record = [&](const P& tgt, const std::vector<int>& modes, std::string residual,
                      std::string point) {
      if (!res.cex) res.cex = Counterexample{src.ToString(), tgt.ToString(), modes, residual, point};
    };

    if (scope.strategy == Strategy::kSymbolic) {
      auto mono = [](const Exponents& e) { return Polynomial::Monomial(e); };
      std::vector<std::vector<Polynomial>> plus, minus;
      for (const Factored& f : psis) {
        plus.push_back(ProductSeries<Polynomial>(f, Direction::kAtInfinity, max_psi_mode, mono));
        minus.push_back(ProductSeries<Polynomial>(f, Direction::kAtZero, max_psi_mode, mono));
      }
      for (const auto& modes : tuples) {
        std::map<P, std::vector<Factored>> terms;
        for (size_t k = 0; k < paths.size(); ++k) {
          Exponents e = ZeroExponents();
          const auto& letters = owner[k]->letters;
          for (size_t l = 0; l < letters.size(); ++l) {
            e = Add(e, Scale(paths[k].betas[l], LetterMode(letters[l], modes)));
          }
          terms[paths[k].target].push_back(paths[k].coeff * Mono(e));
        }
        for (const P& tgt : block) {
          ++res.entries;
          if (res.cex) continue;
          auto tt = terms.find(tgt);
          LaurentExpr residual = tt == terms.end() ? LaurentExpr(0) : SumToExpr(tt->second);
          if (tgt == src) {
            for (size_t q = 0; q < rel.psi.size(); ++q) {
              int m = 0;
              for (int s : rel.psi[q].slots) m += modes[s];
              Polynomial d;
              if (m >= 0) d = d + plus[q][m];
              if (m <= 0) d = d - minus[q][-m];
              residual += LaurentExpr(d) * rel.psi[q].scale.ToExpr();
            }
          }
          if (!residual.IsZero()) record(tgt, modes, residual.ToString(), "");
        }
      }
      return res;
    }

    // Random strategy: one point per trial for the whole source unit.
    for (int trial = 0; trial < scope.trials; ++trial) {
      std::mt19937_64 rng(UnitSeed(scope.seed, rel.id + "|" + src.ToString(), trial));
      Point pt;
      std::vector<Rational> cval(paths.size());
      std::vector<std::vector<Rational>> bval(paths.size());
      std::vector<std::vector<Rational>> plus, minus;
      std::vector<Rational> scale;
      for (int attempt = 0;; ++attempt) {
        if (attempt == 1000) throw std::runtime_error("no admissible sample point");
        pt = RandomPoint(rng, action.n(), false);
        try {
          for (size_t k = 0; k < paths.size(); ++k) {
            cval[k] = paths[k].coeff.Evaluate(pt);
            bval[k].clear();
            for (const Exponents& b : paths[k].betas) bval[k].push_back(pt.Monomial(b));
          }
          plus.clear();
          minus.clear();
          scale.clear();
          auto mono = [&](const Exponents& e) { return pt.Monomial(e); };
          for (size_t q = 0; q < psis.size(); ++q) {
            plus.push_back(ProductSeries<Rational>(psis[q], Direction::kAtInfinity, max_psi_mode, mono));
            minus.push_back(ProductSeries<Rational>(psis[q], Direction::kAtZero, max_psi_mode, mono));
            scale.push_back(rel.psi[q].scale.Evaluate(pt));
          }
          break;
        } catch (const VanishingDenominator&) {
        }
      }
      for (const auto& modes : tuples) {
        std::map<P, Rational> acc;
        for (size_t k = 0; k < paths.size(); ++k) {
          Rational x = cval[k];
          const auto& letters = owner[k]->letters;
          for (size_t l = 0; l < letters.size(); ++l) {
            x *= Pow(bval[k][l], LetterMode(letters[l], modes));
          }
          acc[paths[k].target] += x;
        }
        for (const P& tgt : block) {
          if (trial == 0) ++res.entries;
          if (res.cex) continue;
          Rational residual = acc.count(tgt) ? acc[tgt] : Rational(0);
          if (tgt == src) {
            for (size_t q = 0; q < rel.psi.size(); ++q) {
              int m = 0;
              for (int s : rel.psi[q].slots) m += modes[s];
              Rational d = 0;
              if (m >= 0) d += plus[q][m];
              if (m <= 0) d -= minus[q][-m];
              residual += d * scale[q];
            }
          }
          if (residual != 0) record(tgt, modes, residual.get_str(), PointString(pt));
        }
      }
    }
    return res;
  };

  Merge(ParallelMap<UnitResult>(basis.size(), scope.workers, unit), &rep);
  return rep;
}

template <class Action>
Report VerifyPsiX(const Action& action, const OpRef& x, const OpRef& psi, int q_exp,
                  const std::string& family, const Scope& scope) {
  using P = typename Action::Pattern;
  Report rep;
  rep.family = family;
  rep.relation = family + ":" + OpName(x) + ",psi" + (psi.hat ? "^" : "") +
                 std::to_string(psi.node) + ":q=v^" + std::to_string(q_exp);
  rep.n = action.n();
  rep.affine = action.IsAffine();
  rep.scope = scope;
  std::vector<Letter> shape{{x, 0, 0}};
  rep.predicted_entries = Predicted(action, shape, 0, scope);
  std::vector<P> basis = action.Basis(scope.max_total);
  std::map<std::vector<int>, std::vector<P>> blocks;
  for (const P& p : basis) blocks[action.DegreeKey(p)].push_back(p);
  for (auto& [key, b] : blocks) std::sort(b.begin(), b.end());
  Exponents q = UnitExponents(kV, q_exp);
  Exponents z = UnitExponents(kZ, 1);

  auto unit = [&](size_t idx) -> UnitResult {
    UnitResult res;
    const P& src = basis[idx];
    auto it = blocks.find(action.ShiftKey(action.DegreeKey(src), x, 1));
    if (it == blocks.end()) return res;
    res.entries = static_cast<int64_t>(it->second.size());
    Factored psi_src = action.Psi(psi, src);
    for (const auto& st : action.Steps(x, src)) {
      if (res.cex) break;
      Factored psi_tgt = action.Psi(psi, st.target);
      // (z - q b) = z (1 - q b / z);  (q z - b) = -b (1 - q z / b)
      Factored lhs = Mono(z) * Factored::OneMinus(Sub(Add(q, st.beta), z)) * psi_tgt;
      Factored rhs = Mono(st.beta, -1) * Factored::OneMinus(Sub(Add(q, z), st.beta)) * psi_src;
      if (scope.strategy == Strategy::kSymbolic) {
        LaurentExpr r = SumToExpr({lhs, -rhs});
        if (!r.IsZero()) {
          res.cex = Counterexample{src.ToString(), st.target.ToString(), {}, r.ToString(), ""};
        }
        continue;
      }
      for (int trial = 0; trial < scope.trials && !res.cex; ++trial) {
        std::mt19937_64 rng(UnitSeed(scope.seed, rep.relation + "|" + src.ToString() + "|" +
                                                     st.target.ToString(), trial));
        for (int attempt = 0;; ++attempt) {
          if (attempt == 1000) throw std::runtime_error("no admissible sample point");
          Point pt = RandomPoint(rng, action.n(), true);
          try {
            Rational r = lhs.Evaluate(pt) - rhs.Evaluate(pt);
            if (r != 0) {
              res.cex = Counterexample{src.ToString(), st.target.ToString(), {}, r.get_str(),
                                       PointString(pt)};
            }
            break;
          } catch (const VanishingDenominator&) {
          }
        }
      }
    }
    return res;
  };
  Merge(ParallelMap<UnitResult>(basis.size(), scope.workers, unit), &rep);
  return rep;
}

template <class Action>
Report VerifyPsiPsi(const Action& action, const Scope& scope) {
  using P = typename Action::Pattern;
  Report rep;
  rep.family = "psi_psi";
  rep.relation = "psi_psi:diagonal";
  rep.n = action.n();
  rep.affine = action.IsAffine();
  rep.scope = scope;
  std::vector<OpRef> series;
  for (int k : action.Nodes()) series.push_back(Op(OpKind::kE, k));
  if (action.IsAffine()) series.push_back(Op(OpKind::kE, action.n(), true));
  std::vector<P> basis = action.Basis(scope.max_total);
  auto unit = [&](size_t idx) -> UnitResult {
    UnitResult res;
    const P& src = basis[idx];
    auto mono = [](const Exponents& e) { return Polynomial::Monomial(e); };
    for (const OpRef& s : series) {
      ++res.entries;
      // Diagonal by construction; both expansions must exist and the modes
      // must be z-free scalars.
      Factored f = action.Psi(s, src);
      for (Direction d : {Direction::kAtInfinity, Direction::kAtZero}) {
        for (const Polynomial& c : ProductSeries<Polynomial>(f, d, scope.window, mono)) {
          for (const auto& t : c.terms()) {
            if (t.exp[kZ] != 0 && !res.cex) {
              res.cex = Counterexample{src.ToString(), src.ToString(), {}, c.ToString(), ""};
            }
          }
        }
      }
    }
    return res;
  };
  Merge(ParallelMap<UnitResult>(basis.size(), scope.workers, unit), &rep);
  return rep;
}

// ---- Suites ----

namespace {

void Append(std::vector<Report>* out, Report r) { out->push_back(std::move(r)); }

}  // namespace

std::vector<Report> LoopSuite(int n, const Scope& scope) {
  FiniteAction a(n);
  std::vector<Report> out;
  Append(&out, VerifyPsiPsi(a, scope));
  std::vector<int> nodes = a.Nodes();
  for (int k : nodes) {
    for (int l : nodes) {
      int c = a.Cartan(k, l);
      Append(&out, VerifyPsiX(a, Op(OpKind::kE, k), Op(OpKind::kE, l), c, "psi_x", scope));
      Append(&out, VerifyPsiX(a, Op(OpKind::kF, k), Op(OpKind::kE, l), -c, "psi_x", scope));
    }
  }
  for (int k : nodes) {
    for (int l : nodes) Append(&out, VerifyRelation(a, CommutatorRelation(k, l), scope));
  }
  for (int k : nodes) {
    Append(&out, VerifyRelation(a, PairRelation(Op(OpKind::kE, k), Op(OpKind::kE, k), 2, "xx_same"), scope));
    Append(&out, VerifyRelation(a, PairRelation(Op(OpKind::kF, k), Op(OpKind::kF, k), -2, "xx_same"), scope));
  }
  for (int k : nodes) {
    for (int l : nodes) {
      if (k == l) continue;
      int c = a.Cartan(k, l);
      if (c != 0) {
        Append(&out, VerifyRelation(a, PairRelation(Op(OpKind::kE, k), Op(OpKind::kE, l), c, "xx_adjacent"), scope));
        Append(&out, VerifyRelation(a, PairRelation(Op(OpKind::kF, k), Op(OpKind::kF, l), -c, "xx_adjacent"), scope));
      } else if (k < l) {
        Append(&out, VerifyRelation(a, Commutation(Op(OpKind::kE, k), Op(OpKind::kE, l), "xx_adjacent"), scope));
        Append(&out, VerifyRelation(a, Commutation(Op(OpKind::kF, k), Op(OpKind::kF, l), "xx_adjacent"), scope));
      }
    }
  }
  for (int k : nodes) {
    for (int l : nodes) {
      if (a.Cartan(k, l) != -1) continue;
      for (OpKind kind : {OpKind::kE, OpKind::kF}) {
        Append(&out, VerifyRelation(a, SerreRelation(Op(kind, k), Op(kind, l), QuantumTwo(), "serre"), scope));
      }
    }
  }
  return out;
}

std::vector<Report> ToroidalSuite(int n, const Scope& scope) {
  ToroidalAction a(n);
  std::vector<Report> out;
  Append(&out, VerifyPsiPsi(a, scope));
  std::vector<int> nodes = a.Nodes();
  auto boundary = [n](int k, int l) { return (k == n && l == 1) || (k == 1 && l == n); };
  for (int k : nodes) {
    for (int l : nodes) {
      if (boundary(k, l)) {
        // tor2.1: psi^_n against x_1; tor2.2: psi_1 against x^_n.
        bool x_hat = k == n;
        std::string fam = x_hat ? "tor_psix_boundary_b" : "tor_psix_boundary_a";
        OpRef psi = Op(OpKind::kE, l, !x_hat);
        Append(&out, VerifyPsiX(a, Op(OpKind::kE, k, x_hat), psi, -1, fam, scope));
        Append(&out, VerifyPsiX(a, Op(OpKind::kF, k, x_hat), psi, 1, fam, scope));
        continue;
      }
      int c = a.Cartan(k, l);
      Append(&out, VerifyPsiX(a, Op(OpKind::kE, k), Op(OpKind::kE, l), c, "psi_x", scope));
      Append(&out, VerifyPsiX(a, Op(OpKind::kF, k), Op(OpKind::kE, l), -c, "psi_x", scope));
    }
  }
  for (int k : nodes) {
    for (int l : nodes) Append(&out, VerifyRelation(a, CommutatorRelation(k, l), scope));
  }
  for (int k : nodes) {
    Append(&out, VerifyRelation(a, PairRelation(Op(OpKind::kE, k), Op(OpKind::kE, k), 2, "xx_same"), scope));
    Append(&out, VerifyRelation(a, PairRelation(Op(OpKind::kF, k), Op(OpKind::kF, k), -2, "xx_same"), scope));
  }
  for (int k : nodes) {
    for (int l : nodes) {
      if (k == l) continue;
      if (boundary(k, l)) {
        OpRef xe = Op(OpKind::kE, k, k == n), ye = Op(OpKind::kE, l, l == n);
        OpRef xf = Op(OpKind::kF, k, k == n), yf = Op(OpKind::kF, l, l == n);
        Append(&out, VerifyRelation(a, PairRelation(xe, ye, -1, "tor_xx_boundary"), scope));
        Append(&out, VerifyRelation(a, PairRelation(xf, yf, 1, "tor_xx_boundary"), scope));
        continue;
      }
      int c = a.Cartan(k, l);
      if (c != 0) {
        Append(&out, VerifyRelation(a, PairRelation(Op(OpKind::kE, k), Op(OpKind::kE, l), c, "xx_adjacent"), scope));
        Append(&out, VerifyRelation(a, PairRelation(Op(OpKind::kF, k), Op(OpKind::kF, l), -c, "xx_adjacent"), scope));
      } else if (k < l) {
        Append(&out, VerifyRelation(a, Commutation(Op(OpKind::kE, k), Op(OpKind::kE, l), "xx_adjacent"), scope));
        Append(&out, VerifyRelation(a, Commutation(Op(OpKind::kF, k), Op(OpKind::kF, l), "xx_adjacent"), scope));
      }
    }
  }
  for (int k : nodes) {
    for (int l : nodes) {
      if (a.Cartan(k, l) != -1 || boundary(k, l)) continue;
      for (OpKind kind : {OpKind::kE, OpKind::kF}) {
        Append(&out, VerifyRelation(a, SerreRelation(Op(kind, k), Op(kind, l), QuantumTwo(), "serre"), scope));
      }
    }
  }
  return out;
}

std::vector<Report> GlSuite(int n, const Scope& scope) {
  FiniteAction a(n);
  std::vector<Report> out;
  for (const Relation& r : GlRelations(n)) Append(&out, VerifyRelation(a, r, scope));
  return out;
}

std::vector<Report> NegativeControls(const Scope& scope) {
  std::vector<Report> out;
  FiniteAction f2(2), f3(3), literal3(3, false);
  ToroidalAction t3(3);
  // Cubic relations need three-box blocks.
  Scope cubic = scope;
  cubic.max_total = std::max(scope.max_total, 3);
  auto tag = [](Report r, const std::string& name) {
    r.relation = "control:" + name + ":" + r.relation;
    return r;
  };
  Append(&out, tag(VerifyRelation(f2, PairRelation(Op(OpKind::kF, 1), Op(OpKind::kF, 1), -1, "xx_same"), scope),
                   "xx_same_q_v^-1"));
  Append(&out, tag(VerifyRelation(f3, PairRelation(Op(OpKind::kF, 1), Op(OpKind::kF, 2), 2, "xx_adjacent"), scope),
                   "xx_adjacent_q_v^2"));
  Append(&out, tag(VerifyRelation(f3, SerreRelation(Op(OpKind::kF, 1), Op(OpKind::kF, 2), Factored(2), "serre"), cubic),
                   "serre_middle_2"));
  Append(&out, tag(VerifyRelation(literal3, CommutatorRelation(1, 1), scope), "commutator_without_kappa"));
  Append(&out, tag(VerifyRelation(t3, PairRelation(Op(OpKind::kF, 3), Op(OpKind::kF, 1), 1, "tor_xx_boundary"), scope),
                   "tor_xx_boundary_unshifted"));
  Append(&out, tag(VerifyPsiX(t3, Op(OpKind::kF, 1), Op(OpKind::kE, 3), 1, "tor_psix_boundary_a", scope),
                   "tor_psix_boundary_a_unshifted"));
  Append(&out, tag(VerifyRelation(f3, NestedGlSerre(1, 2), cubic), "gl_serre_nested"));
  return out;
}

template Report VerifyRelation<FiniteAction>(const FiniteAction&, const Relation&, const Scope&);
template Report VerifyRelation<ToroidalAction>(const ToroidalAction&, const Relation&, const Scope&);
template Report VerifyPsiX<FiniteAction>(const FiniteAction&, const OpRef&, const OpRef&, int,
                                         const std::string&, const Scope&);
template Report VerifyPsiX<ToroidalAction>(const ToroidalAction&, const OpRef&, const OpRef&, int,
                                           const std::string&, const Scope&);
template Report VerifyPsiPsi<FiniteAction>(const FiniteAction&, const Scope&);
template Report VerifyPsiPsi<ToroidalAction>(const ToroidalAction&, const Scope&);

}  // namespace laumon
