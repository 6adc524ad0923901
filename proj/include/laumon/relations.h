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

#ifndef LAUMON_RELATIONS_H_
#define LAUMON_RELATIONS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "laumon/action.h"
#include "laumon/finite_action.h"
#include "laumon/toroidal_action.h"

namespace laumon {

// One factor of a word: its mode is slots[slot] + offset (kT letters ignore both).
struct Letter {
  OpRef op;
  int slot = -1;
  int offset = 0;
};

// scalar * letters[0] * letters[1] * ...; the rightmost letter acts first.
struct Word {
  Factored scalar;
  std::vector<Letter> letters;
};

// Adds scale * (psi^+_m - psi^-_m) on the diagonal, m the sum of the slots.
struct PsiTerm {
  OpRef node;
  Factored scale;
  std::vector<int> slots;
};

// A mode-form identity sum(words) + sum(psi terms) = 0.
struct Relation {
  std::string id;
  std::string family;
  int num_slots = 0;
  std::vector<Word> words;
  std::vector<PsiTerm> psi;
};

enum class Strategy { kSymbolic, kRandom };

struct Scope {
  int max_total = 3;  // D
  int window = 2;     // R: each slot ranges over [-R, R]
  Strategy strategy = Strategy::kSymbolic;
  uint64_t seed = 1;
  int trials = 5;
  int workers = 1;
};

struct Counterexample {
  std::string source;
  std::string target;
  std::vector<int> modes;
  std::string residual;
  std::string point;  // random strategy only
};

struct Report {
  std::string relation;
  std::string family;
  int n = 0;
  bool affine = false;
  Scope scope;
  bool pass = true;
  int64_t entries_checked = 0;
  int64_t predicted_entries = -1;  // -1 when not applicable
  std::optional<Counterexample> counterexample;
};

nlohmann::json ToJson(const Report& r);
std::string StrategyName(Strategy s);

// ---- Relation builders ----

// q-commutation in mode form with q = v^q_exp:
// x_{a+1} y_b - q x_a y_{b+1} - q y_b x_{a+1} + y_{b+1} x_a.
Relation PairRelation(const OpRef& x, const OpRef& y, int q_exp, const std::string& family);
// x_a y_b - y_b x_a.
Relation Commutation(const OpRef& x, const OpRef& y, const std::string& family);
// [e_{k,a}, f_{l,b}] - delta_kl (psi^+_{a+b} - psi^-_{a+b}) / (v - v^-1).
Relation CommutatorRelation(int k, int l);
// Symmetrized cubic with middle coefficient `middle` (v + v^-1 normally).
Relation SerreRelation(const OpRef& x, const OpRef& y, const Factored& middle,
                       const std::string& family);
Factored QuantumTwo();  // v + v^-1

// Zero-mode gl_n families on the finite action.
std::vector<Relation> GlRelations(int n);
// The nested form [x,[x,y]_v]_v with [a,b]_v = ab - v ba; expected to fail.
Relation NestedGlSerre(int i, int j);

// ---- Verification ----

template <class Action>
Report VerifyRelation(const Action& action, const Relation& rel, const Scope& scope);

// Per-transition check of (z - q beta) Psi_tgt(z) = (q z - beta) Psi_src(z),
// q = v^q_exp, for the x-operator `x` against the psi series `psi`.
template <class Action>
Report VerifyPsiX(const Action& action, const OpRef& x, const OpRef& psi, int q_exp,
                  const std::string& family, const Scope& scope);

// Asserts that every psi eigen-operator is diagonal on the basis.
template <class Action>
Report VerifyPsiPsi(const Action& action, const Scope& scope);

// ---- Suites ----

// Loop relations on the finite action.
std::vector<Report> LoopSuite(int n, const Scope& scope);
// Loop relations on nodes 1..n with the boundary pair (n, 1) replaced by
// the hat-shifted boundary families.
std::vector<Report> ToroidalSuite(int n, const Scope& scope);
// Zero-mode gl_n families with the Cartan generators t_i.
std::vector<Report> GlSuite(int n, const Scope& scope);
// Mutated relations; every report is expected to fail.
std::vector<Report> NegativeControls(const Scope& scope);

// Worker count from LAUMON_WORKERS, default 1.
int WorkersFromEnv();

}  // namespace laumon

#endif  // LAUMON_RELATIONS_H_
