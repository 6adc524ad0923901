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

#ifndef LAUMON_ACTION_H_
#define LAUMON_ACTION_H_

#include <map>
#include <string>
#include <vector>

#include "laumon/factored.h"

namespace laumon {

// Operator reference used by both actions and by the relation engine.
// kE/kF carry a mode; kT is the diagonal gl_n Cartan generator t_node^power.
enum class OpKind { kE, kF, kT };

struct OpRef {
  OpKind kind = OpKind::kF;
  int node = 1;
  bool hat = false;  // toroidal shift x_n(z v^n u^2); node must be n
  int power = 1;     // kT only
};

std::string OpName(const OpRef& op);

// One matrix entry of a mode family: the coefficient of mode r is
// coeff * x^(r * beta).
template <class P>
struct Step {
  P target;
  Factored coeff;
  Exponents beta;
};

// Mode r coefficient of a step.
template <class P>
Factored AtMode(const Step<P>& s, int r) {
  return s.coeff * Factored::Monomial(Scale(s.beta, r));
}

// (v - v^-1) = -v^-1 (1 - v^2)
Factored VMinusVInverse();

}  // namespace laumon

#endif  // LAUMON_ACTION_H_
