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

#include "doctest.h"

namespace laumon {
namespace {

TEST_CASE("cross-check reports pass and count entries") {
  for (const Report& r : {ZeroModeFormulaCheck(3, 2), PsiRoutesCheck(3, 2), PsiVacuumCheck(4), FiniteCutoffCheck(4, 1),
                          AffineCutoffCheck(3, 1, 2), PeriodicShiftCheck(3, 1, 1), ChevalleyNodeZeroCheck(3, 1)}) {
    INFO(r.relation);
    CHECK(r.pass);
    CHECK(r.entries_checked > 0);
  }
  for (const Report& r : OracleSuite(3, 1, 0)) {
    INFO(r.relation);
    CHECK(r.pass);
    CHECK(r.entries_checked > 0);
  }
}

TEST_CASE("psi vacuum check covers every node") {
  CHECK(PsiVacuumCheck(4).entries_checked == 3);
  CHECK(PsiVacuumCheck(2).entries_checked == 1);
}

}  // namespace
}  // namespace laumon
