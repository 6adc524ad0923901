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

#ifndef LAUMON_REPORT_H_
#define LAUMON_REPORT_H_

#include <vector>

#include "json.hpp"
#include "laumon/finite_action.h"
#include "laumon/patterns.h"
#include "laumon/toroidal_action.h"

namespace laumon {

// {"n": n, "d": [[d11], [d21, d22], ...]}
nlohmann::json PatternJson(const FinitePattern& p);
// {"n": n, "lambdas": [[...], ...]}
nlohmann::json PatternJson(const AffinePattern& p);

// Listing grouped by degree vector: {"kind", "n", "count", "blocks": [{"degree",
// "count", "patterns"}]}.
nlohmann::json FiniteListing(int n, const std::vector<std::vector<int>>& degrees);
nlohmann::json AffineListing(int n, const std::vector<std::vector<int>>& degrees);

// Full matrix of one operator from the block of `degree` to the block it
// maps into. Entries are in canonical text form, rows and columns in
// enumeration order. Degree vectors are (d_1..d_{n-1}) finite and
// (d_0..d_{n-1}) affine.
nlohmann::json FiniteMatrix(const ModeSpec& op, int n, const std::vector<int>& degree);
nlohmann::json AffineMatrix(const AffineModeSpec& op, int n, const std::vector<int>& degree);

// Parses "e", "f", "psi+", "psi-", "t" (finite) and additionally "ehat",
// "fhat", "psihat+", "psihat-", "chev_k", "chev_e", "chev_f" (affine).
ModeKind ParseModeKind(const std::string& s);
AffineModeKind ParseAffineModeKind(const std::string& s);

}  // namespace laumon

#endif  // LAUMON_REPORT_H_
