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

#ifndef LAUMON_CLI_H_
#define LAUMON_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace laumon {

// Runs the laumon command line; args excludes the program name. JSON goes to
// --output when given, else to `out` with the summary on `err`.
// Returns 0 if every check passed, 1 if any check failed, 2 on errors.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace laumon

#endif  // LAUMON_CLI_H_
