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

#include "laumon/cli.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

namespace laumon {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run Cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json Json(const Run& r) { return nlohmann::json::parse(r.out); }

TEST_CASE("cli patterns") {
  CHECK(Json(Cli({"patterns", "--finite", "-n", "3", "-d", "1,1"}))["count"] == 2);
  CHECK(Json(Cli({"patterns", "--affine", "-n", "2", "--total", "1"}))["count"] == 2);
  nlohmann::json one = Json(Cli({"patterns", "--finite", "-n", "2", "-d", "0"}));
  CHECK(one["count"] == 1);
  CHECK(one["blocks"][0]["patterns"][0] == nlohmann::json::parse(R"({"n":2,"d":[[0]]})"));
  nlohmann::json up = Json(Cli({"patterns", "--affine", "-n", "3", "--max-total", "2"}));
  CHECK(up["count"] == 1 + 3 + 9);
  CHECK(Cli({"patterns", "--finite", "-n", "3", "-d", "1"}).code == 2);
  CHECK(Cli({"patterns", "-n", "3", "-d", "1,1"}).code == 2);
}

TEST_CASE("cli verify") {
  Run loop = Cli({"verify", "--suite", "loop", "-n", "3", "-D", "3", "-R", "2", "--strategy", "random", "--seed", "7"});
  CHECK(loop.code == 0);
  CHECK(Json(loop)["status"] == "pass");
  CHECK(Cli({"verify", "--suite", "toroidal", "-n", "3", "-D", "2", "-R", "2"}).code == 0);
  Run oracle = Cli({"verify", "--suite", "oracle", "-n", "3", "-D", "2"});
  CHECK(oracle.code == 0);
  CHECK(Json(oracle)["reports"].size() == 4);
  CHECK(Cli({"verify", "--suite", "controls"}).code == 0);
  CHECK(Cli({"verify", "--suite", "toroidal", "-n", "2"}).code == 2);
  CHECK(Cli({"verify", "--suite", "nope"}).code == 2);
  CHECK(Cli({"verify", "--strategy", "sometimes"}).code == 2);
}

TEST_CASE("cli specialize") {
  Run zero = Cli({"specialize", "-n", "3", "-K", "1", "--mu", "0,0,0", "--max-degree", "2"});
  CHECK(zero.code == 0);
  CHECK(Json(zero)["closure"]["status"] == "pass");
  CHECK(Cli({"specialize", "character", "-n", "3", "-K", "1", "--mu", "1,0,0", "--max-degree", "2"}).code == 0);
  Run bad = Cli({"specialize", "-n", "3", "-K", "0", "--mu", "0,0,0"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("level must be positive") != std::string::npos);
  CHECK(Cli({"specialize", "-n", "3", "-K", "1", "--mu", "0,1,0"}).code == 2);
  CHECK(Cli({"specialize", "-n", "3", "-K", "1", "--u-shift", "1"}).code == 1);
  nlohmann::json blk = Json(Cli({"specialize", "-n", "3", "-K", "1", "--block", "0,0,0", "-R", "0"}));
  CHECK(blk["block"]["entries"].size() == 1);
}

TEST_CASE("cli op matrix") {
  nlohmann::json m = Json(Cli({"op", "matrix", "--finite", "-n", "3", "--op", "f", "--node", "1", "-d", "0,1"}));
  CHECK(m["rows"].size() == 1);
  CHECK(m["cols"].size() == 2);
  CHECK(m["entries"].size() == 1);
  nlohmann::json a = Json(Cli({"op", "matrix", "--affine", "-n", "3", "--op", "psi+", "--node", "2", "--mode", "1",
                              "-d", "1,1,0"}));
  CHECK(a["node_residue"] == 2);
  CHECK(a["entries"].size() == a["rows"].size());
  CHECK(Cli({"op", "matrix", "--affine", "-n", "3", "--op", "t", "-d", "0,0,0"}).code == 2);
}

TEST_CASE("cli config file and determinism") {
  const char* path = "cli_test_config.json";
  {
    std::ofstream f(path);
    f << R"({"n": 3, "max_total": 1, "window": 1, "suite": "loop", "strategy": "random", "seed": 9})";
  }
  nlohmann::json j = Json(Cli({"verify", "--config", path, "-R", "0"}));
  CHECK(j["scope"]["window"] == 0);
  CHECK(j["scope"]["max_total"] == 1);
  CHECK(j["scope"]["strategy"] == "random");
  std::remove(path);
  std::vector<std::string> args = {"verify", "--suite", "all", "-n", "3", "-D", "2", "-R", "1",
                                   "--strategy", "random", "--seed", "3"};
  Run a = Cli(args);
  setenv("LAUMON_WORKERS", "3", 1);
  Run b = Cli(args);
  unsetenv("LAUMON_WORKERS");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

}  // namespace
}  // namespace laumon
