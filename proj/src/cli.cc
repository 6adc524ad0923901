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

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "laumon/invariants.h"
#include "laumon/relations.h"
#include "laumon/report.h"
#include "laumon/specialization.h"

namespace laumon {
namespace {

using nlohmann::json;

constexpr int kFailed = 1;
constexpr int kError = 2;

struct RunConfig {
  int n = 3;
  int max_total = 3;
  int window = 2;
  std::string strategy = "symbolic";
  uint64_t seed = 1;
  int trials = 5;
  std::string output;
  std::vector<int> mu;
  int level = 1;
  std::string suite = "all";
  int u_shift = 0;
};

// Config-file values fill every option of the parsed subcommand that the
// command line left unset.
class ConfigBinder {
 public:
  void Owner(CLI::App* app) { owner_ = app; }
  void Bind(CLI::Option* opt, const std::string& key, std::function<void(const json&)> set) {
    slots_.push_back({owner_, opt, key, std::move(set)});
  }
  void Apply(const std::string& path) const {
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config " + path);
    json j = json::parse(in);
    for (const auto& s : slots_) {
      if (s.owner->parsed() && s.opt->count() == 0 && j.contains(s.key)) s.set(j.at(s.key));
    }
  }

 private:
  struct Slot {
    CLI::App* owner;
    CLI::Option* opt;
    std::string key;
    std::function<void(const json&)> set;
  };
  CLI::App* owner_ = nullptr;
  std::vector<Slot> slots_;
};

template <class T>
void BindValue(ConfigBinder* b, CLI::Option* opt, const std::string& key, T* target) {
  b->Bind(opt, key, [target](const json& j) { *target = j.get<T>(); });
}

void Emit(const json& j, const std::string& output, std::ostream& out) {
  if (output.empty() || output == "-") {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(output);
  if (!f) throw std::runtime_error("cannot write " + output);
  f << j.dump(2) << "\n";
  if (!f) throw std::runtime_error("write failed for " + output);
}

std::ostream& SummaryStream(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return c.output.empty() || c.output == "-" ? err : out;
}

Scope MakeScope(const RunConfig& c) {
  if (c.max_total < 0 || c.window < 0 || c.trials < 0) {
    throw std::invalid_argument("max-total, window and trials must be nonnegative");
  }
  Scope s;
  s.max_total = c.max_total;
  s.window = c.window;
  if (c.strategy == "symbolic") {
    s.strategy = Strategy::kSymbolic;
  } else if (c.strategy == "random") {
    s.strategy = Strategy::kRandom;
  } else {
    throw std::invalid_argument("strategy must be symbolic or random");
  }
  s.seed = c.seed;
  s.trials = c.trials;
  s.workers = WorkersFromEnv();
  return s;
}

int CmdVerify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  Scope scope = MakeScope(c);
  int n = c.n;
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  static const std::vector<std::string> kSuites = {"loop", "toroidal", "gl", "psi", "oracle", "controls"};
  std::vector<std::string> suites;
  if (c.suite == "all") {
    suites = kSuites;
  } else if (std::find(kSuites.begin(), kSuites.end(), c.suite) != kSuites.end()) {
    suites = {c.suite};
  } else {
    throw std::invalid_argument("unknown suite " + c.suite);
  }
  std::ostream& summary = SummaryStream(c, out, err);
  json reports = json::array();
  json skipped = json::array();
  bool pass = true;
  for (const auto& name : suites) {
    bool affine = name == "toroidal" || name == "oracle";
    if (affine && n < 3) {
      if (c.suite != "all") throw std::invalid_argument("suite " + name + " needs n >= 3");
      skipped.push_back(name);
      continue;
    }
    std::vector<Report> rs;
    if (name == "loop") {
      rs = LoopSuite(n, scope);
    } else if (name == "toroidal") {
      rs = ToroidalSuite(n, scope);
      rs.push_back(PeriodicShiftCheck(n, scope.max_total, scope.window));
      rs.push_back(AffineCutoffCheck(n, scope.max_total, 4));
      rs.push_back(ChevalleyNodeZeroCheck(n, scope.max_total));
    } else if (name == "gl") {
      rs = GlSuite(n, scope);
      rs.push_back(ZeroModeFormulaCheck(n, scope.max_total));
    } else if (name == "psi") {
      rs = {PsiRoutesCheck(n, scope.max_total), PsiVacuumCheck(n), FiniteCutoffCheck(n, scope.max_total)};
    } else if (name == "oracle") {
      rs = OracleSuite(n, scope.max_total, scope.window);
    } else {
      rs = NegativeControls(scope);
    }
    bool control = name == "controls";
    for (const auto& r : rs) {
      json j = ToJson(r);
      j["suite"] = name;
      bool ok = control ? !r.pass : r.pass;
      if (control) j["expected"] = "fail";
      pass = pass && ok;
      reports.push_back(j);
      summary << (ok ? "PASS " : "FAIL ") << name << " " << r.relation << " (" << r.entries_checked
              << " entries" << (control ? ", expected to fail" : "") << ")\n";
    }
  }
  json j;
  j["command"] = "verify";
  j["suite"] = c.suite;
  j["scope"] = {{"n", n},
                {"max_total", scope.max_total},
                {"window", scope.window},
                {"strategy", c.strategy},
                {"seed", scope.seed},
                {"trials", scope.strategy == Strategy::kRandom ? scope.trials : 0}};
  j["reports"] = reports;
  if (!skipped.empty()) j["skipped"] = skipped;
  j["status"] = pass ? "pass" : "fail";
  Emit(j, c.output, out);
  summary << (pass ? "verify: all checks passed" : "verify: FAILED") << "\n";
  return pass ? 0 : kFailed;
}

int CmdPatterns(bool finite, bool affine, int n, const std::vector<int>& degree, std::optional<int> total,
                std::optional<int> max_total, const RunConfig& c, std::ostream& out) {
  if (finite == affine) throw std::invalid_argument("choose exactly one of --finite and --affine");
  if (n < (finite ? 2 : 1)) throw std::invalid_argument("n too small");
  int given = !degree.empty() + total.has_value() + max_total.has_value();
  if (given != 1) throw std::invalid_argument("give exactly one of -d, --total and --max-total");
  int slots = finite ? n - 1 : n;
  std::vector<std::vector<int>> degrees;
  if (!degree.empty()) {
    if (static_cast<int>(degree.size()) != slots) {
      throw std::invalid_argument("degree vector needs " + std::to_string(slots) + " entries");
    }
    for (int x : degree) {
      if (x < 0) throw std::invalid_argument("degrees must be nonnegative");
    }
    degrees = {degree};
  } else {
    int m = total ? *total : *max_total;
    if (m < 0) throw std::invalid_argument("total must be nonnegative");
    for (auto& d : DegreeVectorsUpTo(slots, m)) {
      int s = 0;
      for (int x : d) s += x;
      if (max_total || s == m) degrees.push_back(d);
    }
  }
  json j = finite ? FiniteListing(n, degrees) : AffineListing(n, degrees);
  j["command"] = "patterns";
  Emit(j, c.output, out);
  return 0;
}

int CmdSpecialize(const RunConfig& c, const std::vector<int>& block, std::ostream& out, std::ostream& err) {
  LevelWeight w{c.n, c.level, c.mu.empty() ? std::vector<int>(c.n, 0) : c.mu};
  ValidateLevelWeight(w);
  if (c.n < 3) throw std::invalid_argument("specialization needs n >= 3");
  if (c.max_total < 0 || c.window < 0) throw std::invalid_argument("max-degree and window must be nonnegative");
  Specialization s{w, c.u_shift};
  std::vector<VmuBlock> blocks = SpecializeCharacter(s, c.max_total, c.window, WorkersFromEnv());
  json j = CharacterJson(s, c.max_total, c.window, blocks);
  j["command"] = "specialize";
  bool pass = j["closure"]["status"] == "pass";
  if (!block.empty()) {
    VmuBlock b = BuildVmuBlock(s, block, c.window);
    json bj;
    bj["degree"] = b.degree;
    json basis = json::array();
    for (const auto& p : b.basis) basis.push_back(PatternJson(p));
    bj["basis"] = basis;
    json entries = json::array();
    for (const auto& e : b.entries) {
      entries.push_back({{"op", e.kind == OpKind::kE ? "e" : "f"},
                         {"node", e.node},
                         {"mode", e.mode},
                         {"source", e.source},
                         {"target", PatternJson(e.target)},
                         {"value", e.value.ToString()}});
    }
    bj["entries"] = entries;
    bj["closure"] = ToJson(b.closure);
    j["block"] = bj;
    pass = pass && b.closure.pass();
  }
  Emit(j, c.output, out);
  std::ostream& summary = SummaryStream(c, out, err);
  for (const auto& b : blocks) {
    summary << "degree [";
    for (size_t k = 0; k < b.degree.size(); ++k) summary << (k ? "," : "") << b.degree[k];
    summary << "]: " << b.basis.size() << " of " << b.all_patterns << " patterns in D(mu), closure "
            << (b.closure.pass() ? "pass" : "FAIL") << "\n";
  }
  summary << "specialize: closure " << (pass ? "holds" : "FAILED") << "\n";
  return pass ? 0 : kFailed;
}

int CmdMatrix(bool finite, bool affine, const std::string& op, int node, int mode, const std::vector<int>& degree,
              const RunConfig& c, std::ostream& out) {
  if (finite == affine) throw std::invalid_argument("choose exactly one of --finite and --affine");
  json j;
  if (finite) {
    if (c.n < 2) throw std::invalid_argument("finite commands need n >= 2");
    j = FiniteMatrix(ModeSpec{ParseModeKind(op), node, mode}, c.n, degree);
  } else {
    if (c.n < 3) throw std::invalid_argument("affine commands need n >= 3");
    j = AffineMatrix(AffineModeSpec{ParseAffineModeKind(op), node, mode}, c.n, degree);
  }
  j["command"] = "op matrix";
  j["op"] = op;
  Emit(j, c.output, out);
  return 0;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum loop and toroidal actions on Laumon fixed-point bases", "laumon"};
  app.require_subcommand(1);
  RunConfig c;
  std::string config_path;
  ConfigBinder binder;

  auto common = [&](CLI::App* sub) {
    binder.Owner(sub);
    BindValue(&binder, sub->add_option("-n", c.n, "rank"), "n", &c.n);
    BindValue(&binder, sub->add_option("-o,--output", c.output, "JSON report path, - for stdout"), "output",
              &c.output);
    sub->add_option("--config", config_path, "JSON RunConfig; command-line flags override it");
  };

  CLI::App* verify = app.add_subcommand("verify", "run relation suites and cross-checks");
  common(verify);
  BindValue(&binder, verify->add_option("--suite", c.suite, "loop|toroidal|gl|psi|oracle|controls|all"), "suite",
            &c.suite);
  BindValue(&binder, verify->add_option("-D,--max-total", c.max_total, "degree bound"), "max_total", &c.max_total);
  BindValue(&binder, verify->add_option("-R,--window", c.window, "mode window"), "window", &c.window);
  BindValue(&binder, verify->add_option("--strategy", c.strategy, "symbolic|random"), "strategy", &c.strategy);
  BindValue(&binder, verify->add_option("--seed", c.seed, "random seed"), "seed", &c.seed);
  BindValue(&binder, verify->add_option("--trials", c.trials, "random points"), "trials", &c.trials);

  CLI::App* patterns = app.add_subcommand("patterns", "enumerate fixed points");
  common(patterns);
  bool finite = false, affine = false;
  std::vector<int> degree;
  std::optional<int> total, max_total;
  patterns->add_flag("--finite", finite, "Gelfand-Tsetlin patterns");
  patterns->add_flag("--affine", affine, "n-tuples of partitions");
  patterns->add_option("-d,--degree", degree, "degree vector")->delimiter(',');
  patterns->add_option("--total", total, "all degree vectors of this total");
  patterns->add_option("--max-total", max_total, "all degree vectors up to this total");

  CLI::App* specialize = app.add_subcommand("specialize", "V(mu) blocks and closure checks");
  common(specialize);
  std::string what = "character";
  std::vector<int> block;
  specialize->add_option("what", what, "character")->check(CLI::IsMember({"character"}));
  BindValue(&binder, specialize->add_option("-K,--level", c.level, "level K"), "level", &c.level);
  BindValue(&binder, specialize->add_option("--mu", c.mu, "mu_{1-n},...,mu_0")->delimiter(','), "mu", &c.mu);
  int spec_max = 2;
  BindValue(&binder, specialize->add_option("--max-degree", spec_max, "degree bound"), "max_total", &spec_max);
  BindValue(&binder, specialize->add_option("-R,--window", c.window, "mode window"), "window", &c.window);
  BindValue(&binder, specialize->add_option("--u-shift", c.u_shift, "u = v^(-K-n+shift); nonzero is a control"),
            "u_shift", &c.u_shift);
  specialize->add_option("--block", block, "also dump this degree block")->delimiter(',');

  CLI::App* op = app.add_subcommand("op", "operator dumps");
  op->require_subcommand(1);
  CLI::App* matrix = op->add_subcommand("matrix", "matrix of one operator between degree blocks");
  common(matrix);
  bool m_finite = false, m_affine = false;
  std::string op_name = "f";
  int node = 1, mode = 0;
  std::vector<int> m_degree;
  matrix->add_flag("--finite", m_finite, "finite action");
  matrix->add_flag("--affine", m_affine, "toroidal action");
  matrix->add_option("--op", op_name, "e f psi+ psi- t ehat fhat psihat+ psihat- chev_k chev_e chev_f");
  matrix->add_option("--node", node, "node");
  matrix->add_option("--mode", mode, "mode");
  matrix->add_option("-d,--degree", m_degree, "source degree vector")->delimiter(',')->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  try {
    binder.Apply(config_path);
    if (verify->parsed()) return CmdVerify(c, out, err);
    if (patterns->parsed()) return CmdPatterns(finite, affine, c.n, degree, total, max_total, c, out);
    if (specialize->parsed()) {
      c.max_total = spec_max;
      return CmdSpecialize(c, block, out, err);
    }
    return CmdMatrix(m_finite, m_affine, op_name, node, mode, m_degree, c, out);
  } catch (const std::exception& e) {
    err << "laumon: " << e.what() << "\n";
    return kError;
  }
}

}  // namespace laumon
