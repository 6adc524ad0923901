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

#include "laumon/report.h"

#include <map>
#include <stdexcept>
#include <string>

namespace laumon {

nlohmann::json PatternJson(const FinitePattern& p) {
  nlohmann::json j;
  j["n"] = p.n();
  j["d"] = p.Rows();
  return j;
}

nlohmann::json PatternJson(const AffinePattern& p) {
  nlohmann::json j;
  j["n"] = p.n();
  j["lambdas"] = p.lambdas();
  return j;
}

namespace {

template <class P, class Enumerate>
nlohmann::json Listing(const char* kind, int n, const std::vector<std::vector<int>>& degrees, Enumerate en) {
  nlohmann::json j;
  j["kind"] = kind;
  j["n"] = n;
  size_t total = 0;
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& deg : degrees) {
    std::vector<P> ps = en(deg);
    nlohmann::json b;
    b["degree"] = deg;
    b["count"] = ps.size();
    nlohmann::json list = nlohmann::json::array();
    for (const auto& p : ps) list.push_back(PatternJson(p));
    b["patterns"] = list;
    blocks.push_back(b);
    total += ps.size();
  }
  j["count"] = total;
  j["blocks"] = blocks;
  return j;
}

template <class P, class V>
nlohmann::json Matrix(nlohmann::json head, const std::vector<P>& rows, const std::vector<P>& cols,
                      const std::vector<V>& images) {
  std::map<P, size_t> index;
  for (size_t c = 0; c < cols.size(); ++c) index[cols[c]] = c;
  nlohmann::json rj = nlohmann::json::array(), cj = nlohmann::json::array(), ej = nlohmann::json::array();
  for (const auto& p : rows) rj.push_back(p.ToString());
  for (const auto& p : cols) cj.push_back(p.ToString());
  for (size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [tgt, x] : images[r]) {
      if (x.IsZero()) continue;
      auto it = index.find(tgt);
      if (it == index.end()) throw std::logic_error("image outside the target block: " + tgt.ToString());
      ej.push_back({{"row", r}, {"col", it->second}, {"value", x.ToString()}});
    }
  }
  head["rows"] = rj;
  head["cols"] = cj;
  head["entries"] = ej;
  return head;
}

std::vector<int> Shifted(std::vector<int> deg, size_t slot, int delta) {
  deg.at(slot) += delta;
  return deg;
}

bool Nonnegative(const std::vector<int>& deg) {
  for (int x : deg) {
    if (x < 0) return false;
  }
  return true;
}

}  // namespace

nlohmann::json FiniteListing(int n, const std::vector<std::vector<int>>& degrees) {
  return Listing<FinitePattern>("finite", n, degrees, [n](const std::vector<int>& d) { return EnumerateFinite(n, d); });
}

nlohmann::json AffineListing(int n, const std::vector<std::vector<int>>& degrees) {
  return Listing<AffinePattern>("affine", n, degrees, [n](const std::vector<int>& d) { return EnumerateAffine(n, d); });
}

ModeKind ParseModeKind(const std::string& s) {
  static const std::map<std::string, ModeKind> kinds = {{"e", ModeKind::kE},
                                                        {"f", ModeKind::kF},
                                                        {"psi+", ModeKind::kPsiPlus},
                                                        {"psi-", ModeKind::kPsiMinus},
                                                        {"t", ModeKind::kTCartan}};
  auto it = kinds.find(s);
  if (it == kinds.end()) throw std::invalid_argument("unknown finite operator: " + s);
  return it->second;
}

AffineModeKind ParseAffineModeKind(const std::string& s) {
  static const std::map<std::string, AffineModeKind> kinds = {
      {"e", AffineModeKind::kE},
      {"f", AffineModeKind::kF},
      {"psi+", AffineModeKind::kPsiPlus},
      {"psi-", AffineModeKind::kPsiMinus},
      {"ehat", AffineModeKind::kEHat},
      {"fhat", AffineModeKind::kFHat},
      {"psihat+", AffineModeKind::kPsiHatPlus},
      {"psihat-", AffineModeKind::kPsiHatMinus},
      {"chev_k", AffineModeKind::kChevalleyK},
      {"chev_e", AffineModeKind::kChevalleyE},
      {"chev_f", AffineModeKind::kChevalleyF}};
  auto it = kinds.find(s);
  if (it == kinds.end()) throw std::invalid_argument("unknown affine operator: " + s);
  return it->second;
}

nlohmann::json FiniteMatrix(const ModeSpec& op, int n, const std::vector<int>& degree) {
  if (static_cast<int>(degree.size()) != n - 1) throw std::invalid_argument("finite degree needs n - 1 entries");
  if (op.node < 1 || op.node > (op.kind == ModeKind::kTCartan ? n : n - 1)) {
    throw std::invalid_argument("node out of range");
  }
  std::vector<int> target = degree;
  if (op.kind == ModeKind::kE) target = Shifted(degree, op.node - 1, -1);
  if (op.kind == ModeKind::kF) target = Shifted(degree, op.node - 1, 1);
  std::vector<FinitePattern> rows = EnumerateFinite(n, degree);
  std::vector<FinitePattern> cols;
  if (Nonnegative(target)) cols = EnumerateFinite(n, target);
  std::vector<GradedVector> images;
  for (const auto& p : rows) images.push_back(Apply(op, GradedVector{{p, LaurentExpr(1)}}));
  nlohmann::json head;
  head["kind"] = "finite";
  head["n"] = n;
  head["node"] = op.node;
  head["mode"] = op.mode;
  head["source_degree"] = degree;
  head["target_degree"] = target;
  return Matrix(head, rows, cols, images);
}

nlohmann::json AffineMatrix(const AffineModeSpec& op, int n, const std::vector<int>& degree) {
  if (static_cast<int>(degree.size()) != n) throw std::invalid_argument("affine degree needs n entries");
  bool chevalley = op.kind == AffineModeKind::kChevalleyK || op.kind == AffineModeKind::kChevalleyE ||
                   op.kind == AffineModeKind::kChevalleyF;
  int lo = chevalley ? 0 : 1, hi = chevalley ? n - 1 : n;
  if (op.node < lo || op.node > hi) throw std::invalid_argument("node out of range");
  size_t slot = static_cast<size_t>(ModRep(op.node, n) % n);
  std::vector<int> target = degree;
  switch (op.kind) {
    case AffineModeKind::kE:
    case AffineModeKind::kEHat:
    case AffineModeKind::kChevalleyE:
      target = Shifted(degree, slot, -1);
      break;
    case AffineModeKind::kF:
    case AffineModeKind::kFHat:
    case AffineModeKind::kChevalleyF:
      target = Shifted(degree, slot, 1);
      break;
    default:
      break;
  }
  std::vector<AffinePattern> rows = EnumerateAffine(n, degree);
  std::vector<AffinePattern> cols;
  if (Nonnegative(target)) cols = EnumerateAffine(n, target);
  std::vector<AffineGradedVector> images;
  for (const auto& p : rows) images.push_back(ApplyAffine(op, AffineGradedVector{{p, LaurentExpr(1)}}));
  bool hat = op.kind == AffineModeKind::kEHat || op.kind == AffineModeKind::kFHat ||
             op.kind == AffineModeKind::kPsiHatPlus || op.kind == AffineModeKind::kPsiHatMinus;
  nlohmann::json head;
  head["kind"] = "affine";
  head["n"] = n;
  head["node"] = op.node;
  head["node_residue"] = static_cast<int>(slot);
  head["u_exponent"] = hat ? 2 : 0;
  head["mode"] = op.mode;
  head["source_degree"] = degree;
  head["target_degree"] = target;
  return Matrix(head, rows, cols, images);
}

}  // namespace laumon
