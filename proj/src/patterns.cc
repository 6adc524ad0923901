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

#include "laumon/patterns.h"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace laumon {

int64_t FloorDiv(int64_t a, int64_t n) {
  int64_t q = a / n;
  if ((a % n != 0) && (a < 0)) --q;
  return q;
}

int64_t CeilDiv(int64_t a, int64_t n) { return -FloorDiv(-a, n); }

int ModRep(int64_t j, int n) { return static_cast<int>(j - n * FloorDiv(j - 1, n)); }

// ---- FinitePattern ----

FinitePattern::FinitePattern(int n) : n_(n), flat_((n - 1) * n / 2, 0) {
  if (n < 2 || n > kMaxT) throw std::invalid_argument("n must be in 2..8");
}

FinitePattern FinitePattern::FromRows(int n, const std::vector<std::vector<int>>& rows) {
  FinitePattern p(n);
  if (static_cast<int>(rows.size()) != n - 1) throw std::invalid_argument("need n-1 rows");
  for (int i = 1; i < n; ++i) {
    if (static_cast<int>(rows[i - 1].size()) != i) {
      throw std::invalid_argument("row i must have i entries");
    }
    for (int j = 1; j <= i; ++j) p.flat_[Index(i, j)] = rows[i - 1][j - 1];
  }
  if (!p.IsValid()) throw std::invalid_argument("pattern violates column monotonicity");
  return p;
}

int FinitePattern::d(int i, int j) const {
  if (j < 1 || j > i || i > n_) throw std::out_of_range("pattern index out of range");
  if (i == n_) return 0;
  return flat_[Index(i, j)];
}

int FinitePattern::Degree(int i) const {
  if (i < 0 || i > n_) throw std::out_of_range("degree index out of range");
  if (i == 0 || i == n_) return 0;
  int s = 0;
  for (int j = 1; j <= i; ++j) s += flat_[Index(i, j)];
  return s;
}

std::vector<int> FinitePattern::DegreeVector() const {
  std::vector<int> v;
  for (int i = 1; i < n_; ++i) v.push_back(Degree(i));
  return v;
}

int FinitePattern::Total() const { return std::accumulate(flat_.begin(), flat_.end(), 0); }

std::vector<std::vector<int>> FinitePattern::Rows() const {
  std::vector<std::vector<int>> rows;
  for (int i = 1; i < n_; ++i) {
    rows.emplace_back();
    for (int j = 1; j <= i; ++j) rows.back().push_back(flat_[Index(i, j)]);
  }
  return rows;
}

bool FinitePattern::IsValid() const {
  for (int i = 1; i < n_; ++i) {
    for (int j = 1; j <= i; ++j) {
      int x = flat_[Index(i, j)];
      if (x < 0) return false;
      if (j <= i - 1 && x > flat_[Index(i - 1, j)]) return false;
    }
  }
  return true;
}

FinitePattern FinitePattern::With(int i, int j, int delta) const {
  FinitePattern p = *this;
  p.flat_[Index(i, j)] += delta;
  return p;
}

std::string FinitePattern::ToString() const {
  std::string s = "[";
  for (int i = 1; i < n_; ++i) {
    if (i > 1) s += ",";
    s += "[";
    for (int j = 1; j <= i; ++j) {
      if (j > 1) s += ",";
      s += std::to_string(flat_[Index(i, j)]);
    }
    s += "]";
  }
  return s + "]";
}

bool FinitePattern::operator<(const FinitePattern& b) const {
  if (n_ != b.n_) return n_ < b.n_;
  return flat_ < b.flat_;
}

std::vector<FinitePattern> EnumerateFinite(int n, const std::vector<int>& deg) {
  if (static_cast<int>(deg.size()) != n - 1) throw std::invalid_argument("degree vector size");
  for (int x : deg) {
    if (x < 0) return {};
  }
  std::vector<FinitePattern> out;
  FinitePattern p(n);
  // Fill entries in flattened order, smallest value first, so the output is
  // lexicographic in the flattened array.
  std::function<void(int, int, int)> rec = [&](int i, int j, int remaining) {
    if (i == n) {
      out.push_back(p);
      return;
    }
    if (j == i) {
      // Last entry of the row takes what is left; it is unconstrained above.
      p = p.With(i, j, remaining - p.d(i, j));
      rec(i + 1, 1, i + 1 < n ? deg[i] : 0);
      p = p.With(i, j, -p.d(i, j));
      return;
    }
    int cap = std::min(remaining, p.d(i - 1, j));
    for (int x = 0; x <= cap; ++x) {
      p = p.With(i, j, x - p.d(i, j));
      rec(i, j + 1, remaining - x);
    }
    p = p.With(i, j, -p.d(i, j));
  };
  rec(1, 1, deg[0]);
  return out;
}

std::vector<std::vector<int>> DegreeVectorsUpTo(int count, int max_total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(count, 0);
  for (int total = 0; total <= max_total; ++total) {
    std::function<void(int, int)> rec = [&](int k, int left) {
      if (k == count - 1) {
        cur[k] = left;
        out.push_back(cur);
        return;
      }
      for (int x = left; x >= 0; --x) {
        cur[k] = x;
        rec(k + 1, left - x);
      }
    };
    if (count == 0) {
      if (total == 0) out.push_back({});
      continue;
    }
    rec(0, total);
  }
  return out;
}

std::vector<FinitePattern> EnumerateFiniteUpTo(int n, int max_total) {
  std::vector<FinitePattern> out;
  for (const auto& deg : DegreeVectorsUpTo(n - 1, max_total)) {
    for (auto& p : EnumerateFinite(n, deg)) out.push_back(std::move(p));
  }
  return out;
}

std::vector<FiniteMove> Neighbors(const FinitePattern& p, int i, int dir) {
  if (i < 1 || i > p.n() - 1) throw std::out_of_range("node out of range");
  if (dir != 1 && dir != -1) throw std::invalid_argument("direction must be +-1");
  std::vector<FiniteMove> out;
  for (int j = 1; j <= i; ++j) {
    int x = p.d(i, j) + dir;
    if (x < 0) continue;
    if (j <= i - 1 && x > p.d(i - 1, j)) continue;
    if (i + 1 <= p.n() - 1 && x < p.d(i + 1, j)) continue;
    out.push_back({j, p.With(i, j, dir)});
  }
  return out;
}

Exponents SWeight(const FinitePattern& p, int i, int j) {
  Exponents e = ZeroExponents();
  e[TVar(j)] = 2;
  e[kV] = -2 * p.d(i, j);
  return e;
}

// ---- AffinePattern ----

bool IsPartition(const Partition& p) {
  for (size_t k = 0; k < p.size(); ++k) {
    if (p[k] <= 0) return false;
    if (k > 0 && p[k] > p[k - 1]) return false;
  }
  return true;
}

AffinePattern::AffinePattern(int n) : lambdas_(n) {
  if (n < 2 || n > kMaxT) throw std::invalid_argument("n must be in 2..8");
}

AffinePattern AffinePattern::FromLambdas(int n, const std::vector<Partition>& lambdas) {
  AffinePattern p(n);
  if (static_cast<int>(lambdas.size()) != n) throw std::invalid_argument("need n partitions");
  for (const Partition& l : lambdas) {
    if (!IsPartition(l)) throw std::invalid_argument("not a partition");
  }
  p.lambdas_ = lambdas;
  return p;
}

int AffinePattern::d(int64_t i, int64_t j) const {
  if (i < j) return 0;
  const Partition& lam = lambdas_[ModRep(j, n()) - 1];
  int64_t m = i - j;
  return m < static_cast<int64_t>(lam.size()) ? lam[m] : 0;
}

int AffinePattern::Degree(int64_t k) const {
  int s = 0;
  for (int m = 0; m < MaxLength(); ++m) {
    const Partition& lam = lambdas_[ModRep(k - m, n()) - 1];
    if (m < static_cast<int>(lam.size())) s += lam[m];
  }
  return s;
}

std::vector<int> AffinePattern::DegreeVector() const {
  std::vector<int> v;
  for (int k = 0; k < n(); ++k) v.push_back(Degree(k));
  return v;
}

int AffinePattern::Total() const {
  int s = 0;
  for (const Partition& l : lambdas_) s += std::accumulate(l.begin(), l.end(), 0);
  return s;
}

int AffinePattern::MaxLength() const {
  size_t m = 0;
  for (const Partition& l : lambdas_) m = std::max(m, l.size());
  return static_cast<int>(m);
}

AffinePattern AffinePattern::WithBox(int l, int m, int delta) const {
  AffinePattern p = *this;
  Partition& lam = p.lambdas_[l - 1];
  if (m == static_cast<int>(lam.size())) lam.push_back(0);
  lam[m] += delta;
  while (!lam.empty() && lam.back() == 0) lam.pop_back();
  return p;
}

std::string AffinePattern::ToString() const {
  std::string s = "[";
  for (int l = 0; l < n(); ++l) {
    if (l > 0) s += ",";
    s += "[";
    for (size_t k = 0; k < lambdas_[l].size(); ++k) {
      if (k > 0) s += ",";
      s += std::to_string(lambdas_[l][k]);
    }
    s += "]";
  }
  return s + "]";
}

std::vector<Partition> PartitionsOf(int m) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(left, cap); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

std::vector<AffinePattern> EnumerateAffineTotal(int n, int m) {
  std::vector<AffinePattern> out;
  std::vector<Partition> cur(n);
  std::function<void(int, int)> rec = [&](int l, int left) {
    if (l == n - 1) {
      for (const Partition& p : PartitionsOf(left)) {
        cur[l] = p;
        out.push_back(AffinePattern::FromLambdas(n, cur));
      }
      return;
    }
    for (int k = 0; k <= left; ++k) {
      for (const Partition& p : PartitionsOf(k)) {
        cur[l] = p;
        rec(l + 1, left - k);
      }
    }
  };
  rec(0, m);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AffinePattern> EnumerateAffine(int n, const std::vector<int>& deg) {
  if (static_cast<int>(deg.size()) != n) throw std::invalid_argument("degree vector size");
  int total = 0;
  for (int x : deg) {
    if (x < 0) return {};
    total += x;
  }
  std::vector<AffinePattern> out;
  for (auto& p : EnumerateAffineTotal(n, total)) {
    if (p.DegreeVector() == deg) out.push_back(std::move(p));
  }
  return out;
}

std::vector<AffinePattern> EnumerateAffineUpTo(int n, int max_total) {
  std::vector<AffinePattern> out;
  for (int m = 0; m <= max_total; ++m) {
    for (auto& p : EnumerateAffineTotal(n, m)) out.push_back(std::move(p));
  }
  return out;
}

std::vector<AffineMove> NeighborsAffine(const AffinePattern& p, int64_t i, int dir) {
  if (dir != 1 && dir != -1) throw std::invalid_argument("direction must be +-1");
  int n = p.n();
  std::vector<AffineMove> out;
  for (int l = 1; l <= n; ++l) {
    const Partition& lam = p.lambda(l);
    int len = static_cast<int>(lam.size());
    auto part = [&](int m) { return m < len ? lam[m] : 0; };
    for (int m = static_cast<int>(((i - l) % n + n) % n); m <= len; m += n) {
      bool ok = dir > 0 ? (m == 0 || part(m - 1) > part(m))
                        : (m < len && part(m) - 1 >= part(m + 1));
      if (ok) out.push_back({i - m, l, m, p.WithBox(l, m, dir)});
    }
  }
  std::sort(out.begin(), out.end(), [](const AffineMove& a, const AffineMove& b) {
    return a.j > b.j;
  });
  return out;
}

Exponents PWeight(const AffinePattern& p, int64_t i, int64_t j) {
  Exponents e = ZeroExponents();
  e[TVar(ModRep(j, p.n()))] = 2;
  e[kV] = -2 * p.d(i, j);
  e[kU] = static_cast<int32_t>(2 * CeilDiv(j, p.n()));
  return e;
}

// ---- Lambda grid ----

namespace {

int GridRow(int l, int r, int n) { return (l - 1 + r) % n + 1; }

}  // namespace

LambdaGrid ToLambdaGrid(const AffinePattern& p) {
  int n = p.n();
  LambdaGrid g(n, std::vector<Partition>(n));
  for (int l = 1; l <= n; ++l) {
    const Partition& lam = p.lambda(l);
    for (int m = 0; m < static_cast<int>(lam.size()); ++m) {
      g[GridRow(l, m % n, n) - 1][l - 1].push_back(lam[m]);
    }
  }
  return g;
}

AffinePattern FromLambdaGrid(const LambdaGrid& g) {
  int n = static_cast<int>(g.size());
  for (const auto& row : g) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("grid must be n x n");
    for (const Partition& p : row) {
      if (!IsPartition(p)) throw std::invalid_argument("grid entry is not a partition");
    }
  }
  std::vector<Partition> lambdas(n);
  for (int l = 1; l <= n; ++l) {
    size_t len = 0;
    for (int r = 0; r < n; ++r) len = std::max(len, g[GridRow(l, r, n) - 1][l - 1].size());
    auto at = [&](int r, size_t i) {
      const Partition& p = g[GridRow(l, r, n) - 1][l - 1];
      return i < p.size() ? p[i] : 0;
    };
    for (size_t i = 0; i <= len; ++i) {
      for (int r = 0; r < n; ++r) {
        int next = r + 1 < n ? at(r + 1, i) : at(0, i + 1);
        if (at(r, i) < next) throw std::invalid_argument("grid violates the chain inequalities");
        if (at(r, i) > 0) lambdas[l - 1].push_back(at(r, i));
      }
    }
  }
  return AffinePattern::FromLambdas(n, lambdas);
}

}  // namespace laumon
