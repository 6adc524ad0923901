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

#ifndef LAUMON_PATTERNS_H_
#define LAUMON_PATTERNS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "laumon/exponents.h"

namespace laumon {

// Floor and ceiling division for a positive divisor.
int64_t FloorDiv(int64_t a, int64_t n);
int64_t CeilDiv(int64_t a, int64_t n);
// Representative of j modulo n in {1, ..., n}.
int ModRep(int64_t j, int n);

// Triangular array d_ij, 1 <= j <= i <= n-1, with every column
// nonincreasing downwards and nonnegative.
class FinitePattern {
 public:
  explicit FinitePattern(int n);
  // rows[i-1] holds d_i1..d_ii. Throws std::invalid_argument if invalid.
  static FinitePattern FromRows(int n, const std::vector<std::vector<int>>& rows);

  int n() const { return n_; }
  // d_ij for 1 <= j <= i <= n; row n is identically zero.
  int d(int i, int j) const;
  // d_i for 0 <= i <= n; d_0 = d_n = 0.
  int Degree(int i) const;
  std::vector<int> DegreeVector() const;
  int Total() const;
  std::vector<std::vector<int>> Rows() const;
  const std::vector<int>& flat() const { return flat_; }

  bool IsValid() const;
  // Copy with d_ij shifted by delta; no validation.
  FinitePattern With(int i, int j, int delta) const;

  std::string ToString() const;
  bool operator==(const FinitePattern& b) const { return n_ == b.n_ && flat_ == b.flat_; }
  bool operator<(const FinitePattern& b) const;

 private:
  static int Index(int i, int j) { return (i - 1) * i / 2 + (j - 1); }
  int n_;
  std::vector<int> flat_;
};

std::vector<FinitePattern> EnumerateFinite(int n, const std::vector<int>& deg);
// All degree vectors with total <= max_total, by total then degree vector.
std::vector<FinitePattern> EnumerateFiniteUpTo(int n, int max_total);
std::vector<std::vector<int>> DegreeVectorsUpTo(int count, int max_total);

struct FiniteMove {
  int j;
  FinitePattern target;
};
std::vector<FiniteMove> Neighbors(const FinitePattern& p, int i, int dir);

// t_j^2 v^{-2 d_ij}; 1 <= j <= i <= n.
Exponents SWeight(const FinitePattern& p, int i, int j);

using Partition = std::vector<int>;

// n-tuple of partitions; d(i, j) = lambda^{(j mod n)}_{i-j}.
class AffinePattern {
 public:
  explicit AffinePattern(int n);
  static AffinePattern FromLambdas(int n, const std::vector<Partition>& lambdas);

  int n() const { return static_cast<int>(lambdas_.size()); }
  const std::vector<Partition>& lambdas() const { return lambdas_; }
  const Partition& lambda(int l) const { return lambdas_[l - 1]; }

  // d_ij for any integers; zero when i < j or beyond the partition.
  int d(int64_t i, int64_t j) const;
  // d_k = sum_{m >= 0} lambda^{((k-m) mod n)}_m, periodic in k.
  int Degree(int64_t k) const;
  std::vector<int> DegreeVector() const;  // (d_0, ..., d_{n-1})
  int Total() const;
  int MaxLength() const;

  // Copy with lambda^l_m shifted by delta (m may equal the length).
  AffinePattern WithBox(int l, int m, int delta) const;

  std::string ToString() const;
  bool operator==(const AffinePattern& b) const { return lambdas_ == b.lambdas_; }
  bool operator<(const AffinePattern& b) const { return lambdas_ < b.lambdas_; }

 private:
  std::vector<Partition> lambdas_;
};

bool IsPartition(const Partition& p);
std::vector<Partition> PartitionsOf(int m);

// All n-tuples of partitions of total size m, sorted.
std::vector<AffinePattern> EnumerateAffineTotal(int n, int m);
std::vector<AffinePattern> EnumerateAffine(int n, const std::vector<int>& deg);
std::vector<AffinePattern> EnumerateAffineUpTo(int n, int max_total);

struct AffineMove {
  int64_t j;  // column
  int l;      // partition index
  int m;      // part index, j = i - m
  AffinePattern target;
};
std::vector<AffineMove> NeighborsAffine(const AffinePattern& p, int64_t i, int dir);

// t_{(j mod n)}^2 v^{-2 d_ij} u^{2 ceil(j/n)}.
Exponents PWeight(const AffinePattern& p, int64_t i, int64_t j);

// grid[k-1][l-1] = lambda^{kl}.
using LambdaGrid = std::vector<std::vector<Partition>>;
LambdaGrid ToLambdaGrid(const AffinePattern& p);
// Throws std::invalid_argument if the chain inequalities fail.
AffinePattern FromLambdaGrid(const LambdaGrid& g);

}  // namespace laumon

#endif  // LAUMON_PATTERNS_H_
