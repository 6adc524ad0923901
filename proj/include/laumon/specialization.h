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

#ifndef LAUMON_SPECIALIZATION_H_
#define LAUMON_SPECIALIZATION_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "laumon/action.h"
#include "laumon/patterns.h"
#include "laumon/tangent_oracle.h"

namespace laumon {

// Dominant weight of level K: mu = (mu_{1-n}, ..., mu_0) with
// mu_0 + K >= mu_{1-n} >= ... >= mu_{-1} >= mu_0.
struct LevelWeight {
  int n = 0;
  int level = 0;
  std::vector<int> mu;

  std::string ToString() const;
};

// Throws std::invalid_argument for a non-dominant weight or K < 1.
void ValidateLevelWeight(const LevelWeight& w);

// mu~_i = mu_{i mod n} + floor(-i/n) K, with i mod n taken in {1-n, ..., 0}.
class ExtendedWeight {
 public:
  explicit ExtendedWeight(const LevelWeight& w);
  int64_t operator()(int64_t i) const;

 private:
  LevelWeight w_;
};

ExtendedWeight ExtendWeight(const LevelWeight& w);

// d_ij - mu~_j <= d_{i+l,j+l} - mu~_{j+l} for all j <= i, l >= 0.
// The reduced check looks at cells with d_ij > 0 in one period of columns
// and l in 1..n-1: zero cells hold because mu~ is nonincreasing, and
// l -> l - n only loosens the inequality by K.
bool InDMu(const AffinePattern& p, const LevelWeight& w);
// Every j in one period, every i from j to the pattern reach plus bound,
// every l in 0..bound.
bool InDMuBruteForce(const AffinePattern& p, const LevelWeight& w, int64_t bound);

// Laurent polynomial in v over Q.
class VPolynomial {
 public:
  VPolynomial() = default;
  explicit VPolynomial(const Rational& c) : VPolynomial(c, 0) {}
  VPolynomial(const Rational& c, int64_t k);  // c v^k

  bool IsZero() const { return coeffs_.empty(); }
  int64_t low() const { return low_; }
  int64_t high() const { return low_ + static_cast<int64_t>(coeffs_.size()) - 1; }
  Rational Coeff(int64_t k) const;
  const Rational& Leading() const { return coeffs_.back(); }

  VPolynomial operator+(const VPolynomial& b) const;
  VPolynomial operator-(const VPolynomial& b) const;
  VPolynomial operator*(const VPolynomial& b) const;
  VPolynomial Shift(int64_t k) const;
  VPolynomial Scaled(const Rational& c) const;
  Rational Evaluate(const Rational& v) const;
  std::string ToString() const;
  bool operator==(const VPolynomial& b) const { return low_ == b.low_ && coeffs_ == b.coeffs_; }

  // Polynomial division for low() >= 0; throws on a zero divisor.
  static void DivMod(const VPolynomial& a, const VPolynomial& b, VPolynomial* q, VPolynomial* r);
  // Monic gcd of two polynomials with low() >= 0.
  static VPolynomial Gcd(VPolynomial a, VPolynomial b);

 private:
  void Trim();

  int64_t low_ = 0;
  std::vector<Rational> coeffs_;  // coeffs_[k] multiplies v^{low_ + k}
};

// Reduced quotient num / den: den is a monic polynomial with nonzero
// constant term and coprime to num.
class SpecializedExpr {
 public:
  SpecializedExpr() : den_(Rational(1)) {}
  SpecializedExpr(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  // Throws std::domain_error for a zero denominator.
  static SpecializedExpr FromParts(VPolynomial num, VPolynomial den);

  const VPolynomial& num() const { return num_; }
  const VPolynomial& den() const { return den_; }
  bool IsZero() const { return num_.IsZero(); }

  SpecializedExpr operator+(const SpecializedExpr& b) const;
  SpecializedExpr operator-(const SpecializedExpr& b) const;
  SpecializedExpr operator*(const SpecializedExpr& b) const;
  SpecializedExpr operator/(const SpecializedExpr& b) const;
  Rational Evaluate(const Rational& v) const;
  std::string ToString() const;
  bool operator==(const SpecializedExpr& b) const { return num_ == b.num_ && den_ == b.den_; }

 private:
  VPolynomial num_;
  VPolynomial den_;
};

// A denominator factor became identically zero.
class SpecializationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// u = v^{-K-n+u_shift}, t_j = v^{mu~_j - j + 1}. u_shift is zero except
// in negative controls.
struct Specialization {
  LevelWeight weight;
  int u_shift = 0;

  int64_t UExponent() const { return -weight.level - weight.n + u_shift; }
  int64_t TExponent(int j) const;
  // v-exponent of x^e; throws std::invalid_argument if e involves z.
  int64_t VExponent(const Exponents& e) const;
};

SpecializedExpr Specialize(const LaurentExpr& x, const Specialization& s);

struct ProductZeros {
  int num = 0;
  int den = 0;
};
// Counts factors (1 - x^a) that vanish, before any cancellation.
ProductZeros CountZeros(const ProductForm& f, const Specialization& s);
// Throws SpecializationError if a denominator factor vanishes.
SpecializedExpr SpecializeProduct(const ProductForm& f, const Specialization& s);

// Renormalized e_{i,r} / f_{i,r} coefficient from src along the move to
// column j, specialized. Throws SpecializationError on a vanishing denominator.
SpecializedExpr RenormCoeff(OpKind kind, const AffinePattern& src, int64_t i, int64_t j, int r,
                            const Specialization& s);

struct BlockEntry {
  OpKind kind;
  int node;
  int mode;
  int source;  // index into the block basis
  AffinePattern target;
  SpecializedExpr value;
};

struct ClosureReport {
  int64_t internal = 0;  // transitions staying in D(mu)
  int64_t crossing = 0;  // transitions leaving D(mu)
  int64_t denominator_violations = 0;
  int64_t numerator_violations = 0;
  std::string first_violation;

  bool pass() const { return denominator_violations == 0 && numerator_violations == 0; }
  void Merge(const ClosureReport& b);
};

struct VmuBlock {
  std::vector<int> degree;             // (d_0, ..., d_{n-1})
  int64_t all_patterns = 0;
  std::vector<AffinePattern> basis;    // D(mu) members
  std::vector<BlockEntry> entries;     // nonzero entries, modes in [-window, window]
  ClosureReport closure;
};

// Requires n >= 3.
VmuBlock BuildVmuBlock(const Specialization& s, const std::vector<int>& degree, int window);
// One block per degree vector with total <= max_total, in
// DegreeVectorsUpTo order, built in parallel; entries are dropped.
std::vector<VmuBlock> SpecializeCharacter(const Specialization& s, int max_total, int window, int workers);

nlohmann::json ToJson(const ClosureReport& c);
nlohmann::json CharacterJson(const Specialization& s, int max_total, int window,
                             const std::vector<VmuBlock>& blocks);

}  // namespace laumon

#endif  // LAUMON_SPECIALIZATION_H_
