//
// Copyright (c) 2026 The restricted-trace Contributors.
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
//

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "restricted_trace/scalar.hpp"

namespace restricted_trace {

/// Integer interval whose endpoints may be infinite (std::nullopt).
struct IndexRange {
  std::optional<Index> lo;
  std::optional<Index> hi;

  static IndexRange all() { return {}; }
  static IndexRange at_least(Index lo) { return {lo, std::nullopt}; }
  static IndexRange between(Index lo, Index hi) { return {lo, hi}; }

  bool contains(Index n) const { return (!lo || n >= *lo) && (!hi || n <= *hi); }
  bool is_empty() const { return lo && hi && *lo > *hi; }

  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// delta(a*n + b*m + c)
struct LinearDelta {
  Index a = 0;
  Index b = 0;
  Index c = 0;

  bool holds(Index n, Index m) const { return a * n + b * m + c == 0; }

  friend bool operator==(const LinearDelta&, const LinearDelta&) = default;
};

/// coeff * sum_{n in n_range} sum_{m in m_range} delta(a*n + b*m + c)
class DeltaTerm {
 public:
  DeltaTerm(GaussianRational coeff, IndexRange n_range, IndexRange m_range, LinearDelta delta);

  const GaussianRational& coeff() const { return coeff_; }
  const IndexRange& n_range() const { return n_range_; }
  const IndexRange& m_range() const { return m_range_; }
  const LinearDelta& delta() const { return delta_; }

  friend bool operator==(const DeltaTerm&, const DeltaTerm&) = default;

 private:
  GaussianRational coeff_;
  IndexRange n_range_;
  IndexRange m_range_;
  LinearDelta delta_;
};

struct DeltaSumExpr {
  std::vector<DeltaTerm> terms;

  friend bool operator==(const DeltaSumExpr&, const DeltaSumExpr&) = default;
};

DeltaSumExpr concat(const DeltaSumExpr& a, const DeltaSumExpr& b);

/// Which index of the double sum is truncated at the cutoff L.
enum class CutoffScheme {
  CutoffOnN,        ///< n in [-L, L], m summed exactly
  CutoffOnM,        ///< m in [-L, L], n summed exactly
  SquareSymmetric,  ///< both n and m in [-L, L]
};

std::string to_string(CutoffScheme scheme);
std::optional<CutoffScheme> scheme_from_string(const std::string& name);

/// Exact value of a cutoff-dependent sum: slope * L + value for L >= stabilizes_at.
struct AffineLimit {
  GaussianRational slope;
  GaussianRational value;
  Index stabilizes_at = 0;

  GaussianRational at(Index cutoff) const { return slope * GaussianRational(cutoff) + value; }

  friend bool operator==(const AffineLimit&, const AffineLimit&) = default;
};

AffineLimit operator+(const AffineLimit& a, const AffineLimit& b);

/// The exactly summed index has zero weight in some delta, so the inner
/// sum runs over infinitely many solutions.
class UnboundedInnerSum : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The lattice count is only quasi-affine in L (it oscillates with a period
/// greater than one), so it has no single affine form.
class NonAffineCount : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Number of lattice solutions of one term inside the cutoff region at L.
Index count_solutions(const DeltaTerm& term, CutoffScheme scheme, Index cutoff);

/// Exact value of the expression at a fixed cutoff.
GaussianRational evaluate_at(const DeltaSumExpr& expr, CutoffScheme scheme, Index cutoff);

AffineLimit evaluate(const DeltaTerm& term, CutoffScheme scheme);
AffineLimit evaluate(const DeltaSumExpr& expr, CutoffScheme scheme);

/// Relabels n <-> m in every term.
DeltaSumExpr index_swap(const DeltaSumExpr& expr);

/// F2 for A1 = cos(jt), A2 = sin(jt), after the delta products are reduced:
///   -1/(4i) [ sum_{n>=0, m>=1} delta(m-j+n) + sum_{n>=1, m>=0} delta(m-j+n) ]
DeltaSumExpr f2_expr(Index j);
/// trace(a1 a2) = 1/(4i) sum_{n,m>=0} [delta(n-j-m) - delta(n+j-m)]
DeltaSumExpr a1a2_expr(Index j);
/// trace(A1 J A2) = 1/(2i) sum_{n in Z} sum_{m>=0} [delta(m+j-n) - delta(n+j-m)]
DeltaSumExpr a1ja2_expr(Index j);

std::optional<DeltaSumExpr> named_expr(const std::string& name, Index j);

}  // namespace restricted_trace
