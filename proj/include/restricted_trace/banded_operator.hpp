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

#include <map>
#include <optional>
#include <vector>

#include "restricted_trace/scalar.hpp"
#include "restricted_trace/sequence.hpp"
#include "restricted_trace/trig_poly.hpp"

namespace restricted_trace {

enum class Side { Plus, Minus };

/// Infinite matrix over the Fourier index lattice with finitely many nonzero
/// diagonals, each diagonal eventually constant in both directions.
///
/// Storage is by diagonal: diagonal(d) holds s_d with A(n, n + d) = s_d(n).
/// Zero diagonals are never stored.
class BandedOperator {
 public:
  using Diagonals = std::map<Index, EventuallyConstantSeq>;

  BandedOperator() = default;
  explicit BandedOperator(const Diagonals& diagonals);

  static BandedOperator zero() { return {}; }
  static BandedOperator identity();

  const Diagonals& diagonals() const { return diagonals_; }
  /// s_d; the zero sequence when offset d is not stored.
  EventuallyConstantSeq diagonal(Index offset) const;

  /// Matrix element A(n, m).
  GaussianRational entry(Index row, Index col) const;
  Index bandwidth() const;
  /// Largest |n| at which any diagonal has an exceptional value.
  Index exception_radius() const;
  bool is_zero() const { return diagonals_.empty(); }

  /// The symbol u when this is the multiplication operator mult_op(u).
  std::optional<TrigPoly> as_multiplication() const;

  friend bool operator==(const BandedOperator& a, const BandedOperator& b) {
    return a.diagonals_ == b.diagonals_;
  }
  friend bool operator!=(const BandedOperator& a, const BandedOperator& b) { return !(a == b); }

  friend BandedOperator operator+(const BandedOperator& a, const BandedOperator& b);
  friend BandedOperator operator-(const BandedOperator& a, const BandedOperator& b);
  friend BandedOperator operator*(const GaussianRational& c, const BandedOperator& a);
  /// Operator product AB.
  friend BandedOperator operator*(const BandedOperator& a, const BandedOperator& b);

 private:
  void accumulate(Index offset, const EventuallyConstantSeq& s);

  Diagonals diagonals_;
};

/// Multiplication by u in the basis f_n = e^{-int}/sqrt(2 pi): A(n, m) = u_{m-n}.
BandedOperator mult_op(const TrigPoly& u);
/// Hardy projection onto n >= 0 (Plus) or n < 0 (Minus).
BandedOperator projector(Side side);
/// Grading J = P+ - P-.
BandedOperator j_op();

BandedOperator add(const BandedOperator& a, const BandedOperator& b);
BandedOperator scale(const GaussianRational& c, const BandedOperator& a);
BandedOperator compose(const BandedOperator& a, const BandedOperator& b);
BandedOperator commutator(const BandedOperator& a, const BandedOperator& b);

/// P_row A P_col
BandedOperator block(const BandedOperator& a, Side row, Side col);

GaussianRational entry(const BandedOperator& a, Index row, Index col);

/// Squared Hilbert-Schmidt norm; std::nullopt when it is infinite, i.e.
/// some diagonal has a nonzero tail.
std::optional<Rational> hs_norm_sq(const BandedOperator& a);

/// Finite window of an operator, rows and columns indexed by [-radius, radius].
class DenseMatrix {
 public:
  explicit DenseMatrix(Index radius);

  Index radius() const { return radius_; }
  Index size() const { return 2 * radius_ + 1; }

  GaussianRational& at(Index row, Index col);
  const GaussianRational& at(Index row, Index col) const;

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.radius_ == b.radius_ && a.data_ == b.data_;
  }

 private:
  std::size_t offset(Index row, Index col) const;

  Index radius_;
  std::vector<GaussianRational> data_;
};

DenseMatrix dense_truncate(const BandedOperator& a, Index radius);

}  // namespace restricted_trace
