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

#include "restricted_trace/banded_operator.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace restricted_trace {

BandedOperator::BandedOperator(const Diagonals& diagonals) {
  for (const auto& [d, s] : diagonals) accumulate(d, s);
}

BandedOperator BandedOperator::identity() {
  return BandedOperator({{0, EventuallyConstantSeq::constant(1)}});
}

void BandedOperator::accumulate(Index offset, const EventuallyConstantSeq& s) {
  auto it = diagonals_.find(offset);
  if (it == diagonals_.end()) {
    if (!s.is_zero()) diagonals_.emplace(offset, s);
    return;
  }
  it->second = it->second + s;
  if (it->second.is_zero()) diagonals_.erase(it);
}

EventuallyConstantSeq BandedOperator::diagonal(Index offset) const {
  auto it = diagonals_.find(offset);
  return it == diagonals_.end() ? EventuallyConstantSeq{} : it->second;
}

GaussianRational BandedOperator::entry(Index row, Index col) const {
  auto it = diagonals_.find(col - row);
  return it == diagonals_.end() ? GaussianRational{} : it->second.at(row);
}

Index BandedOperator::bandwidth() const {
  Index w = 0;
  for (const auto& entry : diagonals_) w = std::max(w, std::abs(entry.first));
  return w;
}

Index BandedOperator::exception_radius() const {
  Index r = 0;
  for (const auto& entry : diagonals_) r = std::max(r, entry.second.exception_radius());
  return r;
}

std::optional<TrigPoly> BandedOperator::as_multiplication() const {
  TrigPoly::Coefficients coeffs;
  for (const auto& [d, s] : diagonals_) {
    if (!s.is_constant()) return std::nullopt;
    coeffs.emplace(d, s.pos_tail());
  }
  return TrigPoly(coeffs);
}

BandedOperator operator+(const BandedOperator& a, const BandedOperator& b) {
  BandedOperator out = a;
  for (const auto& [d, s] : b.diagonals_) out.accumulate(d, s);
  return out;
}

BandedOperator operator-(const BandedOperator& a, const BandedOperator& b) {
  return a + (-1) * b;
}

BandedOperator operator*(const GaussianRational& c, const BandedOperator& a) {
  BandedOperator out;
  if (c.is_zero()) return out;
  for (const auto& [d, s] : a.diagonals_) out.accumulate(d, c * s);
  return out;
}

BandedOperator operator*(const BandedOperator& a, const BandedOperator& b) {
  // (AB)(n, n+d) = sum_{d1+d2=d} A(n, n+d1) B(n+d1, n+d1+d2)
  BandedOperator out;
  for (const auto& [d1, s1] : a.diagonals_) {
    for (const auto& [d2, s2] : b.diagonals_) {
      out.accumulate(d1 + d2, s1 * s2.shifted(d1));
    }
  }
  return out;
}

BandedOperator mult_op(const TrigPoly& u) {
  BandedOperator::Diagonals diagonals;
  for (const auto& [k, c] : u.coefficients()) {
    diagonals.emplace(k, EventuallyConstantSeq::constant(c));
  }
  return BandedOperator(diagonals);
}

BandedOperator projector(Side side) {
  const bool plus = side == Side::Plus;
  return BandedOperator({{0, EventuallyConstantSeq(plus ? 0 : 1, plus ? 1 : 0)}});
}

BandedOperator j_op() { return BandedOperator({{0, EventuallyConstantSeq(-1, 1)}}); }

BandedOperator add(const BandedOperator& a, const BandedOperator& b) { return a + b; }

BandedOperator scale(const GaussianRational& c, const BandedOperator& a) { return c * a; }

BandedOperator compose(const BandedOperator& a, const BandedOperator& b) { return a * b; }

BandedOperator commutator(const BandedOperator& a, const BandedOperator& b) {
  return a * b - b * a;
}

BandedOperator block(const BandedOperator& a, Side row, Side col) {
  return projector(row) * a * projector(col);
}

GaussianRational entry(const BandedOperator& a, Index row, Index col) {
  return a.entry(row, col);
}

std::optional<Rational> hs_norm_sq(const BandedOperator& a) {
  Rational sum = 0;
  for (const auto& [d, s] : a.diagonals()) {
    if (!s.has_finite_support()) return std::nullopt;
    for (const auto& e : s.exceptions()) sum += e.second.norm_sq();
  }
  return sum;
}

DenseMatrix::DenseMatrix(Index radius) : radius_(radius) {
  if (radius < 1) throw std::invalid_argument("dense window radius must be >= 1");
  data_.resize(static_cast<std::size_t>(size() * size()));
}

std::size_t DenseMatrix::offset(Index row, Index col) const {
  if (std::abs(row) > radius_ || std::abs(col) > radius_) {
    throw std::out_of_range("index outside dense window");
  }
  return static_cast<std::size_t>((row + radius_) * size() + (col + radius_));
}

GaussianRational& DenseMatrix::at(Index row, Index col) { return data_[offset(row, col)]; }

const GaussianRational& DenseMatrix::at(Index row, Index col) const {
  return data_[offset(row, col)];
}

DenseMatrix dense_truncate(const BandedOperator& a, Index radius) {
  DenseMatrix out(radius);
  for (const auto& [d, s] : a.diagonals()) {
    for (Index n = -radius; n <= radius; ++n) {
      const Index m = n + d;
      if (m < -radius || m > radius) continue;
      out.at(n, m) = s.at(n);
    }
  }
  return out;
}

}  // namespace restricted_trace
