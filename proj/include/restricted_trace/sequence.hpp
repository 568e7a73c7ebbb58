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
#include <utility>

#include "restricted_trace/scalar.hpp"

namespace restricted_trace {

/// Integer-indexed sequence that equals neg_tail for all sufficiently
/// negative n and pos_tail for all sufficiently positive n.
///
/// The baseline value at n is neg_tail for n < 0 and pos_tail for n >= 0;
/// exceptions() holds exactly the indices where the sequence differs from
/// that baseline. With this canonical form structural equality is value
/// equality.
class EventuallyConstantSeq {
 public:
  using Exceptions = std::map<Index, GaussianRational>;

  EventuallyConstantSeq() = default;
  EventuallyConstantSeq(GaussianRational neg_tail, GaussianRational pos_tail,
                        const Exceptions& values = {});

  static EventuallyConstantSeq constant(const GaussianRational& c) { return {c, c}; }
  /// Finitely supported sequence.
  static EventuallyConstantSeq finite(const Exceptions& values) { return {0, 0, values}; }

  const GaussianRational& neg_tail() const { return neg_tail_; }
  const GaussianRational& pos_tail() const { return pos_tail_; }
  const Exceptions& exceptions() const { return exceptions_; }

  /// (n_lo, n_hi) with value neg_tail for n <= n_lo and pos_tail for n >= n_hi.
  std::pair<Index, Index> tail_bounds() const;
  /// Largest |n| over exceptional indices, 0 when there are none.
  Index exception_radius() const;

  const GaussianRational& baseline(Index n) const { return n < 0 ? neg_tail_ : pos_tail_; }
  GaussianRational at(Index n) const;

  bool is_zero() const;
  bool is_constant() const { return exceptions_.empty() && neg_tail_ == pos_tail_; }
  /// Both tails vanish, so only finitely many terms are nonzero.
  bool has_finite_support() const { return neg_tail_.is_zero() && pos_tail_.is_zero(); }

  /// t(n) = s(n + k)
  EventuallyConstantSeq shifted(Index k) const;

  friend EventuallyConstantSeq operator+(const EventuallyConstantSeq& a,
                                         const EventuallyConstantSeq& b);
  friend EventuallyConstantSeq operator-(const EventuallyConstantSeq& a,
                                         const EventuallyConstantSeq& b);
  /// Pointwise product.
  friend EventuallyConstantSeq operator*(const EventuallyConstantSeq& a,
                                         const EventuallyConstantSeq& b);
  friend EventuallyConstantSeq operator*(const GaussianRational& c,
                                         const EventuallyConstantSeq& s);

  friend bool operator==(const EventuallyConstantSeq& a, const EventuallyConstantSeq& b) {
    return a.neg_tail_ == b.neg_tail_ && a.pos_tail_ == b.pos_tail_ &&
           a.exceptions_ == b.exceptions_;
  }
  friend bool operator!=(const EventuallyConstantSeq& a, const EventuallyConstantSeq& b) {
    return !(a == b);
  }

 private:
  void put(Index n, GaussianRational value);

  GaussianRational neg_tail_;
  GaussianRational pos_tail_;
  Exceptions exceptions_;
};

}  // namespace restricted_trace
