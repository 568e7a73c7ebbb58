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

#include "restricted_trace/sequence.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace restricted_trace {

namespace {

template <typename Op>
EventuallyConstantSeq pointwise(const EventuallyConstantSeq& a,
                                const EventuallyConstantSeq& b, Op op) {
  // Away from the exception sets both operands sit on their baselines, and
  // both baselines switch at 0, so op(baseline) is the baseline of the result.
  std::set<Index> keys;
  for (const auto& e : a.exceptions()) keys.insert(e.first);
  for (const auto& e : b.exceptions()) keys.insert(e.first);
  EventuallyConstantSeq::Exceptions values;
  for (Index n : keys) values.emplace(n, op(a.at(n), b.at(n)));
  return {op(a.neg_tail(), b.neg_tail()), op(a.pos_tail(), b.pos_tail()), values};
}

}  // namespace

EventuallyConstantSeq::EventuallyConstantSeq(GaussianRational neg_tail,
                                             GaussianRational pos_tail,
                                             const Exceptions& values)
    : neg_tail_(std::move(neg_tail)), pos_tail_(std::move(pos_tail)) {
  for (const auto& [n, v] : values) put(n, v);
}

void EventuallyConstantSeq::put(Index n, GaussianRational value) {
  if (value == baseline(n)) {
    exceptions_.erase(n);
  } else {
    exceptions_[n] = std::move(value);
  }
}

std::pair<Index, Index> EventuallyConstantSeq::tail_bounds() const {
  Index lo = -1;
  Index hi = 0;
  if (!exceptions_.empty()) {
    lo = std::min<Index>(exceptions_.begin()->first - 1, -1);
    hi = std::max<Index>(exceptions_.rbegin()->first + 1, 0);
  }
  return {lo, hi};
}

Index EventuallyConstantSeq::exception_radius() const {
  if (exceptions_.empty()) return 0;
  return std::max(std::abs(exceptions_.begin()->first),
                  std::abs(exceptions_.rbegin()->first));
}

GaussianRational EventuallyConstantSeq::at(Index n) const {
  auto it = exceptions_.find(n);
  return it != exceptions_.end() ? it->second : baseline(n);
}

bool EventuallyConstantSeq::is_zero() const {
  return exceptions_.empty() && has_finite_support();
}

EventuallyConstantSeq EventuallyConstantSeq::shifted(Index k) const {
  Exceptions values;
  for (const auto& [n, v] : exceptions_) values.emplace(n - k, v);
  // Indices whose source n + k lies on the other side of 0.
  const Index lo = std::min<Index>(0, -k);
  const Index hi = std::max<Index>(0, -k);
  for (Index n = lo; n < hi; ++n) {
    if (!values.count(n)) values.emplace(n, baseline(n + k));
  }
  return {neg_tail_, pos_tail_, values};
}

EventuallyConstantSeq operator+(const EventuallyConstantSeq& a,
                                const EventuallyConstantSeq& b) {
  return pointwise(a, b, [](const GaussianRational& x, const GaussianRational& y) { return x + y; });
}

EventuallyConstantSeq operator-(const EventuallyConstantSeq& a,
                                const EventuallyConstantSeq& b) {
  return pointwise(a, b, [](const GaussianRational& x, const GaussianRational& y) { return x - y; });
}

EventuallyConstantSeq operator*(const EventuallyConstantSeq& a,
                                const EventuallyConstantSeq& b) {
  return pointwise(a, b, [](const GaussianRational& x, const GaussianRational& y) { return x * y; });
}

EventuallyConstantSeq operator*(const GaussianRational& c, const EventuallyConstantSeq& s) {
  EventuallyConstantSeq::Exceptions values;
  for (const auto& [n, v] : s.exceptions()) values.emplace(n, c * v);
  return {c * s.neg_tail(), c * s.pos_tail(), values};
}

}  // namespace restricted_trace
