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

#include "restricted_trace/trace.hpp"

#include <algorithm>

namespace restricted_trace {

namespace {

TraceResult with_flags(TraceResult t) {
  t.convergent = t.slope.is_zero();
  return t;
}

}  // namespace

TraceResult operator+(const TraceResult& a, const TraceResult& b) {
  TraceResult t;
  t.slope = a.slope + b.slope;
  t.value = a.value + b.value;
  t.stabilizes_at = std::max(a.stabilizes_at, b.stabilizes_at);
  t.absolutely_convergent = a.absolutely_convergent && b.absolutely_convergent;
  return with_flags(t);
}

TraceResult operator-(const TraceResult& a, const TraceResult& b) { return a + (-1) * b; }

TraceResult operator*(const GaussianRational& c, const TraceResult& t) {
  TraceResult out = t;
  out.slope = c * t.slope;
  out.value = c * t.value;
  if (c.is_zero()) out.absolutely_convergent = true;
  return with_flags(out);
}

EventuallyConstantSeq diagonal(const BandedOperator& a) { return a.diagonal(0); }

TraceResult trace_of_diagonal(const EventuallyConstantSeq& diag) {
  TraceResult t;
  t.slope = diag.neg_tail() + diag.pos_tail();
  t.value = diag.pos_tail();
  for (const auto& [n, v] : diag.exceptions()) t.value += v - diag.baseline(n);
  t.stabilizes_at = diag.exception_radius();
  t.absolutely_convergent = diag.has_finite_support();
  return with_flags(t);
}

TraceResult trace_symmetric(const BandedOperator& a) { return trace_of_diagonal(diagonal(a)); }

UnorderedTrace trace_unordered(const BandedOperator& a) {
  const EventuallyConstantSeq diag = diagonal(a);
  if (!diag.has_finite_support()) return AmbiguousDivergence{};
  GaussianRational sum;
  for (const auto& e : diag.exceptions()) sum += e.second;
  return sum;
}

CyclicityDefect cyclicity_defect(const BandedOperator& a, const BandedOperator& b) {
  CyclicityDefect out{trace_symmetric(a * b), trace_symmetric(b * a), std::nullopt};
  if (out.ab.convergent && out.ba.convergent) out.difference = out.ab.value - out.ba.value;
  return out;
}

}  // namespace restricted_trace
