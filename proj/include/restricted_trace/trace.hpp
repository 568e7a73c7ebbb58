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
#include <variant>

#include "restricted_trace/banded_operator.hpp"

namespace restricted_trace {

/// Symmetric partial trace sum_{n=-L}^{L} A(n, n) as an exact affine
/// function of the cutoff: it equals slope * L + value for every
/// L >= stabilizes_at.
///
/// The window [-L, L] holds L negative and L + 1 non-negative indices, so a
/// diagonal with tails c- and c+ contributes c- * L + c+ * (L + 1) and the
/// constant c+ lands in value.
struct TraceResult {
  GaussianRational slope;
  GaussianRational value;
  Index stabilizes_at = 0;
  bool convergent = true;
  bool absolutely_convergent = true;

  GaussianRational at(Index cutoff) const { return slope * GaussianRational(cutoff) + value; }

  friend bool operator==(const TraceResult&, const TraceResult&) = default;
};

/// Componentwise sum; the result stabilizes where both operands have.
TraceResult operator+(const TraceResult& a, const TraceResult& b);
TraceResult operator-(const TraceResult& a, const TraceResult& b);
TraceResult operator*(const GaussianRational& c, const TraceResult& t);

/// The main diagonal n -> A(n, n).
EventuallyConstantSeq diagonal(const BandedOperator& a);

TraceResult trace_of_diagonal(const EventuallyConstantSeq& diag);
TraceResult trace_symmetric(const BandedOperator& a);

/// Returned by trace_unordered when the diagonal is not absolutely summable
/// and no summation order is singled out.
struct AmbiguousDivergence {
  friend bool operator==(AmbiguousDivergence, AmbiguousDivergence) { return true; }
};

using UnorderedTrace = std::variant<GaussianRational, AmbiguousDivergence>;

/// sum over all n of A(n, n) with no ordering; defined only when the
/// diagonal has finitely many nonzero terms.
UnorderedTrace trace_unordered(const BandedOperator& a);

struct CyclicityDefect {
  TraceResult ab;
  TraceResult ba;
  /// trace(AB) - trace(BA); present only when both traces converge.
  std::optional<GaussianRational> difference;
};

CyclicityDefect cyclicity_defect(const BandedOperator& a, const BandedOperator& b);

}  // namespace restricted_trace
