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
#include <utility>
#include <vector>

#include "restricted_trace/banded_operator.hpp"
#include "restricted_trace/trace.hpp"
#include "restricted_trace/trig_poly.hpp"

namespace restricted_trace {

/// Every operator whose trace enters the three cocycle formulas, built once
/// from the pair (A1, A2).
struct CocycleOperators {
  BandedOperator a1a2;         ///< a1 a2,  a = P+ A P+
  BandedOperator a2a1;         ///< a2 a1
  BandedOperator a3;           ///< P+ [A1, A2] P+
  BandedOperator f1;           ///< [a1, a2] - a3
  BandedOperator f2;           ///< c1 b2 - b1 c2
  BandedOperator f3;           ///< 1/4 J [J, A1] [J, A2]
  BandedOperator a1_j_a2;      ///< A1 J A2
  BandedOperator j_a1a2;       ///< J A1 A2
  BandedOperator a1a2_j;       ///< A1 A2 J
  BandedOperator j_a1_j_a2_j;  ///< J A1 J A2 J
  BandedOperator naive;        ///< 1/2 J (A2 A1 - A1 A2)

  static CocycleOperators build(const BandedOperator& a1, const BandedOperator& a2);
};

/// trace([a1, a2] - a3)
TraceResult f1(const BandedOperator& a1, const BandedOperator& a2);
/// (trace(a1 a2), trace(a2 a1)) evaluated separately.
std::pair<TraceResult, TraceResult> f1_terms(const BandedOperator& a1, const BandedOperator& a2);
/// trace(c1 b2 - b1 c2); the operator has finitely many nonzero entries for
/// banded inputs, so the result is always absolutely convergent.
TraceResult f2(const BandedOperator& a1, const BandedOperator& a2);
/// 1/4 trace(J [J, A1] [J, A2])
TraceResult f3_direct(const BandedOperator& a1, const BandedOperator& a2);

struct NamedTrace {
  std::string name;
  TraceResult result;
};

/// J[J,A1][J,A2] expanded with J J = 1 into
///   A1 J A2 - J A1 A2 - A1 A2 J + J A1 J A2 J,
/// each term traced on its own.
struct F3Decomposition {
  /// Traces of the four expanded terms, unscaled.
  std::vector<NamedTrace> terms;
  /// 1/4 of the signed sum of the terms; equals f3_direct.
  TraceResult total;
  /// 1/2 trace(A1 J A2), reported when mean(u v) = 0 makes the J A1 A2 and
  /// A1 A2 J terms vanish.
  std::optional<TraceResult> reduced;
  /// 1/2 trace(J [A2, A1]): what moving factors around cyclically gives.
  TraceResult naive_cyclicity;

  /// terms, total, reduced (if any) and naive_cyclicity as one flat list.
  std::vector<NamedTrace> flatten() const;
};

class DecompositionUnavailable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws DecompositionUnavailable unless both operators are
/// multiplication operators.
F3Decomposition f3_decomposed(const BandedOperator& a1, const BandedOperator& a2);

/// Test oracle sum_k k u_k v_{-k}. It is also computed as i*mean(u v') and
/// the two must agree exactly.
GaussianRational closed_form(const TrigPoly& u, const TrigPoly& v);

struct CocycleReport {
  std::string u_text;
  std::string v_text;
  TraceResult f1;
  TraceResult f2;
  TraceResult f3_direct;
  F3Decomposition f3_decomposed;
  GaussianRational closed_form;
  /// Every convergent cocycle value (f1, f2, f3_direct, f3 total, f3
  /// reduced) equals closed_form. The naive-cyclicity contrast is not a
  /// cocycle value and does not take part.
  bool consistent = false;
};

CocycleReport report(const TrigPoly& u, const TrigPoly& v);

}  // namespace restricted_trace
