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

#include "restricted_trace/cocycle.hpp"

namespace restricted_trace {

CocycleOperators CocycleOperators::build(const BandedOperator& a1, const BandedOperator& a2) {
  const BandedOperator pp1 = block(a1, Side::Plus, Side::Plus);
  const BandedOperator pp2 = block(a2, Side::Plus, Side::Plus);
  const BandedOperator b1 = block(a1, Side::Plus, Side::Minus);
  const BandedOperator b2 = block(a2, Side::Plus, Side::Minus);
  const BandedOperator c1 = block(a1, Side::Minus, Side::Plus);
  const BandedOperator c2 = block(a2, Side::Minus, Side::Plus);
  const BandedOperator j = j_op();
  const GaussianRational quarter(Rational(1, 4));
  const GaussianRational half(Rational(1, 2));

  CocycleOperators ops;
  ops.a1a2 = pp1 * pp2;
  ops.a2a1 = pp2 * pp1;
  ops.a3 = block(commutator(a1, a2), Side::Plus, Side::Plus);
  ops.f1 = ops.a1a2 - ops.a2a1 - ops.a3;
  ops.f2 = c1 * b2 - b1 * c2;
  ops.f3 = quarter * (j * commutator(j, a1) * commutator(j, a2));
  ops.a1_j_a2 = a1 * j * a2;
  ops.j_a1a2 = j * a1 * a2;
  ops.a1a2_j = a1 * a2 * j;
  ops.j_a1_j_a2_j = j * a1 * j * a2 * j;
  ops.naive = half * (j * (a2 * a1 - a1 * a2));
  return ops;
}

TraceResult f1(const BandedOperator& a1, const BandedOperator& a2) {
  const BandedOperator pp1 = block(a1, Side::Plus, Side::Plus);
  const BandedOperator pp2 = block(a2, Side::Plus, Side::Plus);
  const BandedOperator a3 = block(commutator(a1, a2), Side::Plus, Side::Plus);
  return trace_symmetric(commutator(pp1, pp2) - a3);
}

std::pair<TraceResult, TraceResult> f1_terms(const BandedOperator& a1, const BandedOperator& a2) {
  const auto defect = cyclicity_defect(block(a1, Side::Plus, Side::Plus),
                                       block(a2, Side::Plus, Side::Plus));
  return {defect.ab, defect.ba};
}

TraceResult f2(const BandedOperator& a1, const BandedOperator& a2) {
  const BandedOperator c1b2 = block(a1, Side::Minus, Side::Plus) * block(a2, Side::Plus, Side::Minus);
  const BandedOperator b1c2 = block(a1, Side::Plus, Side::Minus) * block(a2, Side::Minus, Side::Plus);
  return trace_symmetric(c1b2 - b1c2);
}

TraceResult f3_direct(const BandedOperator& a1, const BandedOperator& a2) {
  const BandedOperator j = j_op();
  return GaussianRational(Rational(1, 4)) *
         trace_symmetric(j * commutator(j, a1) * commutator(j, a2));
}

namespace {

F3Decomposition decompose(const CocycleOperators& ops, const TrigPoly& u, const TrigPoly& v) {
  const GaussianRational quarter(Rational(1, 4));
  F3Decomposition out;
  const TraceResult t1 = trace_symmetric(ops.a1_j_a2);
  const TraceResult t2 = trace_symmetric(ops.j_a1a2);
  const TraceResult t3 = trace_symmetric(ops.a1a2_j);
  const TraceResult t4 = trace_symmetric(ops.j_a1_j_a2_j);
  out.terms = {{"trace(A1 J A2)", t1},
               {"trace(J A1 A2)", t2},
               {"trace(A1 A2 J)", t3},
               {"trace(J A1 J A2 J)", t4}};
  out.total = trace_symmetric(quarter * (ops.a1_j_a2 - ops.j_a1a2 - ops.a1a2_j + ops.j_a1_j_a2_j));
  if (mean(multiply(u, v)).is_zero()) {
    out.reduced = GaussianRational(Rational(1, 2)) * t1;
  }
  out.naive_cyclicity = trace_symmetric(ops.naive);
  return out;
}

}  // namespace

std::vector<NamedTrace> F3Decomposition::flatten() const {
  std::vector<NamedTrace> out = terms;
  out.push_back({"total", total});
  if (reduced) out.push_back({"half trace(A1 J A2)", *reduced});
  out.push_back({"naive cyclicity", naive_cyclicity});
  return out;
}

F3Decomposition f3_decomposed(const BandedOperator& a1, const BandedOperator& a2) {
  const auto u = a1.as_multiplication();
  const auto v = a2.as_multiplication();
  if (!u || !v) {
    throw DecompositionUnavailable(
        "f3 decomposition needs multiplication operators (constant diagonals)");
  }
  return decompose(CocycleOperators::build(a1, a2), *u, *v);
}

GaussianRational closed_form(const TrigPoly& u, const TrigPoly& v) {
  GaussianRational direct;
  for (const auto& [k, uk] : u.coefficients()) {
    direct += GaussianRational(k) * uk * v.coefficient(-k);
  }
  const GaussianRational via_mean = GaussianRational::i() * mean(multiply(u, derivative(v)));
  if (direct != via_mean) {
    throw std::logic_error("closed form routes disagree: " + to_string(direct) + " vs " +
                           to_string(via_mean));
  }
  return direct;
}

CocycleReport report(const TrigPoly& u, const TrigPoly& v) {
  const BandedOperator a1 = mult_op(u);
  const BandedOperator a2 = mult_op(v);
  const CocycleOperators ops = CocycleOperators::build(a1, a2);

  CocycleReport r;
  r.u_text = to_text(u);
  r.v_text = to_text(v);
  r.f1 = trace_symmetric(ops.f1);
  r.f2 = trace_symmetric(ops.f2);
  r.f3_direct = trace_symmetric(ops.f3);
  r.f3_decomposed = decompose(ops, u, v);
  r.closed_form = closed_form(u, v);

  std::vector<const TraceResult*> values = {&r.f1, &r.f2, &r.f3_direct, &r.f3_decomposed.total};
  if (r.f3_decomposed.reduced) values.push_back(&*r.f3_decomposed.reduced);
  r.consistent = true;
  for (const TraceResult* t : values) {
    if (!t->convergent || t->value != r.closed_form) r.consistent = false;
  }
  return r;
}

}  // namespace restricted_trace
