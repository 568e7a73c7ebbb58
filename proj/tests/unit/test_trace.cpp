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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "restricted_trace/trace.hpp"

using namespace restricted_trace;

namespace {

GaussianRational q(long num, long den = 1) { return GaussianRational(Rational(num, den)); }
/// k / (den * i)
GaussianRational over_i(long k, long den) { return GaussianRational(k) / (GaussianRational(den) * GaussianRational::i()); }

GaussianRational partial_trace(const BandedOperator& a, Index cutoff) {
  GaussianRational sum;
  for (Index n = -cutoff; n <= cutoff; ++n) sum += entry(a, n, n);
  return sum;
}

void check_affine(const BandedOperator& a, const TraceResult& t) {
  for (Index extra : {0, 1, 7}) {
    const Index cutoff = t.stabilizes_at + extra;
    CAPTURE(cutoff);
    CHECK(partial_trace(a, cutoff) == t.at(cutoff));
  }
}

struct CosSin {
  explicit CosSin(Index j)
      : a1(mult_op(TrigPoly::cosine(j))),
        a2(mult_op(TrigPoly::sine(j))),
        p1(block(a1, Side::Plus, Side::Plus)),
        p2(block(a2, Side::Plus, Side::Plus)) {}
  BandedOperator a1, a2, p1, p2;
};

/// Random operator from mult_op / projector / j_op with a few products and sums.
template <typename Rng>
BandedOperator random_operator(Rng& rng) {
  std::uniform_int_distribution<int> pick(0, 3);
  auto leaf = [&]() -> BandedOperator {
    switch (pick(rng)) {
      case 0: return projector(Side::Plus);
      case 1: return projector(Side::Minus);
      case 2: return j_op();
      default: return mult_op(oracle::random_poly(rng, 3, 9));
    }
  };
  BandedOperator op = leaf();
  for (int i = 0; i < 3; ++i) op = pick(rng) < 3 ? op * leaf() : op + leaf();
  return op;
}

}  // namespace

TEST_CASE("diagonals") {
  const EventuallyConstantSeq dp = diagonal(projector(Side::Plus));
  CHECK(dp.neg_tail() == q(0));
  CHECK(dp.pos_tail() == q(1));
  CHECK(dp.exceptions().empty());

  const TrigPoly u = TrigPoly(TrigPoly::Coefficients{{0, q(3, 5)}, {2, q(1)}});
  CHECK(diagonal(mult_op(u)) == EventuallyConstantSeq::constant(q(3, 5)));

  for (Index j = 1; j <= 4; ++j) {
    const CosSin ops(j);
    const EventuallyConstantSeq d = diagonal(ops.p1 * ops.p2);
    for (Index n = -3 * j; n <= 3 * j; ++n) {
      CHECK(d.at(n) == (n >= 0 && n < j ? over_i(-1, 4) : q(0)));
    }
  }
}

TEST_CASE("symmetric trace values for cos(jt), sin(jt)") {
  for (Index j = 1; j <= 6; ++j) {
    CAPTURE(j);
    const CosSin ops(j);
    const TraceResult t12 = trace_symmetric(ops.p1 * ops.p2);
    CHECK(t12.convergent);
    CHECK(t12.slope.is_zero());
    CHECK(t12.value == over_i(-j, 4));
    check_affine(ops.p1 * ops.p2, t12);

    const TraceResult t21 = trace_symmetric(ops.p2 * ops.p1);
    CHECK(t21.value == over_i(j, 4));
    CHECK(t21.slope.is_zero());

    const BandedOperator a1ja2 = ops.a1 * j_op() * ops.a2;
    const TraceResult tj = trace_symmetric(a1ja2);
    CHECK(tj.slope.is_zero());
    CHECK(tj.value == over_i(-j, 1));
    check_affine(a1ja2, tj);
  }

  const TraceResult tp = trace_symmetric(projector(Side::Plus));
  CHECK(tp.slope == q(1));
  CHECK_FALSE(tp.convergent);
  CHECK_FALSE(tp.absolutely_convergent);
  check_affine(projector(Side::Plus), tp);
}

TEST_CASE("unordered trace") {
  for (Index j = 1; j <= 5; ++j) {
    const CosSin ops(j);
    const BandedOperator x = j_op() * commutator(j_op(), ops.a1) * commutator(j_op(), ops.a2);
    const UnorderedTrace t = trace_unordered(x);
    REQUIRE(std::holds_alternative<GaussianRational>(t));
    CHECK(q(1, 4) * std::get<GaussianRational>(t) == over_i(-j, 2));

    // dense oracle: all entries of x sit inside |n| <= j
    const Index r = 3 * j;
    const oracle::Dense g = oracle::grading(r);
    const oracle::Dense c = oracle::multiplication(TrigPoly::cosine(j), r);
    const oracle::Dense s = oracle::multiplication(TrigPoly::sine(j), r);
    const oracle::Dense dx = g * (g * c - c * g) * (g * s - s * g);
    GaussianRational inner;
    for (Index n = -j; n <= j; ++n) inner += dx(n, n);
    CHECK(q(1, 4) * inner == over_i(-j, 2));
  }
  CHECK(std::holds_alternative<AmbiguousDivergence>(trace_unordered(projector(Side::Plus))));

  const BandedOperator finite({{0, EventuallyConstantSeq::finite({{-2, 3}, {4, q(1, 2)}})},
                               {1, EventuallyConstantSeq::finite({{0, 9}})}});
  CHECK(std::get<GaussianRational>(trace_unordered(finite)) == q(7, 2));
}

TEST_CASE("cyclicity defect") {
  for (Index j = 1; j <= 5; ++j) {
    const CosSin ops(j);
    const CyclicityDefect d = cyclicity_defect(ops.p1, ops.p2);
    REQUIRE(d.difference.has_value());
    CHECK(*d.difference == over_i(-j, 2));
    CHECK(d.ab.convergent);
    CHECK(d.ba.convergent);
  }

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const TrigPoly u = oracle::random_poly(rng, 4, 9);
    const CyclicityDefect d = cyclicity_defect(j_op(), mult_op(u));
    if (d.difference) CHECK(d.difference->is_zero());
    CHECK(diagonal(j_op() * mult_op(u)) == diagonal(mult_op(u) * j_op()));
  }
}

TEST_CASE("finite-support operators restore cyclicity") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const BandedOperator x = commutator(j_op(), mult_op(oracle::random_poly(rng, 3, 9)));
    const BandedOperator y = random_operator(rng);
    const CyclicityDefect d = cyclicity_defect(x, y);
    REQUIRE(d.difference.has_value());
    CHECK(d.difference->is_zero());

    // the same statement checked on dense truncations
    const Index r = x.bandwidth() + x.exception_radius() + y.bandwidth() + 2;
    const DenseMatrix dx = dense_truncate(x, r + y.bandwidth()), dy = dense_truncate(y, r + y.bandwidth());
    GaussianRational xy, yx;
    for (Index n = -r; n <= r; ++n) {
      for (Index k = -(r + y.bandwidth()); k <= r + y.bandwidth(); ++k) {
        xy += dx.at(n, k) * dy.at(k, n);
        yx += dy.at(n, k) * dx.at(k, n);
      }
    }
    CHECK(xy == yx);
  }
}

TEST_CASE("stabilization, linearity, agreement on random operators") {
  std::mt19937_64 rng(314);
  for (int trial = 0; trial < 60; ++trial) {
    const BandedOperator a = random_operator(rng);
    const BandedOperator b = random_operator(rng);
    const TraceResult ta = trace_symmetric(a), tb = trace_symmetric(b);
    check_affine(a, ta);
    CHECK(ta.convergent == ta.slope.is_zero());
    if (ta.absolutely_convergent) {
      CHECK(ta.convergent);
      CHECK(std::get<GaussianRational>(trace_unordered(a)) == ta.value);
      const Index k = std::max<Index>(1, ta.stabilizes_at);
      CHECK(dense_truncate(a, k).at(0, 0) == entry(a, 0, 0));
      GaussianRational dense_sum;
      const DenseMatrix dm = dense_truncate(a, k);
      for (Index n = -k; n <= k; ++n) dense_sum += dm.at(n, n);
      CHECK(dense_sum == ta.value);
    }
    const TraceResult tab = trace_symmetric(a + b);
    const TraceResult sum = ta + tb;
    CHECK(tab.slope == sum.slope);
    CHECK(tab.value == sum.value);
    check_affine(a + b, sum);
  }
}
