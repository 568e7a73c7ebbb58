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
#include "restricted_trace/parser.hpp"
#include "restricted_trace/trig_poly.hpp"

using namespace restricted_trace;

namespace {

GaussianRational q(long num, long den = 1) { return GaussianRational(Rational(num, den)); }
GaussianRational iq(long num, long den = 1) { return {Rational(0), Rational(num, den)}; }

}  // namespace

TEST_CASE("gaussian rationals are exact and canonical") {
  const GaussianRational a = GaussianRational::from_strings("2/4", "-3/6");
  CHECK(to_string(a.re()) == "1/2");
  CHECK(to_string(a.im()) == "-1/2");
  CHECK(a * a.conj() == q(1, 2));
  CHECK(GaussianRational::i() * GaussianRational::i() == q(-1));
  CHECK(q(1) / (q(2) * GaussianRational::i()) == iq(-1, 2));
  CHECK_THROWS_AS(q(1) / GaussianRational{}, std::domain_error);
}

TEST_CASE("inverse-i rendering matches hand notation") {
  // -j/(2i) with j = 3 is 3i/2
  CHECK(to_inverse_i_string(iq(3, 2)) == "-3/2i");
  CHECK(to_inverse_i_string(iq(-1, 4)) == "+1/4i");
  CHECK(to_inverse_i_string(iq(7)) == "-7/i");
  CHECK(to_inverse_i_string(q(2)) == "2");
  CHECK(to_inverse_i_string(GaussianRational{}) == "0");
}

TEST_CASE("parse expands cos and sin by Euler") {
  const TrigPoly c = parse("cos(3t)");
  CHECK(c.coefficients().size() == 2);
  CHECK(c.coefficient(3) == q(1, 2));
  CHECK(c.coefficient(-3) == q(1, 2));

  const TrigPoly s = parse("sin(3t)");
  CHECK(s.coefficient(3) == iq(-1, 2));
  CHECK(s.coefficient(-3) == iq(1, 2));

  const TrigPoly lit = parse("2*e(-1) + 1/3");
  CHECK(lit.coefficients().size() == 2);
  CHECK(lit.coefficient(-1) == q(2));
  CHECK(lit.coefficient(0) == q(1, 3));
}

TEST_CASE("parse normalization rules") {
  CHECK(parse("cos(-4t)") == parse("cos(4t)"));
  CHECK(parse("sin(-4t)") == scale(-1, parse("sin(4t)")));
  CHECK(parse("cos(0t)") == TrigPoly::constant(1));
  CHECK(parse("sin(0)").is_zero());
  CHECK(parse("cos(t)") == TrigPoly::cosine(1));
  CHECK(parse("cos(3θ)") == parse("cos(3 theta)"));
  CHECK(parse("cos(3θ)") == parse("cos(3t)"));
  CHECK(parse("  2 i * sin( 2 t ) - 1/3 ") ==
        subtract(scale(iq(2), TrigPoly::sine(2)), TrigPoly::constant(q(1, 3))));
  CHECK(parse("-cos(t)") == scale(-1, TrigPoly::cosine(1)));
  CHECK(parse("(1/2-3/4 i)*e(2)").coefficient(2) == GaussianRational(Rational(1, 2), Rational(-3, 4)));
}

TEST_CASE("parse errors carry position and expected tokens") {
  try {
    parse("cos(3t");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
    CHECK(e.found() == "end of input");
    CHECK(e.expected().count("')'") == 1);
  }
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("cos()"), ParseError);
  CHECK_THROWS_AS(parse("1/0"), ParseError);
  CHECK_THROWS_AS(parse("2*"), ParseError);
  CHECK_THROWS_AS(parse("e(x)"), ParseError);
  CHECK_THROWS_AS(parse("cos(3t) cos(t)"), ParseError);
  try {
    parse("1 + tan(t)");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("multiply, mean and derivative") {
  const Index j = 3;
  const TrigPoly prod = multiply(TrigPoly::cosine(j), TrigPoly::sine(j));
  CHECK(prod == scale(q(1, 2), TrigPoly::sine(2 * j)));
  CHECK(prod.coefficient(2 * j) == iq(-1, 4));
  CHECK(prod.coefficient(-2 * j) == iq(1, 4));
  CHECK(mean(prod).is_zero());

  const TrigPoly u = parse("1/2*e(3) + (0+1/4 i)*e(-2)");
  CHECK(multiply(u, TrigPoly::constant(1)) == u);
  CHECK(multiply(TrigPoly::harmonic(2), TrigPoly::harmonic(-2)) == TrigPoly::constant(1));

  CHECK(mean(TrigPoly::constant(q(1, 3))) == q(1, 3));
  // (e(j)/2 + e(-j)/2)^2 has constant term 1/4 + 1/4
  CHECK(mean(multiply(TrigPoly::cosine(j), TrigPoly::cosine(j))) == q(1, 2));

  CHECK(derivative(TrigPoly::sine(j)) == scale(q(j), TrigPoly::cosine(j)));
  CHECK(derivative(TrigPoly::constant(5)).is_zero());
  CHECK(derivative(TrigPoly::harmonic(-4)) == scale(iq(-4), TrigPoly::harmonic(-4)));
}

TEST_CASE("add, scale, to_text") {
  CHECK(add(TrigPoly::cosine(1), scale(-1, TrigPoly::cosine(1))).coefficients().empty());
  const TrigPoly s2 = scale(2, TrigPoly::sine(1));
  CHECK(s2.coefficient(1) == iq(-1));
  CHECK(s2.coefficient(-1) == iq(1));
  const TrigPoly u = parse("1/2*e(3) + (0+1/4 i)*e(-2)");
  CHECK(parse(to_text(u)) == u);
  CHECK(to_text(TrigPoly{}) == "0");
  CHECK(parse(to_text(TrigPoly{})).is_zero());
  CHECK(TrigPoly::cosine(4).degree() == 4);
  CHECK(TrigPoly{}.degree() == 0);
}

TEST_CASE("ring laws and round trip on random polynomials") {
  std::mt19937_64 rng(20261016);
  for (int trial = 0; trial < 60; ++trial) {
    const TrigPoly u = oracle::random_poly(rng, 4, 9);
    const TrigPoly v = oracle::random_poly(rng, 4, 9);
    const TrigPoly w = oracle::random_poly(rng, 4, 9);
    CAPTURE(to_text(u));
    CAPTURE(to_text(v));

    CHECK(multiply(u, v) == multiply(v, u));
    CHECK(multiply(multiply(u, v), w) == multiply(u, multiply(v, w)));
    CHECK(multiply(u, add(v, w)) == add(multiply(u, v), multiply(u, w)));
    CHECK(add(u, scale(-1, u)).coefficients().empty());

    GaussianRational pairing;
    for (const auto& [k, uk] : u.coefficients()) pairing += uk * v.coefficient(-k);
    CHECK(mean(multiply(u, v)) == pairing);

    CHECK(derivative(multiply(u, v)) ==
          add(multiply(derivative(u), v), multiply(u, derivative(v))));
    CHECK(parse(to_text(u)) == u);

    for (const auto& entry : u.coefficients()) CHECK_FALSE(entry.second.is_zero());
  }
}
