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

#include "restricted_trace/trig_poly.hpp"

#include <algorithm>
#include <cstdlib>

namespace restricted_trace {

TrigPoly::TrigPoly(const Coefficients& coeffs) {
  for (const auto& [k, c] : coeffs) set(k, c);
}

TrigPoly TrigPoly::constant(const GaussianRational& c) {
  TrigPoly u;
  u.set(0, c);
  return u;
}

TrigPoly TrigPoly::harmonic(Index k) {
  TrigPoly u;
  u.set(k, 1);
  return u;
}

TrigPoly TrigPoly::cosine(Index k) {
  if (k == 0) return constant(1);
  const GaussianRational half(Rational(1, 2));
  TrigPoly u;
  u.set(k, half);
  u.set(-k, half);
  return u;
}

TrigPoly TrigPoly::sine(Index k) {
  if (k == 0) return {};
  // 1/(2i) = -i/2
  const GaussianRational c(Rational(0), Rational(-1, 2));
  TrigPoly u;
  u.set(k, c);
  u.set(-k, -c);
  return u;
}

GaussianRational TrigPoly::coefficient(Index k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? GaussianRational{} : it->second;
}

Index TrigPoly::degree() const {
  Index d = 0;
  for (const auto& entry : coeffs_) d = std::max(d, std::abs(entry.first));
  return d;
}

void TrigPoly::set(Index k, const GaussianRational& value) {
  if (value.is_zero()) {
    coeffs_.erase(k);
  } else {
    coeffs_[k] = value;
  }
}

TrigPoly add(const TrigPoly& u, const TrigPoly& v) {
  TrigPoly out = u;
  for (const auto& [k, c] : v.coeffs_) out.set(k, out.coefficient(k) + c);
  return out;
}

TrigPoly scale(const GaussianRational& c, const TrigPoly& u) {
  TrigPoly out;
  if (c.is_zero()) return out;
  for (const auto& [k, a] : u.coeffs_) out.set(k, c * a);
  return out;
}

TrigPoly subtract(const TrigPoly& u, const TrigPoly& v) {
  return add(u, scale(-1, v));
}

TrigPoly multiply(const TrigPoly& u, const TrigPoly& v) {
  TrigPoly::Coefficients acc;
  for (const auto& [a, ua] : u.coeffs_) {
    for (const auto& [b, vb] : v.coeffs_) acc[a + b] += ua * vb;
  }
  return TrigPoly(acc);
}

GaussianRational mean(const TrigPoly& u) { return u.coefficient(0); }

TrigPoly derivative(const TrigPoly& u) {
  TrigPoly out;
  for (const auto& [k, c] : u.coeffs_) {
    out.set(k, GaussianRational(Rational(0), Rational(k)) * c);
  }
  return out;
}

namespace {

std::string coefficient_text(const GaussianRational& c) {
  if (c.is_real()) return to_string(c.re());
  if (sgn(c.re()) == 0) return to_string(c.im()) + " i";
  const char* sign = sgn(c.im()) < 0 ? "-" : "+";
  const Rational im = abs(c.im());
  return "(" + to_string(c.re()) + sign + to_string(im) + " i)";
}

}  // namespace

std::string to_text(const TrigPoly& u) {
  if (u.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : u.coefficients()) {
    if (!out.empty()) out += " + ";
    out += coefficient_text(c);
    if (k != 0) out += "*e(" + std::to_string(k) + ")";
  }
  return out;
}

}  // namespace restricted_trace
