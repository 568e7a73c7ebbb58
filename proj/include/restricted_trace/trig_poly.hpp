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
#include <string>

#include "restricted_trace/scalar.hpp"

namespace restricted_trace {

/// Trigonometric polynomial u(t) = sum_k u_k e^{ikt}, stored as a finite
/// table of nonzero Fourier coefficients keyed by harmonic k.
class TrigPoly {
 public:
  using Coefficients = std::map<Index, GaussianRational>;

  TrigPoly() = default;
  explicit TrigPoly(const Coefficients& coeffs);

  static TrigPoly constant(const GaussianRational& c);
  /// e^{ikt}
  static TrigPoly harmonic(Index k);
  /// cos(kt) = (e(k) + e(-k)) / 2
  static TrigPoly cosine(Index k);
  /// sin(kt) = (e(k) - e(-k)) / 2i
  static TrigPoly sine(Index k);

  const Coefficients& coefficients() const { return coeffs_; }
  /// u_k, zero for harmonics that are not stored.
  GaussianRational coefficient(Index k) const;

  bool is_zero() const { return coeffs_.empty(); }
  Index degree() const;

  friend bool operator==(const TrigPoly& a, const TrigPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const TrigPoly& a, const TrigPoly& b) { return !(a == b); }

 private:
  void set(Index k, const GaussianRational& value);

  Coefficients coeffs_;

  friend TrigPoly add(const TrigPoly&, const TrigPoly&);
  friend TrigPoly scale(const GaussianRational&, const TrigPoly&);
  friend TrigPoly multiply(const TrigPoly&, const TrigPoly&);
  friend TrigPoly derivative(const TrigPoly&);
};

TrigPoly add(const TrigPoly& u, const TrigPoly& v);
TrigPoly scale(const GaussianRational& c, const TrigPoly& u);
TrigPoly subtract(const TrigPoly& u, const TrigPoly& v);

/// Coefficient convolution: (uv)_k = sum_a u_a v_{k-a}.
TrigPoly multiply(const TrigPoly& u, const TrigPoly& v);

/// The k = 0 coefficient, i.e. the integral of u over [0, 2pi] divided by 2pi.
GaussianRational mean(const TrigPoly& u);

/// (u')_k = ik u_k
TrigPoly derivative(const TrigPoly& u);

/// Text in the expression grammar accepted by parse(); harmonics are emitted
/// in ascending order as coefficient*e(k) terms.
std::string to_text(const TrigPoly& u);

}  // namespace restricted_trace
