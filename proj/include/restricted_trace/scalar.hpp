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

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

namespace restricted_trace {

using Index = std::int64_t;

/// Arbitrary precision rational; mpq_class keeps values in lowest terms
/// with a positive denominator as long as every producer canonicalizes.
using Rational = mpq_class;

Rational make_rational(const std::string& text);
std::string to_string(const Rational& q);

/// Exact complex number re + i*im with rational parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  GaussianRational(Rational re, Rational im);

  static GaussianRational i() { return {Rational(0), Rational(1)}; }
  static GaussianRational from_strings(const std::string& re,
                                       const std::string& im);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2, always real.
  Rational norm_sq() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// "re+im i" style, e.g. "1/2", "-3/4i", "1/2+1/3i".
std::string to_string(const GaussianRational& z);

/// Rendering as w/i with w = i*z, the form used when comparing against
/// hand calculations: -j/(2i) prints as "-j/2i". Values with a nonzero real
/// part are rendered as "re + w/i".
std::string to_inverse_i_string(const GaussianRational& z);

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace restricted_trace
