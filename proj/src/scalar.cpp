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

#include "restricted_trace/scalar.hpp"

#include <stdexcept>

namespace restricted_trace {

Rational make_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational literal: '" + text + "'");
  }
  if (sgn(q.get_den()) == 0) {
    throw std::invalid_argument("zero denominator: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

GaussianRational::GaussianRational(Rational re, Rational im)
    : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::from_strings(const std::string& re,
                                                const std::string& im) {
  return {make_rational(re), make_rational(im)};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const Rational den = o.norm_sq();
  if (sgn(den) == 0) throw std::domain_error("division by zero");
  *this *= o.conj();
  re_ /= den;
  im_ /= den;
  return *this;
}

std::string to_string(const GaussianRational& z) {
  if (z.is_real()) return to_string(z.re());
  std::string im = to_string(z.im());
  if (sgn(z.re()) == 0) return im + "i";
  if (sgn(z.im()) > 0) im = "+" + im;
  return to_string(z.re()) + im + "i";
}

std::string to_inverse_i_string(const GaussianRational& z) {
  if (z.is_zero()) return "0";
  // z = w/i  <=>  w = i*z = -im + i*re
  const Rational w = -z.im();
  std::string out;
  if (sgn(z.re()) != 0) {
    out = to_string(z.re());
    if (sgn(w) == 0) return out;
    out += sgn(w) > 0 ? " + " : " - ";
    const Rational aw = abs(w);
    return out + to_string(aw) + (aw.get_den() == 1 ? "/i" : "i");
  }
  const std::string ws = to_string(w);
  return (sgn(w) > 0 ? "+" : "") + ws + (w.get_den() == 1 ? "/i" : "i");
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  return os << to_string(z);
}

}  // namespace restricted_trace
