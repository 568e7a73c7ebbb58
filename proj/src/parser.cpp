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

#include "restricted_trace/parser.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace restricted_trace {

namespace {

std::string describe(const std::set<std::string>& expected,
                     const std::string& found, std::size_t position) {
  std::ostringstream os;
  os << "parse error at position " << position << ": expected ";
  bool first = true;
  for (const auto& e : expected) {
    os << (first ? "" : " or ") << e;
    first = false;
  }
  os << ", found " << found;
  return os.str();
}

constexpr std::string_view kTheta = "\xCE\xB8";  // θ in UTF-8

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  TrigPoly parse_input() {
    TrigPoly result = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail({"'+'", "'-'", "end of input"});
    return result;
  }

 private:
  // expr := ['-'] term (('+' | '-') term)*
  TrigPoly parse_expr() {
    skip_ws();
    bool negate = false;
    // A leading '-' directly in front of a coefficient is part of the
    // integer; in front of an atom it negates the term.
    if (peek() == '-' && !next_is_digit_after_sign()) {
      ++pos_;
      negate = true;
    }
    TrigPoly acc = parse_term();
    if (negate) acc = scale(-1, acc);
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      TrigPoly term = parse_term();
      acc = c == '+' ? add(acc, term) : subtract(acc, term);
    }
    return acc;
  }

  // term := coeff '*' atom | coeff | atom
  TrigPoly parse_term() {
    skip_ws();
    if (at_atom()) return parse_atom();
    if (!at_coeff_start()) fail({"coefficient", "'cos('", "'sin('", "'e('"});
    GaussianRational c = parse_coeff();
    skip_ws();
    if (peek() == '*') {
      ++pos_;
      skip_ws();
      if (!at_atom()) fail({"'cos('", "'sin('", "'e('"});
      return scale(c, parse_atom());
    }
    return TrigPoly::constant(c);
  }

  // coeff := rat | rat 'i' | '(' rat sign rat 'i' ')'
  GaussianRational parse_coeff() {
    if (peek() == '(') {
      ++pos_;
      Rational re = parse_rat();
      skip_ws();
      const char sign = peek();
      if (sign != '+' && sign != '-') fail({"'+'", "'-'"});
      ++pos_;
      skip_ws();
      if (peek() == '-' || peek() == '+') fail({"digit"});
      Rational im = parse_rat();
      skip_ws();
      expect_char('i');
      skip_ws();
      expect_char(')');
      if (sign == '-') im = -im;
      return {re, im};
    }
    Rational q = parse_rat();
    skip_ws();
    if (peek() == 'i') {
      ++pos_;
      return {Rational(0), q};
    }
    return GaussianRational(q);
  }

  // rat := int | int '/' posint
  Rational parse_rat() {
    skip_ws();
    std::string num = parse_int_text();
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      if (peek() == '-' || peek() == '+') fail({"positive integer"});
      const std::size_t at = pos_;
      std::string den = parse_int_text();
      if (den.find_first_not_of('0') == std::string::npos) {
        throw ParseError(at, {"positive integer"}, "'" + den + "'");
      }
      return make_rational(num + "/" + den);
    }
    return make_rational(num);
  }

  std::string parse_int_text() {
    std::string out;
    if (peek() == '-' || peek() == '+') {
      if (peek() == '-') out.push_back('-');
      ++pos_;
      skip_ws();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail({"digit"});
    while (std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(text_[pos_++]);
    return out;
  }

  // atom := 'cos(' int angle ')' | 'sin(' int angle ')' | 'e(' int ')'
  TrigPoly parse_atom() {
    if (consume("cos")) return parse_trig_argument(true);
    if (consume("sin")) return parse_trig_argument(false);
    consume("e");
    skip_ws();
    expect_char('(');
    skip_ws();
    const Index k = to_index(parse_int_text());
    skip_ws();
    expect_char(')');
    return TrigPoly::harmonic(k);
  }

  TrigPoly parse_trig_argument(bool cosine) {
    skip_ws();
    expect_char('(');
    skip_ws();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
      skip_ws();
    }
    std::optional<Index> k;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string digits;
      while (std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(text_[pos_++]);
      k = to_index(digits);
      skip_ws();
    }
    const bool has_angle = parse_angle();
    if (!k && !has_angle) fail({"integer", "angle variable"});
    skip_ws();
    if (peek() != ')') {
      if (has_angle) fail({"')'"});
      fail({"angle variable", "')'"});
    }
    ++pos_;
    Index harmonic = k.value_or(1);
    if (negative) harmonic = -harmonic;
    return cosine ? TrigPoly::cosine(harmonic) : TrigPoly::sine(harmonic);
  }

  bool parse_angle() {
    if (text_.substr(pos_, kTheta.size()) == kTheta) {
      pos_ += kTheta.size();
      return true;
    }
    if (consume("theta")) return true;
    if (peek() == 't') {
      ++pos_;
      return true;
    }
    return false;
  }

  Index to_index(const std::string& digits) const {
    try {
      return std::stoll(digits);
    } catch (const std::out_of_range&) {
      throw ParseError(pos_, {"harmonic index within 64-bit range"}, digits);
    }
  }

  bool at_atom() const {
    const std::string_view rest = text_.substr(pos_);
    auto opens_after = [&](std::size_t len) {
      std::size_t p = len;
      while (p < rest.size() && std::isspace(static_cast<unsigned char>(rest[p]))) ++p;
      return p < rest.size() && rest[p] == '(';
    };
    return (rest.rfind("cos", 0) == 0 && opens_after(3)) ||
           (rest.rfind("sin", 0) == 0 && opens_after(3)) ||
           (rest.rfind("e", 0) == 0 && opens_after(1));
  }

  bool at_coeff_start() const {
    const char c = peek();
    return c == '(' || c == '-' || c == '+' ||
           std::isdigit(static_cast<unsigned char>(c));
  }

  bool next_is_digit_after_sign() const {
    std::size_t p = pos_ + 1;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]));
  }

  bool starts_with_word(std::string_view word) const {
    return text_.substr(pos_, word.size()) == word;
  }

  bool consume(std::string_view word) {
    if (!starts_with_word(word)) return false;
    pos_ += word.size();
    return true;
  }

  void expect_char(char c) {
    if (peek() != c) fail({std::string("'") + c + "'"});
    ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(std::set<std::string> expected) const {
    std::string found = pos_ >= text_.size()
                            ? std::string("end of input")
                            : "'" + std::string(1, text_[pos_]) + "'";
    throw ParseError(pos_, std::move(expected), std::move(found));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(std::size_t position, std::set<std::string> expected,
                       std::string found)
    : std::runtime_error(describe(expected, found, position)),
      position_(position),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

TrigPoly parse(std::string_view text) { return Parser(text).parse_input(); }

}  // namespace restricted_trace
