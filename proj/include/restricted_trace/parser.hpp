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

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "restricted_trace/trig_poly.hpp"

namespace restricted_trace {

/// Malformed expression. position() is the 0-based byte offset of the
/// offending token (or the input length at end of input).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::set<std::string> expected,
             std::string found);

  std::size_t position() const { return position_; }
  const std::set<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t position_;
  std::set<std::string> expected_;
  std::string found_;
};

/// Parses a trigonometric polynomial expression such as
///   "cos(3t)", "1/2*e(3) + (0+1/4 i)*e(-2)", "2 i*sin(theta) - 1/3".
/// The angle variable may be written t, theta or θ.
TrigPoly parse(std::string_view text);

}  // namespace restricted_trace
