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

#include <iosfwd>
#include <string>
#include <vector>

#include "restricted_trace/scalar.hpp"

namespace restricted_trace::cli {

enum class Format { Table, Json };

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  ///< inconsistency or failed verification
inline constexpr int kExitUsage = 2;    ///< bad flags or unparsable expression

int run_compute(const std::string& u_text, const std::string& v_text, Format format,
                std::ostream& out, std::ostream& err);
int run_demo(Index j, Format format, std::ostream& out, std::ostream& err);
int run_verify(Index max_j, Format format, std::ostream& out, std::ostream& err);
int run_deltasum(const std::string& expr_name, Index j, const std::string& scheme_name,
                 Format format, std::ostream& out, std::ostream& err);

/// Full command line entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace restricted_trace::cli
