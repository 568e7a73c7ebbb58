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

#include <json.hpp>

#include "restricted_trace/banded_operator.hpp"
#include "restricted_trace/cocycle.hpp"
#include "restricted_trace/delta_sum.hpp"
#include "restricted_trace/trace.hpp"

namespace restricted_trace {

/// Value of the "schema" field carried by every CLI document.
inline constexpr const char* kSchemaVersion = "restricted-trace/1";

/// {"re": "p/q", "im": "p/q"}
nlohmann::json to_json(const GaussianRational& z);
GaussianRational complex_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TraceResult& t);
nlohmann::json to_json(const AffineLimit& a);
nlohmann::json to_json(const DeltaTerm& term);
nlohmann::json to_json(const DenseMatrix& m);
nlohmann::json to_json(const CocycleReport& r);

/// AffineLimit document for the deltasum command, echoing the terms.
nlohmann::json affine_limit_document(const std::string& expr_name, Index j,
                                     CutoffScheme scheme, const DeltaSumExpr& expr,
                                     const AffineLimit& limit);

}  // namespace restricted_trace
