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

#include "restricted_trace/json_io.hpp"

namespace restricted_trace {

using nlohmann::json;

json to_json(const GaussianRational& z) {
  return {{"re", to_string(z.re())}, {"im", to_string(z.im())}};
}

GaussianRational complex_from_json(const json& j) {
  return GaussianRational::from_strings(j.at("re").get<std::string>(),
                                        j.at("im").get<std::string>());
}

json to_json(const TraceResult& t) {
  return {{"slope", to_json(t.slope)},
          {"value", to_json(t.value)},
          {"value_display", to_inverse_i_string(t.value)},
          {"stabilizes_at", t.stabilizes_at},
          {"convergent", t.convergent},
          {"absolutely_convergent", t.absolutely_convergent}};
}

json to_json(const AffineLimit& a) {
  return {{"slope", to_json(a.slope)},
          {"value", to_json(a.value)},
          {"value_display", to_inverse_i_string(a.value)},
          {"stabilizes_at", a.stabilizes_at}};
}

namespace {

json bound(const std::optional<Index>& b) { return b ? json(*b) : json(nullptr); }

json range_json(const IndexRange& r) { return {{"lo", bound(r.lo)}, {"hi", bound(r.hi)}}; }

}  // namespace

json to_json(const DeltaTerm& term) {
  return {{"coeff", to_json(term.coeff())},
          {"n_range", range_json(term.n_range())},
          {"m_range", range_json(term.m_range())},
          {"delta", {{"a", term.delta().a}, {"b", term.delta().b}, {"c", term.delta().c}}}};
}

json to_json(const DenseMatrix& m) {
  json rows = json::array();
  for (Index n = -m.radius(); n <= m.radius(); ++n) {
    json row = json::array();
    for (Index k = -m.radius(); k <= m.radius(); ++k) row.push_back(to_json(m.at(n, k)));
    rows.push_back(std::move(row));
  }
  return {{"index_lo", -m.radius()}, {"index_hi", m.radius()}, {"rows", std::move(rows)}};
}

json to_json(const CocycleReport& r) {
  json decomposed = json::array();
  for (const auto& named : r.f3_decomposed.flatten()) {
    decomposed.push_back({{"name", named.name}, {"result", to_json(named.result)}});
  }
  return {{"schema", kSchemaVersion},
          {"command", "compute"},
          {"inputs", {{"u", r.u_text}, {"v", r.v_text}}},
          {"f1", to_json(r.f1)},
          {"f2", to_json(r.f2)},
          {"f3_direct", to_json(r.f3_direct)},
          {"f3_decomposed", std::move(decomposed)},
          {"closed_form", to_json(r.closed_form)},
          {"closed_form_display", to_inverse_i_string(r.closed_form)},
          {"consistent", r.consistent}};
}

json affine_limit_document(const std::string& expr_name, Index j, CutoffScheme scheme,
                           const DeltaSumExpr& expr, const AffineLimit& limit) {
  json doc = to_json(limit);
  doc["schema"] = kSchemaVersion;
  doc["command"] = "deltasum";
  doc["expr"] = expr_name;
  doc["j"] = j;
  doc["scheme"] = to_string(scheme);
  json terms = json::array();
  for (const auto& t : expr.terms) terms.push_back(to_json(t));
  doc["terms"] = std::move(terms);
  return doc;
}

}  // namespace restricted_trace
