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

#include "restricted_trace/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "restricted_trace/cocycle.hpp"
#include "restricted_trace/delta_sum.hpp"
#include "restricted_trace/json_io.hpp"
#include "restricted_trace/parser.hpp"
#include "restricted_trace/trace.hpp"

namespace restricted_trace::cli {

using nlohmann::json;

namespace {

/// -j/(2i) etc. as exact values: k/(den * i) = -i k/den.
GaussianRational over_i(Index k, long den) { return {Rational(0), Rational(-k, den)}; }

class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& out) const {
    std::vector<std::size_t> width(rows_.front().size(), 0);
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (std::size_t c = 0; c < rows_[r].size(); ++c) {
        out << (c ? "  " : "") << std::left << std::setw(static_cast<int>(width[c]))
            << rows_[r][c];
      }
      out << '\n';
      if (r == 0) {
        std::size_t total = 0;
        for (auto w : width) total += w + 2;
        out << std::string(total - 2, '-') << '\n';
      }
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string describe(const TraceResult& t) {
  if (!t.convergent) return "diverges (slope " + to_string(t.slope) + ")";
  return to_inverse_i_string(t.value);
}

void print_parse_error(const std::string& flag, const std::string& text, const ParseError& e,
                       std::ostream& err) {
  err << "error: " << flag << ": " << e.what() << '\n'
      << "  " << text << '\n'
      << "  " << std::string(e.position(), ' ') << "^\n";
}

struct DemoRow {
  std::string quantity;
  std::string method;
  GaussianRational value;
  GaussianRational expected;
};

struct VerifyRow {
  Index j;
  CocycleReport report;
  GaussianRational expected;
  bool pass;
};

VerifyRow verify_one(Index j) {
  VerifyRow row{j, report(TrigPoly::cosine(j), TrigPoly::sine(j)), over_i(-j, 2), false};
  const auto& r = row.report;
  const bool all_convergent = r.f1.convergent && r.f2.convergent && r.f3_direct.convergent;
  row.pass = r.consistent && all_convergent && r.f1.value == row.expected &&
             r.f2.value == row.expected && r.f3_direct.value == row.expected &&
             r.closed_form == row.expected;
  return row;
}

}  // namespace

int run_compute(const std::string& u_text, const std::string& v_text, Format format,
                std::ostream& out, std::ostream& err) {
  TrigPoly u, v;
  try {
    u = parse(u_text);
  } catch (const ParseError& e) {
    print_parse_error("--u", u_text, e, err);
    return kExitUsage;
  }
  try {
    v = parse(v_text);
  } catch (const ParseError& e) {
    print_parse_error("--v", v_text, e, err);
    return kExitUsage;
  }

  const CocycleReport r = report(u, v);
  if (format == Format::Json) {
    out << to_json(r).dump(2) << '\n';
  } else {
    out << "u = " << r.u_text << "\nv = " << r.v_text << "\n\n";
    Table table({"formula", "value", "re", "im", "slope", "stabilizes_at"});
    auto add = [&](const std::string& name, const TraceResult& t) {
      table.add({name, describe(t), to_string(t.value.re()), to_string(t.value.im()),
                 to_string(t.slope), std::to_string(t.stabilizes_at)});
    };
    add("F1 = trace([a1,a2] - a3)", r.f1);
    add("F2 = trace(c1 b2 - b1 c2)", r.f2);
    add("F3 = 1/4 trace(J[J,A1][J,A2])", r.f3_direct);
    for (const auto& named : r.f3_decomposed.flatten()) add("  F3 part: " + named.name, named.result);
    table.add({"closed form sum_k k u_k v_-k", to_inverse_i_string(r.closed_form),
               to_string(r.closed_form.re()), to_string(r.closed_form.im()), "", ""});
    table.print(out);
    out << "\nconsistent: " << (r.consistent ? "yes" : "NO") << '\n';
  }
  if (!r.consistent) {
    err << "error: cocycle formulas disagree\n";
    return kExitFailure;
  }
  return kExitOk;
}

int run_demo(Index j, Format format, std::ostream& out, std::ostream& err) {
  if (j < 1) {
    err << "error: --j must be a positive integer\n";
    return kExitUsage;
  }
  const BandedOperator a1 = mult_op(TrigPoly::cosine(j));
  const BandedOperator a2 = mult_op(TrigPoly::sine(j));
  const auto [tr_a1a2, tr_a2a1] = f1_terms(a1, a2);
  const F3Decomposition f3 = f3_decomposed(a1, a2);
  const TraceResult tr_a1ja2 = f3.terms.front().result;
  const auto ds = [&](const DeltaSumExpr& e, CutoffScheme s) { return evaluate(e, s).value; };

  const std::vector<DemoRow> rows = {
      {"F2", "trace(c1 b2 - b1 c2), absolutely convergent", f2(a1, a2).value, over_i(-j, 2)},
      {"F2", "delta sum", ds(f2_expr(j), CutoffScheme::CutoffOnN), over_i(-j, 2)},
      {"trace_L(a1 a2)", "symmetric cutoff", tr_a1a2.value, over_i(-j, 4)},
      {"trace_L(a1 a2)", "delta sum, n cut at L", ds(a1a2_expr(j), CutoffScheme::CutoffOnN),
       over_i(-j, 4)},
      {"trace(a1 a2)", "delta sum after swapping n and m",
       ds(index_swap(a1a2_expr(j)), CutoffScheme::CutoffOnN), over_i(j, 4)},
      {"trace_L(a2 a1)", "symmetric cutoff", tr_a2a1.value, over_i(j, 4)},
      {"F1", "trace_L(a1 a2) - trace_L(a2 a1)", f1(a1, a2).value, over_i(-j, 2)},
      {"trace_L(A1 J A2)", "symmetric cutoff", tr_a1ja2.value, over_i(-j, 1)},
      {"trace_L(A1 J A2)", "delta sum, n cut at L", ds(a1ja2_expr(j), CutoffScheme::CutoffOnN),
       over_i(-j, 1)},
      {"trace(A1 J A2)", "delta sum, n summed first", ds(a1ja2_expr(j), CutoffScheme::CutoffOnM),
       GaussianRational{}},
      {"F3", "1/2 trace_L(A1 J A2)", f3.reduced ? f3.reduced->value : f3.total.value,
       over_i(-j, 2)},
      {"F3", "1/4 trace_L(J[J,A1][J,A2])", f3_direct(a1, a2).value, over_i(-j, 2)},
      {"F3", "naive cyclicity, 1/2 trace(J[A2,A1])", f3.naive_cyclicity.value,
       GaussianRational{}},
  };

  bool all_match = true;
  for (const auto& row : rows) all_match = all_match && row.value == row.expected;

  if (format == Format::Json) {
    json items = json::array();
    for (const auto& row : rows) {
      items.push_back({{"quantity", row.quantity},
                       {"method", row.method},
                       {"value", to_json(row.value)},
                       {"value_display", to_inverse_i_string(row.value)},
                       {"expected", to_json(row.expected)},
                       {"match", row.value == row.expected}});
    }
    out << json{{"schema", kSchemaVersion},
                {"command", "demo"},
                {"j", j},
                {"rows", std::move(items)},
                {"all_match", all_match}}
               .dump(2)
        << '\n';
  } else {
    out << "A1 = cos(" << j << "t), A2 = sin(" << j << "t)\n\n";
    Table table({"quantity", "method", "value", "expected", "match"});
    for (const auto& row : rows) {
      table.add({row.quantity, row.method, to_inverse_i_string(row.value),
                 to_inverse_i_string(row.expected), row.value == row.expected ? "yes" : "NO"});
    }
    table.print(out);
  }
  if (!all_match) {
    err << "error: demo values differ from the expected ones\n";
    return kExitFailure;
  }
  return kExitOk;
}

int run_verify(Index max_j, Format format, std::ostream& out, std::ostream& err) {
  if (max_j < 1) {
    err << "error: --max-j must be a positive integer\n";
    return kExitUsage;
  }
  std::vector<std::future<VerifyRow>> pending;
  for (Index j = 1; j <= max_j; ++j) pending.push_back(std::async(std::launch::async, verify_one, j));
  std::vector<VerifyRow> rows;
  for (auto& f : pending) rows.push_back(f.get());

  const auto passed = std::count_if(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.pass; });
  if (format == Format::Json) {
    json results = json::array();
    for (const auto& row : rows) {
      results.push_back({{"j", row.j},
                         {"f1", to_json(row.report.f1.value)},
                         {"f2", to_json(row.report.f2.value)},
                         {"f3_direct", to_json(row.report.f3_direct.value)},
                         {"closed_form", to_json(row.report.closed_form)},
                         {"expected", to_json(row.expected)},
                         {"pass", row.pass}});
    }
    out << json{{"schema", kSchemaVersion},
                {"command", "verify"},
                {"max_j", max_j},
                {"passed", passed},
                {"total", static_cast<Index>(rows.size())},
                {"results", std::move(results)}}
               .dump(2)
        << '\n';
  } else {
    Table table({"j", "F1", "F2", "F3", "closed form", "expected", "pass"});
    for (const auto& row : rows) {
      const auto& r = row.report;
      table.add({std::to_string(row.j), describe(r.f1), describe(r.f2), describe(r.f3_direct),
                 to_inverse_i_string(r.closed_form), to_inverse_i_string(row.expected),
                 row.pass ? "yes" : "NO"});
    }
    table.print(out);
    out << '\n' << passed << "/" << rows.size() << " pass\n";
  }
  if (passed != static_cast<std::ptrdiff_t>(rows.size())) {
    for (const auto& row : rows) {
      if (!row.pass) err << "verify failed at j = " << row.j << '\n';
    }
    return kExitFailure;
  }
  return kExitOk;
}

int run_deltasum(const std::string& expr_name, Index j, const std::string& scheme_name,
                 Format format, std::ostream& out, std::ostream& err) {
  const auto scheme = scheme_from_string(scheme_name);
  if (!scheme) {
    err << "error: unknown scheme '" << scheme_name << "'\n";
    return kExitUsage;
  }
  if (j < 1) {
    err << "error: --j must be a positive integer\n";
    return kExitUsage;
  }
  const auto expr = named_expr(expr_name, j);
  if (!expr) {
    err << "error: unknown expression '" << expr_name << "'\n";
    return kExitUsage;
  }
  AffineLimit limit;
  try {
    limit = evaluate(*expr, *scheme);
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  if (format == Format::Json) {
    out << affine_limit_document(expr_name, j, *scheme, *expr, limit).dump(2) << '\n';
  } else {
    out << expr_name << " (j = " << j << ") under " << to_string(*scheme) << "\n\n";
    Table terms({"coeff", "n range", "m range", "delta(a n + b m + c)"});
    auto bound = [](const std::optional<Index>& b, const char* inf) {
      return b ? std::to_string(*b) : std::string(inf);
    };
    for (const auto& t : expr->terms) {
      terms.add({to_inverse_i_string(t.coeff()),
                 "[" + bound(t.n_range().lo, "-inf") + ", " + bound(t.n_range().hi, "inf") + "]",
                 "[" + bound(t.m_range().lo, "-inf") + ", " + bound(t.m_range().hi, "inf") + "]",
                 "a=" + std::to_string(t.delta().a) + " b=" + std::to_string(t.delta().b) +
                     " c=" + std::to_string(t.delta().c)});
    }
    terms.print(out);
    out << "\nslope         " << to_string(limit.slope) << "\nvalue         "
        << to_inverse_i_string(limit.value) << "  (re " << to_string(limit.value.re())
        << ", im " << to_string(limit.value.im()) << ")\nstabilizes_at " << limit.stabilizes_at
        << '\n';
  }
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Lie algebra cocycle and regularized trace calculator", "restricted-trace"};
  app.require_subcommand(1);

  std::string format_name = "table";
  const std::vector<std::string> formats = {"table", "json"};

  std::string u_text, v_text;
  auto* compute = app.add_subcommand("compute", "Evaluate all cocycle formulas for a pair u, v");
  compute->add_option("--u", u_text, "First symbol, e.g. \"cos(3t)\"")->required();
  compute->add_option("--v", v_text, "Second symbol, e.g. \"sin(3t)\"")->required();
  compute->add_option("--format", format_name)->check(CLI::IsMember(formats));

  Index demo_j = 0;
  auto* demo = app.add_subcommand("demo", "Walk through the cos(jt), sin(jt) example");
  demo->add_option("--j", demo_j, "Positive harmonic")->required()->check(CLI::PositiveNumber);
  demo->add_option("--format", format_name)->check(CLI::IsMember(formats));

  Index max_j = 0;
  auto* verify = app.add_subcommand("verify", "Check F1 = F2 = F3 for j = 1..max-j");
  verify->add_option("--max-j", max_j)->required()->check(CLI::PositiveNumber);
  verify->add_option("--format", format_name)->check(CLI::IsMember(formats));

  std::string expr_name, scheme_name;
  Index ds_j = 0;
  auto* deltasum = app.add_subcommand("deltasum", "Evaluate a delta double sum under a cutoff");
  deltasum->add_option("--expr", expr_name)->required()->check(
      CLI::IsMember({"f2", "a1a2", "a1ja2"}));
  deltasum->add_option("--j", ds_j)->required()->check(CLI::PositiveNumber);
  deltasum->add_option("--scheme", scheme_name)->required()->check(
      CLI::IsMember({"cutoff-n", "cutoff-m", "square"}));
  deltasum->add_option("--format", format_name)->check(CLI::IsMember(formats));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Format format = format_name == "json" ? Format::Json : Format::Table;
  if (*compute) return run_compute(u_text, v_text, format, out, err);
  if (*demo) return run_demo(demo_j, format, out, err);
  if (*verify) return run_verify(max_j, format, out, err);
  return run_deltasum(expr_name, ds_j, scheme_name, format, out, err);
}

}  // namespace restricted_trace::cli
