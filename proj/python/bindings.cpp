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

// Python bindings. Structured results cross the boundary as dictionaries with
// the same layout as the command-line JSON, so both front ends share one format.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "restricted_trace/cli.hpp"
#include "restricted_trace/cocycle.hpp"
#include "restricted_trace/json_io.hpp"
#include "restricted_trace/parser.hpp"

namespace py = pybind11;
using namespace restricted_trace;

namespace {

py::object to_python(const nlohmann::json& doc) {
  return py::module_::import("json").attr("loads")(doc.dump());
}

Side side_from_string(const std::string& name) {
  if (name == "plus" || name == "+") return Side::Plus;
  if (name == "minus" || name == "-") return Side::Minus;
  throw py::value_error("side must be 'plus' or 'minus', got '" + name + "'");
}

TrigPoly symbol_from(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return parse(obj.cast<std::string>());
  return obj.cast<TrigPoly>();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact regularized traces and cocycle formulas for Toeplitz operators";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DecompositionUnavailable>(m, "DecompositionUnavailable",
                                                   PyExc_ValueError);
  py::register_exception<UnboundedInnerSum>(m, "UnboundedInnerSum", PyExc_ArithmeticError);
  py::register_exception<NonAffineCount>(m, "NonAffineCount", PyExc_ArithmeticError);

  py::class_<GaussianRational>(m, "GaussianRational")
      .def(py::init([](const std::string& re, const std::string& im) {
             return GaussianRational::from_strings(re, im);
           }),
           py::arg("re") = "0", py::arg("im") = "0")
      .def(py::init<long>())
      .def_static("i", &GaussianRational::i)
      .def_property_readonly("re", [](const GaussianRational& z) { return to_string(z.re()); })
      .def_property_readonly("im", [](const GaussianRational& z) { return to_string(z.im()); })
      .def("is_zero", &GaussianRational::is_zero)
      .def("conj", &GaussianRational::conj)
      .def("display", [](const GaussianRational& z) { return to_inverse_i_string(z); },
           "Inverse-i notation, e.g. -3/2i for 3i/2")
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", [](const GaussianRational& z) { return to_string(z); })
      .def("__repr__",
           [](const GaussianRational& z) { return "GaussianRational('" + to_string(z) + "')"; });
  py::implicitly_convertible<long, GaussianRational>();

  py::class_<TrigPoly>(m, "TrigPoly")
      .def(py::init<>())
      .def_static("constant", &TrigPoly::constant)
      .def_static("harmonic", &TrigPoly::harmonic)
      .def_static("cosine", &TrigPoly::cosine)
      .def_static("sine", &TrigPoly::sine)
      .def("coefficients", [](const TrigPoly& p) { return p.coefficients(); })
      .def("coefficient", &TrigPoly::coefficient)
      .def("degree", &TrigPoly::degree)
      .def("is_zero", &TrigPoly::is_zero)
      .def("mean", [](const TrigPoly& p) { return mean(p); })
      .def("derivative", [](const TrigPoly& p) { return derivative(p); })
      .def("__add__", [](const TrigPoly& a, const TrigPoly& b) { return add(a, b); })
      .def("__sub__", [](const TrigPoly& a, const TrigPoly& b) { return subtract(a, b); })
      .def("__mul__", [](const TrigPoly& a, const TrigPoly& b) { return multiply(a, b); })
      .def("__mul__", [](const TrigPoly& a, const GaussianRational& c) { return scale(c, a); })
      .def("__rmul__", [](const TrigPoly& a, const GaussianRational& c) { return scale(c, a); })
      .def(py::self == py::self)
      .def("__str__", [](const TrigPoly& p) { return to_text(p); })
      .def("__repr__", [](const TrigPoly& p) { return "TrigPoly('" + to_text(p) + "')"; });

  m.def("parse", [](const std::string& text) { return parse(text); }, py::arg("text"),
        "Parse a trigonometric polynomial such as 'cos(3t) + 1/2 i*e(-2)'");

  py::class_<BandedOperator>(m, "BandedOperator")
      .def_static("identity", &BandedOperator::identity)
      .def_static("zero", &BandedOperator::zero)
      .def("entry", [](const BandedOperator& a, Index n, Index k) { return entry(a, n, k); })
      .def("bandwidth", &BandedOperator::bandwidth)
      .def("is_zero", &BandedOperator::is_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(GaussianRational() * py::self)
      .def(py::self == py::self);

  m.def("mult_op", [](const py::object& u) { return mult_op(symbol_from(u)); }, py::arg("u"));
  m.def("projector", [](const std::string& side) { return projector(side_from_string(side)); },
        py::arg("side"));
  m.def("j_op", &j_op);
  m.def("commutator", &commutator);
  m.def("block",
        [](const BandedOperator& a, const std::string& row, const std::string& col) {
          return block(a, side_from_string(row), side_from_string(col));
        },
        py::arg("a"), py::arg("row"), py::arg("col"));
  m.def("entry", [](const BandedOperator& a, Index n, Index k) { return entry(a, n, k); });
  m.def("hs_norm_sq",
        [](const BandedOperator& a) -> std::optional<std::string> {
          const auto norm = hs_norm_sq(a);
          if (!norm) return std::nullopt;
          return to_string(*norm);
        },
        "Squared Hilbert-Schmidt norm as a rational string, or None when infinite");
  m.def("dense_truncate",
        [](const BandedOperator& a, Index radius) { return to_python(to_json(dense_truncate(a, radius))); });

  m.def("trace_symmetric", [](const BandedOperator& a) { return to_python(to_json(trace_symmetric(a))); });
  m.def("f1", [](const BandedOperator& a1, const BandedOperator& a2) { return to_python(to_json(f1(a1, a2))); });
  m.def("f2", [](const BandedOperator& a1, const BandedOperator& a2) { return to_python(to_json(f2(a1, a2))); });
  m.def("f3_direct",
        [](const BandedOperator& a1, const BandedOperator& a2) { return to_python(to_json(f3_direct(a1, a2))); });
  m.def("f3_decomposed", [](const BandedOperator& a1, const BandedOperator& a2) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& named : f3_decomposed(a1, a2).flatten()) out[named.name] = to_json(named.result);
    return to_python(out);
  });
  m.def("closed_form",
        [](const py::object& u, const py::object& v) { return closed_form(symbol_from(u), symbol_from(v)); },
        py::arg("u"), py::arg("v"));
  m.def("report",
        [](const py::object& u, const py::object& v) { return to_python(to_json(report(symbol_from(u), symbol_from(v)))); },
        py::arg("u"), py::arg("v"), "All cocycle formulas for the pair, as the compute JSON document");

  m.def("deltasum",
        [](const std::string& expr_name, Index j, const std::string& scheme_name) {
          const auto scheme = scheme_from_string(scheme_name);
          if (!scheme) throw py::value_error("unknown scheme '" + scheme_name + "'");
          const auto expr = named_expr(expr_name, j);
          if (!expr) throw py::value_error("unknown expression '" + expr_name + "'");
          return to_python(affine_limit_document(expr_name, j, *scheme, *expr, evaluate(*expr, *scheme)));
        },
        py::arg("expr"), py::arg("j"), py::arg("scheme"));

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          int code;
          {
            py::gil_scoped_release release;
            code = cli::run(args, out, err);
          }
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command-line front end in process; returns (exit code, stdout, stderr)");
}
