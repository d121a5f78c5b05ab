#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "skewcal/deffile.hpp"
#include "skewcal/oplusr.hpp"
#include "skewcal/parser.hpp"
#include "skewcal/poissonization.hpp"
#include "skewcal/registry.hpp"
#include "skewcal/suites.hpp"

namespace py = pybind11;
using namespace skewcal;

namespace {

Expr parse_or_value_error(const std::string& text, const ChartPtr& chart) {
  ExprParseResult r = parse_expr(text, chart);
  if (!r.ok()) {
    std::ostringstream os;
    os << r.pos.line << ":" << r.pos.col << ": " << r.message;
    throw py::value_error(os.str());
  }
  return *r.value;
}

DefinitionFile parse_def_or_value_error(const std::string& text) {
  DefParseResult r = parse_definition(text);
  if (!r.ok()) {
    std::ostringstream os;
    for (size_t i = 0; i < r.diagnostics.size(); ++i)
      os << (i ? "\n" : "") << r.diagnostics[i].str();
    throw py::value_error(os.str());
  }
  return *r.file;
}

py::dict report_to_dict(const CheckReport& rep) {
  py::dict d;
  d["suite"] = rep.suite;
  py::list checks;
  for (const auto& c : rep.checks) {
    py::dict jc;
    jc["name"] = c.name;
    jc["verdict"] = c.verdict;
    jc["paper_ref"] = c.paper_ref;
    jc["residual_nonzero_entries"] = c.residual_nonzero_entries;
    jc["max_abs_sample"] = c.max_abs_sample;
    if (!c.reason.empty()) jc["reason"] = c.reason;
    checks.append(jc);
  }
  d["checks"] = checks;
  d["seed"] = rep.seed;
  d["elapsed_ms"] = rep.elapsed_ms;
  return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact calculus for skew, Lie, and Jacobi algebroid structures";

  py::class_<Expr>(m, "Expr")
      .def_static(
          "parse",
          [](const std::string& text, const std::vector<std::string>& coords) {
            return parse_or_value_error(text, make_chart(coords));
          },
          py::arg("text"), py::arg("coords"),
          "Parse an expression over a chart given by coordinate names")
      .def_property_readonly(
          "coords",
          [](const Expr& e) { return e.chart()->names(); })
      .def("diff",
           [](const Expr& e, const std::string& coord) { return e.diff(coord); },
           py::arg("coord"))
      .def("eval",
           [](const Expr& e, const std::vector<double>& point) {
             return e.eval_double(point);
           },
           py::arg("point"), "Evaluate at a point, one value per coordinate")
      .def("is_zero", &Expr::is_zero)
      .def("term_count", &Expr::term_count)
      .def("__str__", &Expr::str)
      .def("__repr__",
           [](const Expr& e) { return "Expr(" + e.str() + ")"; })
      .def("__eq__", [](const Expr& a, const Expr& b) { return a == b; },
           py::is_operator())
      .def("__add__", [](const Expr& a, const Expr& b) { return a + b; })
      .def("__sub__", [](const Expr& a, const Expr& b) { return a - b; })
      .def("__mul__", [](const Expr& a, const Expr& b) { return a * b; })
      .def("__neg__", [](const Expr& a) { return a * Rat(-1); })
      .def("__add__",
           [](const Expr& a, long v) { return a + Expr(a.chart(), v); })
      .def("__radd__",
           [](const Expr& a, long v) { return Expr(a.chart(), v) + a; })
      .def("__sub__",
           [](const Expr& a, long v) { return a - Expr(a.chart(), v); })
      .def("__rsub__",
           [](const Expr& a, long v) { return Expr(a.chart(), v) - a; })
      .def("__mul__", [](const Expr& a, long v) { return a * Rat(v); })
      .def("__rmul__", [](const Expr& a, long v) { return a * Rat(v); })
      .def("__pow__", [](const Expr& a, int k) { return a.pow(k); });

  m.def("suite_names", &suite_names, "Names of the verification suites");

  m.def(
      "run_suite",
      [](const std::string& text, const std::string& suite, uint64_t seed,
         bool numeric_fallback, double tol, bool poissonized) {
        DefinitionFile d = parse_def_or_value_error(text);
        SuiteOptions opt;
        opt.seed = seed;
        opt.numeric_fallback = numeric_fallback;
        opt.tol = tol;
        opt.poissonized = poissonized;
        return report_to_dict(run_suite(d, suite, opt));
      },
      py::arg("text"), py::arg("suite"), py::arg("seed") = SuiteOptions{}.seed,
      py::arg("numeric_fallback") = false, py::arg("tol") = 1e-9,
      py::arg("poissonized") = false,
      "Run a verification suite on definition-file text");

  m.def(
      "parse_diagnostics",
      [](const std::string& text) {
        DefParseResult r = parse_definition(text);
        std::vector<std::string> out;
        for (const auto& d : r.diagnostics) out.push_back(d.str());
        return out;
      },
      py::arg("text"),
      "Positioned diagnostics for definition-file text; empty means it parses");

  m.def(
      "canonical",
      [](const std::string& text) {
        return emit_definition(parse_def_or_value_error(text));
      },
      py::arg("text"), "Canonical re-emission of definition-file text");

  m.def(
      "poissonize",
      [](const std::string& text) {
        DefinitionFile d = parse_def_or_value_error(text);
        if (!d.pi) throw py::value_error("no [jacobi] block to poissonize");
        AlgebroidDef alg = effective_algebroid(d);
        DefinitionFile out;
        AlgebroidDef bar =
            bar_realization(alg, effective_phi0(d, alg.rank()), "t");
        out.chart = bar.chart();
        out.algebroid = bar;
        out.phi0 = CoSec(bar.chart(), alg.rank(), 1);
        out.pi = skewcal::poissonize(*d.pi, bar.chart(), "t");
        return emit_definition(out);
      },
      py::arg("text"),
      "One-coordinate extension carrying the exponentially scaled bivector");

  m.def(
      "contactify",
      [](const std::string& text) {
        DefinitionFile d = parse_def_or_value_error(text);
        if (!d.contact_eta) throw py::value_error("no [contact] block");
        AlgebroidDef tm = AlgebroidDef::tangent(d.chart);
        ContactToJacobi ctj = contact_to_jacobi(tm, *d.contact_eta);
        AlgebroidDef ext = build_oplus(tm);
        DefinitionFile out;
        out.chart = d.chart;
        out.algebroid = ext;
        out.phi0 = CoSec::basis(d.chart, ext.rank(), {tm.rank()});
        out.pi = flat_pair(ctj.lambda, MultiVec::from_section(ctj.reeb));
        return emit_definition(out);
      },
      py::arg("text"),
      "Derived bivector/twist pair of a contact form, as definition text");

  m.def("examples", [] {
    py::list out;
    for (const auto& e : builtin_examples()) {
      py::dict d;
      d["name"] = e.name;
      d["description"] = e.description;
      d["default_suite"] = e.default_suite;
      d["expect_pass"] = e.expect_pass;
      out.append(d);
    }
    return out;
  });

  m.def(
      "example_text",
      [](const std::string& name) {
        const RegistryEntry* e = find_example(name);
        if (!e) throw py::key_error(name);
        return e->text;
      },
      py::arg("name"), "Definition text of a built-in example");
}
