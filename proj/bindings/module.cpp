#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "motivic/error.hpp"
#include "motivic/expr.hpp"
#include "motivic/matrix.hpp"
#include "motivic/product.hpp"
#include "motivic/seq.hpp"
#include "motivic/table.hpp"
#include "motivic/verify.hpp"

namespace py = pybind11;
using namespace motivic;

namespace {

EvalProfile profile_from(const std::string& name) {
    if (name == "generic") return EvalProfile::generic;
    if (name == "rho-zero" || name == "rho_zero") return EvalProfile::rho_zero;
    if (name == "classical") return EvalProfile::classical;
    throw Error("unknown profile '" + name + "' (use generic, rho-zero or classical)");
}

Format format_from(const std::string& name) {
    if (name == "text") return Format::text;
    if (name == "json") return Format::json;
    if (name == "latex") return Format::latex;
    throw Error("unknown format '" + name + "' (use text, json or latex)");
}

struct PyElement {
    OpElement value;

    std::string text() const { return print(value, Format::text); }
    std::string to(const std::string& format) const { return print(value, format_from(format)); }

    std::optional<std::pair<std::int64_t, std::int64_t>> degree() const {
        auto d = bidegree(value);
        if (!d) return std::nullopt;
        return std::make_pair(d->p, d->q);
    }

    PyElement specialize(const std::string& profile) const {
        return {eval_element(value, profile_from(profile))};
    }
};

PyElement make_element(const std::string& text) { return {eval_text(text)}; }

Seq seq_from_list(const std::vector<Nat>& entries) { return Seq(entries); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact products in the mod-2 motivic Steenrod algebra, Milnor basis";

    py::register_exception<Error>(m, "AlgebraError", PyExc_RuntimeError);
    py::register_exception<SyntaxError>(m, "ExpressionSyntaxError", PyExc_ValueError);

    py::class_<PyElement>(m, "Element")
        .def(py::init([](const std::string& text) { return make_element(text); }), py::arg("text"),
             "parse and evaluate an expression such as 'Q(1)*tau*Q(0,1)'")
        .def("__repr__", &PyElement::text)
        .def("__str__", &PyElement::text)
        .def(
            "__mul__",
            [](const PyElement& a, const PyElement& b) {
                return PyElement{element_mul(a.value, b.value)};
            },
            py::is_operator())
        .def(
            "__add__",
            [](const PyElement& a, const PyElement& b) { return PyElement{a.value + b.value}; },
            py::is_operator())
        .def(
            "__eq__",
            [](const PyElement& a, const PyElement& b) { return a.value == b.value; },
            py::is_operator())
        .def("__bool__", [](const PyElement& a) { return !a.value.is_zero(); })
        .def("is_zero", [](const PyElement& a) { return a.value.is_zero(); })
        .def("term_count", [](const PyElement& a) { return a.value.term_count(); })
        .def("to", &PyElement::to, py::arg("format"),
             "render as 'text', 'json' or 'latex'")
        .def("bidegree", &PyElement::degree,
             "(p, q) when homogeneous, None otherwise")
        .def("specialize", &PyElement::specialize, py::arg("profile"),
             "evaluate coefficients under 'generic', 'rho-zero' or 'classical'");

    m.def("element", &make_element, py::arg("text"),
          "parse and evaluate an expression to an Element");
    m.def("from_json", [](const std::string& text) { return PyElement{op_from_json(text)}; },
          py::arg("text"), "rebuild an Element from its json rendering");
    m.def("q", [](std::size_t i) { return PyElement{q_i(i)}; }, py::arg("i"),
          "the i-th exterior generator Q_i");
    m.def("p", [](const std::vector<Nat>& r1_onward) {
              std::vector<Nat> raw{0};
              raw.insert(raw.end(), r1_onward.begin(), r1_onward.end());
              return PyElement{p_of(Seq(raw))};
          },
          py::arg("exponents"), "P(r1, r2, ...); exponents start at index 1");
    m.def("unit", [] { return PyElement{op_unit()}; });
    m.def("simplify", [](const std::vector<Nat>& s, const std::string& format) {
              return print(simplify_tau(seq_from_list(s)), format_from(format));
          },
          py::arg("tau_exponents"), py::arg("format") = "text",
          "rewrite tau(S) as a sum of basis monomials");
    m.def("coproduct", [](const std::string& basis, const std::string& format) {
              OpBasis b = parse_basis(basis);
              return print(coproduct_mono_closed(b.e(), b.r()), format_from(format));
          },
          py::arg("basis"), py::arg("format") = "text",
          "coproduct of the dual monomial named by a basis expression like 'Q1' or 'P(2)'");
    m.def("verify", [](const std::string& suite, std::int64_t max_degree) {
              std::vector<py::dict> out;
              for (const SuiteResult& r : run_suites(suite, max_degree)) {
                  py::dict d;
                  d["suite"] = r.suite;
                  d["checks"] = r.checks;
                  d["passed"] = r.passed;
                  d["counterexample"] = r.counterexample;
                  out.push_back(std::move(d));
              }
              return out;
          },
          py::arg("suite") = "all", py::arg("max_degree") = 12,
          "run the verification suites; returns one dict per suite");
}
