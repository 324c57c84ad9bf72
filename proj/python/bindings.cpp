#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "confcheck/critical_pairs.hpp"
#include "confcheck/parser.hpp"
#include "confcheck/rewrite.hpp"

namespace py = pybind11;
using namespace confcheck;

namespace {

// Certificate terms and the helper entry points below parse terms against
// the TRS's variable names plus the canonical x<digits> namespace.
Term parse_term_for(const Trs& trs, const std::string& text) {
    std::set<std::string> variables = trs.variable_names();
    return parse_term(text, variables);
}

}  // namespace

PYBIND11_MODULE(_confcheck, m) {
    m.doc() = "Checker for confluence and non-confluence certificates of first-order TRSs";
    m.attr("__version__") = "0.1.0";

    py::register_exception<ParseError>(m, "CertificateParseError", PyExc_ValueError);

    py::class_<Trs>(m, "Trs")
        .def_property_readonly("rule_count", [](const Trs& trs) { return trs.rules.size(); })
        .def_property_readonly("rules",
                               [](const Trs& trs) {
                                   std::vector<std::string> out;
                                   for (const Rule& rule : trs.rules)
                                       out.push_back(rule.to_string());
                                   return out;
                               })
        .def("__str__", &print_trs)
        .def("__repr__", [](const Trs& trs) {
            return "<Trs with " + std::to_string(trs.rules.size()) + " rules>";
        });

    py::class_<Certificate>(m, "Certificate")
        .def("__str__", &print_certificate)
        .def("__repr__", [](const Certificate& cert) {
            return "<Certificate " + print_certificate(cert) + ">";
        });

    py::class_<Verdict>(m, "Verdict")
        .def_readonly("certified", &Verdict::certified)
        .def_readonly("message", &Verdict::message)
        .def("__bool__", [](const Verdict& v) { return v.certified; })
        .def("__str__", &Verdict::verdict_line)
        .def("__repr__", [](const Verdict& v) { return "<Verdict " + v.verdict_line() + ">"; });

    m.def("parse_trs", [](const std::string& text) { return parse_trs(text); },
          py::arg("text"), "Parse a TRS in the (VAR ...) (RULES ...) format.");
    m.def("parse_certificate",
          [](const std::string& text) { return parse_certificate(text); }, py::arg("text"),
          "Parse an s-expression certificate.");
    m.def("check_certificate", &check_certificate, py::arg("trs"), py::arg("certificate"),
          "Check a certificate against a TRS; returns a Verdict.");

    m.def(
        "critical_pairs",
        [](const Trs& trs, bool nontrivial_only) {
            std::vector<std::pair<std::string, std::string>> out;
            for (const CriticalPair& cp : critical_pairs(trs, nontrivial_only))
                out.emplace_back(cp.left.to_string(), cp.right.to_string());
            return out;
        },
        py::arg("trs"), py::arg("nontrivial_only") = true,
        "Critical pairs as (left, right) strings under the canonical renaming.");

    m.def(
        "variable_conditions",
        [](const Trs& trs) {
            VariableConditions vc = check_variable_conditions(trs);
            return std::make_pair(vc.vclhs, vc.vcsubset);
        },
        py::arg("trs"), "Returns (vclhs, vcsubset).");

    m.def(
        "successors",
        [](const Trs& trs, const std::string& term) {
            std::vector<std::string> out;
            for (const Term& t : successors(trs, parse_term_for(trs, term)))
                out.push_back(t.to_string());
            return out;
        },
        py::arg("trs"), py::arg("term"), "One-step reducts of a term, as strings.");

    m.def(
        "normalize",
        [](const Trs& trs, const std::string& term, std::size_t budget) -> py::object {
            std::optional<Term> nf = normalize(trs, parse_term_for(trs, term), budget);
            if (!nf) return py::none();
            return py::str(nf->to_string());
        },
        py::arg("trs"), py::arg("term"), py::arg("step_budget") = 10000,
        "Leftmost-innermost normal form within the step budget, or None.");
}
