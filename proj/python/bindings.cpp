/**
 * @file bindings.cpp
 * @brief pybind11 module: command dispatch plus a few direct entry points.
 */
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qdual/catalog.hpp"
#include "qdual/cli.hpp"
#include "qdual/drinfeld.hpp"
#include "qdual/errors.hpp"
#include "qdual/hopf.hpp"
#include "qdual/parse.hpp"

#include <sstream>

namespace py = pybind11;
using namespace qdual;

namespace {

py::tuple run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code;
    {
        py::gil_scoped_release release;
        code = dispatch(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
}

const Presentation& algebra(const std::string& name) { return *resolve_algebra(name).presentation; }

}  // namespace

PYBIND11_MODULE(_qdual, m) {
    m.doc() = "Quantum duality computer algebra";

    // Translators are tried newest first, so the base class goes first.
    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<MathError>(m, "MathError", base.ptr());

    m.def("run", &run, py::arg("args"), "Run a CLI command; returns (exit_code, stdout, stderr).");
    m.def("catalog_names", &catalog_names);
    m.def("normalize", [](const std::string& a, const std::string& expr) {
        const Presentation& p = algebra(a);
        return p.render(parse_expression(expr, p));
    }, py::arg("algebra"), py::arg("expr"));
    m.def("delta", [](const std::string& a, const std::string& expr, int n) {
        const Presentation& p = algebra(a);
        return p.render(delta_n(parse_element(expr, p), n, p));
    }, py::arg("algebra"), py::arg("expr"), py::arg("n"));
    m.def("member", [](const std::string& a, const std::string& expr, int max_n) {
        const Presentation& p = algebra(a);
        const MembershipVerdict v = tilde_member(parse_element(expr, p), p, max_n, expr);
        return py::make_tuple(verdict_name(v.verdict), v.witness);
    }, py::arg("algebra"), py::arg("expr"), py::arg("max_n") = 6);
}
