// pybind11 module exposing the main operations over the same JSON documents
// the CLI speaks; see python/divisor_series/__init__.py for the package shim.

#include "divisor_series/errors.hpp"
#include "divisor_series/pipeline.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>

namespace py = pybind11;
namespace ds = divisor_series;

namespace {

ds::Json parse_json(const std::string& text, const char* what) {
    try {
        return ds::Json::parse(text);
    } catch (const ds::Json::parse_error& e) {
        throw ds::invalid_input_error(std::string(what) + ": JSON parse error: " + e.what());
    }
}

ds::CurveInput curve_from(const std::string& curve_json) {
    return ds::parse_curve_input(parse_json(curve_json, "curve"));
}

} // namespace

PYBIND11_MODULE(_divisor_series, m) {
    m.doc() = "Poincare series of generalized divisorial filtrations on plane curve "
              "singularities: Newton diagram facets, order functions, closed product "
              "forms and a jet-space oracle.  All documents are JSON strings in the "
              "divisor-series/1 schema.";

    py::register_exception<ds::invalid_input_error>(m, "InvalidInputError", PyExc_ValueError);
    py::register_exception<ds::scope_error>(m, "ScopeError", PyExc_RuntimeError);

    m.def(
        "facets",
        [](const std::string& curve_json) { return ds::dump_canonical(ds::run_facets(curve_from(curve_json))); },
        py::arg("curve_json"),
        "Facet table and nondegeneracy verdict for a polynomial curve document.");

    m.def(
        "poincare",
        [](const std::string& curve_json, long long degree, const std::string& method) {
            ds::PoincareOptions options;
            options.degree = degree;
            options.method = method;
            return ds::dump_canonical(ds::run_poincare(curve_from(curve_json), options));
        },
        py::arg("curve_json"), py::arg("degree") = -1, py::arg("method") = "compare",
        "Poincare series via the chosen method (theorem1 | corollary | ijm | oracle | compare).");

    m.def(
        "order",
        [](const std::string& curve_json, const std::string& g_json,
           std::optional<std::pair<long long, long long>> facet, std::optional<int> group,
           long long bound) {
            ds::OrderQuery query;
            query.g = ds::parse_polynomial_terms(parse_json(g_json, "g"));
            query.bound = bound;
            if (facet) query.facet_normal = ds::Exp2{facet->first, facet->second};
            if (group) query.group_index = *group;
            return ds::dump_canonical(ds::run_order(curve_from(curve_json), query));
        },
        py::arg("curve_json"), py::arg("g_json"), py::arg("facet") = std::nullopt,
        py::arg("group") = std::nullopt, py::arg("bound") = 32,
        "Order of g along a facet divisor (by normal) or a branch group (by index).");

    m.attr("__version__") = ds::kToolVersion;
}
