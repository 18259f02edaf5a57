#pragma once

#include "divisor_series/io.hpp"

#include <optional>
#include <string>

namespace divisor_series {

// Orchestration shared by the CLI and the Python bindings.  Every entry
// point takes a parsed CurveInput and returns a canonical result document.

struct PoincareOptions {
    long long degree = -1;           // -1: default by arity (12 for r=1, 6 otherwise)
    std::string method = "compare";  // theorem1 | corollary | ijm | oracle | compare
    bool emit_tests = false;         // append a frozen fixture block
};

struct OrderQuery {
    LaurentPoly g;
    std::optional<Exp2> facet_normal; // polynomial input: facet selected by normal
    std::optional<int> group_index;   // branch input: group selected by index
    long long bound = 32;
};

Json run_facets(const CurveInput& input);
Json run_poincare(const CurveInput& input, const PoincareOptions& options);
Json run_order(const CurveInput& input, const OrderQuery& query);

// Plain-text rendering of a result document (--format text).
std::string render_text(const Json& doc);

// 0 for agreement/success, 1 when a comparison found a mismatch, 2 when the
// document itself marks the input as rejected (degenerate curve).
int exit_code_for(const Json& doc);

long long default_degree(int arity);

} // namespace divisor_series
