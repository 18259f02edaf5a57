#pragma once

#include "divisor_series/newton.hpp"
#include "divisor_series/order.hpp"
#include "divisor_series/poincare.hpp"
#include "divisor_series/resolution.hpp"
#include "divisor_series/series.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace divisor_series {

using Json = nlohmann::json;

inline constexpr const char* kSchemaTag = "divisor-series/1";
inline constexpr const char* kToolVersion = "0.1.0";

// One curve, given as exactly one of: a polynomial (monomial list), a
// resolution graph, or explicit branch groups.
struct CurveInput {
    enum class Kind { polynomial, resolution_graph, branch_groups };
    Kind kind = Kind::polynomial;
    LaurentPoly polynomial;
    ResolutionGraph graph;
    std::vector<BranchGroup> groups;
    Json echo; // original document, replayed into every result
};

CurveInput parse_curve_input(const Json& doc);
CurveInput load_curve_input(const std::string& path);

// [{"exp":[kx,ky],"coef":"<rational>"}, ...]
LaurentPoly parse_polynomial_terms(const Json& terms);
Json polynomial_to_json(const LaurentPoly& p);

Json facet_to_json(const Facet& f);
Json diagram_to_json(const NewtonDiagram& d);
Json rays_to_json(const std::vector<Ray>& rays);
Json int_matrix_to_json(const IntMatrix& m, bool as_strings);
Json graph_to_json(const ResolutionGraph& g);
Json product_form_to_json(const ProductForm& form);
Json series_to_json(const TruncatedSeries& s);
Json order_value_to_json(const OrderValue& v);
Json branch_to_json(const Branch& b);
Json groups_to_json(const std::vector<BranchGroup>& groups);

// canonical rendering: sorted keys, 2-space indent, trailing newline
std::string dump_canonical(const Json& doc);

} // namespace divisor_series
