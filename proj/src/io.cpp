#include "divisor_series/io.hpp"

#include "divisor_series/errors.hpp"

#include <fstream>

namespace divisor_series {

namespace {

long long require_int(const Json& j, const std::string& what) {
    if (!j.is_number_integer())
        throw invalid_input_error("expected an integer for " + what);
    return j.get<long long>();
}

Rat coefficient_from(const Json& j, const std::string& what) {
    if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw invalid_input_error("expected an integer or rational string for " + what);
}

PowerSeries1 parse_series(const Json& j, long long truncation, const std::string& what) {
    if (!j.is_array()) throw invalid_input_error(what + ": series must be an array of [exp, coef]");
    PowerSeries1 s;
    s.truncation = truncation;
    for (const Json& term : j) {
        if (!term.is_array() || term.size() != 2)
            throw invalid_input_error(what + ": series terms must be [exponent, coefficient]");
        long long e = require_int(term[0], what + " exponent");
        if (e < 0) throw invalid_input_error(what + ": negative series exponent");
        if (e > truncation)
            throw invalid_input_error(what + ": series exponent exceeds the stated truncation");
        s.add(e, coefficient_from(term[1], what + " coefficient"));
    }
    return s;
}

Json series1_to_json(const PowerSeries1& s) {
    Json arr = Json::array();
    for (const auto& [e, c] : s.coeffs) arr.push_back(Json::array({e, format_rational(c)}));
    return arr;
}

} // namespace

LaurentPoly parse_polynomial_terms(const Json& terms) {
    if (!terms.is_array() || terms.empty())
        throw invalid_input_error("polynomial: expected a non-empty array of monomials");
    LaurentPoly p;
    for (const Json& t : terms) {
        if (!t.is_object() || !t.contains("exp") || !t.contains("coef"))
            throw invalid_input_error("polynomial: each monomial needs \"exp\" and \"coef\"");
        const Json& exp = t["exp"];
        if (!exp.is_array() || exp.size() != 2)
            throw invalid_input_error("polynomial: \"exp\" must be [kx, ky]");
        Exp2 e{require_int(exp[0], "exponent"), require_int(exp[1], "exponent")};
        p.add_term(e, coefficient_from(t["coef"], "coefficient"));
    }
    if (p.is_zero()) throw invalid_input_error("polynomial: terms cancel to zero");
    return p;
}

Json polynomial_to_json(const LaurentPoly& p) {
    Json arr = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["exp"] = Json::array({e.x, e.y});
        t["coef"] = format_rational(c);
        arr.push_back(t);
    }
    return arr;
}

CurveInput parse_curve_input(const Json& doc) {
    if (!doc.is_object()) throw invalid_input_error("input: expected a JSON object");
    if (doc.contains("schema") && doc["schema"] != kSchemaTag)
        throw invalid_input_error("input: unsupported schema tag");

    int provided = doc.contains("polynomial") + doc.contains("resolution_graph") +
                   doc.contains("branch_groups");
    if (provided != 1)
        throw invalid_input_error(
            "input: provide exactly one of \"polynomial\", \"resolution_graph\", \"branch_groups\"");

    CurveInput input;
    input.echo = doc;
    if (doc.contains("polynomial")) {
        input.kind = CurveInput::Kind::polynomial;
        input.polynomial = parse_polynomial_terms(doc["polynomial"]);
        if (!input.polynomial.is_polynomial())
            throw invalid_input_error("input: curve polynomial must have non-negative exponents");
        return input;
    }

    if (doc.contains("resolution_graph")) {
        input.kind = CurveInput::Kind::resolution_graph;
        const Json& g = doc["resolution_graph"];
        if (!g.is_object() || !g.contains("vertices"))
            throw invalid_input_error("resolution_graph: expected object with \"vertices\"");
        ResolutionGraph graph;
        for (const Json& vj : g["vertices"]) {
            GraphVertex v;
            v.id = static_cast<int>(require_int(vj.at("id"), "vertex id"));
            v.self_intersection = require_int(vj.at("self_intersection"), "self intersection");
            v.marked_s = vj.contains("marked_s") ? require_int(vj["marked_s"], "marked_s") : 0;
            if (vj.contains("ray")) {
                const Json& r = vj["ray"];
                if (!r.is_array() || r.size() != 2)
                    throw invalid_input_error("resolution_graph: vertex ray must be [a1, a2]");
                v.ray = Ray{require_int(r[0], "ray"), require_int(r[1], "ray")};
            }
            graph.vertices.push_back(v);
        }
        if (g.contains("edges"))
            for (const Json& ej : g["edges"]) {
                if (!ej.is_array() || ej.size() != 2)
                    throw invalid_input_error("resolution_graph: edges must be [id, id] pairs");
                graph.edges.insert({static_cast<int>(require_int(ej[0], "edge")),
                                    static_cast<int>(require_int(ej[1], "edge"))});
            }
        input.graph = validate_graph(std::move(graph));
        return input;
    }

    input.kind = CurveInput::Kind::branch_groups;
    const Json& gj = doc["branch_groups"];
    if (!gj.is_array() || gj.empty())
        throw invalid_input_error("branch_groups: expected a non-empty array");
    long long default_truncation = doc.contains("truncation")
                                       ? require_int(doc["truncation"], "truncation")
                                       : -1;
    int index = 1;
    for (const Json& groupj : gj) {
        if (!groupj.is_object() || !groupj.contains("branches") || !groupj["branches"].is_array() ||
            groupj["branches"].empty())
            throw invalid_input_error("branch_groups: each group needs a non-empty \"branches\" array");
        BranchGroup group;
        group.index = index++;
        for (const Json& bj : groupj["branches"]) {
            long long truncation = default_truncation;
            if (bj.contains("truncation")) truncation = require_int(bj["truncation"], "truncation");
            if (truncation < 1)
                throw invalid_input_error(
                    "branch_groups: each branch needs a positive truncation (per branch or top-level)");
            Branch b;
            b.x = parse_series(bj.at("x"), truncation, "branch x");
            b.y = parse_series(bj.at("y"), truncation, "branch y");
            auto ox = b.x.order(), oy = b.y.order();
            if ((ox && *ox < 1) || (oy && *oy < 1))
                throw invalid_input_error("branch_groups: branch components must vanish at the origin");
            if (!ox && !oy) throw invalid_input_error("branch_groups: branch is identically zero");
            group.branches.push_back(std::move(b));
        }
        for (std::size_t i = 0; i < group.branches.size(); ++i)
            for (std::size_t j = i + 1; j < group.branches.size(); ++j)
                if (group.branches[i].x == group.branches[j].x &&
                    group.branches[i].y == group.branches[j].y)
                    throw invalid_input_error("branch_groups: duplicate branch in one group");
        input.groups.push_back(std::move(group));
    }
    return input;
}

CurveInput load_curve_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input_error("cannot open input file: " + path);
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw invalid_input_error("JSON parse error in " + path + ": " + e.what());
    }
    return parse_curve_input(doc);
}

Json facet_to_json(const Facet& f) {
    Json j;
    j["normal"] = Json::array({f.normal.x, f.normal.y});
    j["constant"] = f.constant;
    j["endpoints"] = Json::array(
        {Json::array({f.first.x, f.first.y}), Json::array({f.second.x, f.second.y})});
    j["integer_length"] = f.integer_length;
    return j;
}

Json diagram_to_json(const NewtonDiagram& d) {
    Json j;
    j["monomial_factor"] = Json::array({d.monomial_factor.x, d.monomial_factor.y});
    Json facets = Json::array();
    for (const Facet& f : d.facets) facets.push_back(facet_to_json(f));
    j["facets"] = facets;
    return j;
}

Json rays_to_json(const std::vector<Ray>& rays) {
    Json arr = Json::array();
    for (Ray r : rays) arr.push_back(Json::array({r.x, r.y}));
    return arr;
}

Json int_matrix_to_json(const IntMatrix& m, bool as_strings) {
    Json rows = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const Int& v : row) {
            if (as_strings)
                r.push_back(v.str());
            else
                r.push_back(v.convert_to<long long>());
        }
        rows.push_back(r);
    }
    return rows;
}

Json graph_to_json(const ResolutionGraph& g) {
    Json j;
    Json vertices = Json::array();
    for (const GraphVertex& v : g.vertices) {
        Json vj;
        vj["id"] = v.id;
        vj["self_intersection"] = v.self_intersection;
        vj["marked_s"] = v.marked_s;
        vj["euler_chi"] = g.chi_of(g.position_of(v.id));
        if (v.ray) vj["ray"] = Json::array({v.ray->x, v.ray->y});
        vertices.push_back(vj);
    }
    j["vertices"] = vertices;
    Json edges = Json::array();
    for (const auto& [a, b] : g.edges) edges.push_back(Json::array({a, b}));
    j["edges"] = edges;
    return j;
}

Json product_form_to_json(const ProductForm& form) {
    Json arr = Json::array();
    for (const auto& [m, e] : form.factors()) {
        Json f;
        f["m"] = m;
        f["e"] = e;
        arr.push_back(f);
    }
    return arr;
}

Json series_to_json(const TruncatedSeries& s) {
    Json j;
    j["arity"] = s.arity();
    j["bound"] = s.bound();
    Json terms = Json::array();
    for (const auto& [e, c] : s.coeffs()) terms.push_back(Json::array({Json(e), c.str()}));
    j["terms"] = terms;
    return j;
}

Json order_value_to_json(const OrderValue& v) {
    Json j;
    switch (v.kind()) {
        case OrderValue::Kind::finite:
            j["kind"] = "finite";
            j["value"] = v.value();
            break;
        case OrderValue::Kind::at_least:
            j["kind"] = "at_least";
            j["bound"] = v.value();
            break;
        case OrderValue::Kind::infinite:
            j["kind"] = "infinite";
            break;
    }
    return j;
}

Json branch_to_json(const Branch& b) {
    Json j;
    j["x"] = series1_to_json(b.x);
    j["y"] = series1_to_json(b.y);
    j["truncation"] = b.truncation();
    return j;
}

Json groups_to_json(const std::vector<BranchGroup>& groups) {
    Json arr = Json::array();
    for (const BranchGroup& g : groups) {
        Json gj;
        gj["index"] = g.index;
        Json branches = Json::array();
        for (const Branch& b : g.branches) branches.push_back(branch_to_json(b));
        gj["branches"] = branches;
        arr.push_back(gj);
    }
    return arr;
}

std::string dump_canonical(const Json& doc) { return doc.dump(2) + "\n"; }

} // namespace divisor_series
