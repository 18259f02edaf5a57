#include "divisor_series/pipeline.hpp"

#include "divisor_series/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace divisor_series {

namespace {

Json base_document(const CurveInput& input, const std::string& command) {
    Json doc;
    doc["schema"] = kSchemaTag;
    doc["version"] = kToolVersion;
    doc["command"] = command;
    doc["input"] = input.echo;
    return doc;
}

struct PolynomialAnalysis {
    LaurentPoly f;
    LaurentPoly f_unit;         // monomial factor stripped
    NewtonDiagram diagram;      // of f as given
    NewtonDiagram unit_diagram; // of the stripped polynomial
    std::vector<Exp2> degenerate_facets;

    bool nondegenerate() const { return degenerate_facets.empty(); }
};

PolynomialAnalysis analyze_polynomial(const LaurentPoly& f) {
    PolynomialAnalysis a;
    a.f = f;
    a.diagram = diagram_of(f);
    Exp2 mf = a.diagram.monomial_factor;
    a.f_unit = f * LaurentPoly::monomial({-mf.x, -mf.y}, Rat(1));
    a.unit_diagram = diagram_of(a.f_unit);
    for (const Facet& facet : a.diagram.facets) {
        Dehomogenized deh = dehomogenize(face_part(f, facet), facet);
        if (!deh.poly.is_squarefree()) a.degenerate_facets.push_back(facet.normal);
    }
    return a;
}

std::string normal_string(Exp2 n) {
    return "(" + std::to_string(n.x) + "," + std::to_string(n.y) + ")";
}

void require_nondegenerate(const PolynomialAnalysis& a) {
    if (a.nondegenerate()) return;
    std::string msg = "curve is degenerate on facet";
    if (a.degenerate_facets.size() > 1) msg += "s";
    for (Exp2 n : a.degenerate_facets) msg += " " + normal_string(n);
    throw invalid_input_error(msg);
}

struct ResolutionData {
    std::vector<Ray> rays;
    ResolutionGraph graph;
    MultiplicityMatrix m;
};

ResolutionData resolve_diagram(const NewtonDiagram& diagram) {
    ResolutionData r;
    std::vector<Ray> targets;
    for (const Facet& f : diagram.facets) targets.push_back(f.normal);
    r.rays = subdivide_fan(targets);
    r.graph = chain_graph(r.rays, diagram);
    r.m = multiplicity_matrix(r.graph);
    return r;
}

Json marked_to_json(const ResolutionGraph& graph) {
    Json arr = Json::array();
    int index = 1;
    for (std::size_t pos : graph.marked_positions()) {
        const GraphVertex& v = graph.vertices[pos];
        Json mj;
        mj["index"] = index++;
        mj["vertex"] = v.id;
        mj["s"] = v.marked_s;
        if (v.ray) mj["ray"] = Json::array({v.ray->x, v.ray->y});
        arr.push_back(mj);
    }
    return arr;
}

std::vector<BranchGroup> lift_all_branches(const PolynomialAnalysis& a, long long truncation) {
    std::vector<BranchGroup> groups;
    int index = 1;
    for (const Facet& facet : a.unit_diagram.facets) {
        BranchGroup group;
        group.index = index++;
        group.branches = puiseux_lift(a.f_unit, facet, truncation);
        groups.push_back(std::move(group));
    }
    return groups;
}

const std::vector<std::string> kMethodOrder{"theorem1", "corollary", "ijm", "oracle"};

} // namespace

long long default_degree(int arity) { return arity <= 1 ? 12 : 6; }

Json run_facets(const CurveInput& input) {
    if (input.kind != CurveInput::Kind::polynomial)
        throw invalid_input_error("facets: requires a polynomial input");
    PolynomialAnalysis a = analyze_polynomial(input.polynomial);

    Json doc = base_document(input, "facets");
    doc["facets"] = diagram_to_json(a.diagram)["facets"];
    doc["monomial_factor"] = Json::array({a.diagram.monomial_factor.x, a.diagram.monomial_factor.y});
    doc["nondegenerate"] = a.nondegenerate();
    if (!a.nondegenerate()) {
        Json bad = Json::array();
        for (Exp2 n : a.degenerate_facets) bad.push_back(Json::array({n.x, n.y}));
        doc["degenerate_facets"] = bad;
        doc["rejected"] = true;
    }
    if (a.diagram.facets.empty())
        doc["warning"] = "diagram has no facets (monomial germ); the filtration is empty";
    return doc;
}

Json run_poincare(const CurveInput& input, const PoincareOptions& options) {
    const std::string& method = options.method;
    if (std::find(kMethodOrder.begin(), kMethodOrder.end(), method) == kMethodOrder.end() &&
        method != "compare")
        throw invalid_input_error("poincare: unknown method \"" + method + "\"");
    const bool want_all = method == "compare";
    auto wanted = [&](const std::string& name) { return want_all || method == name; };

    Json doc = base_document(input, "poincare");
    std::map<std::string, ProductForm> forms;
    std::optional<TruncatedSeries> oracle;
    std::vector<std::string> notes;
    long long degree = options.degree;

    if (input.kind == CurveInput::Kind::polynomial) {
        PolynomialAnalysis a = analyze_polynomial(input.polynomial);
        if (a.diagram.facets.empty())
            throw invalid_input_error("poincare: the diagram has no facets (monomial germ)");
        require_nondegenerate(a);
        ResolutionData res = resolve_diagram(a.diagram);
        const int arity = static_cast<int>(a.diagram.facets.size());
        if (degree < 0) degree = default_degree(arity);

        doc["facets"] = diagram_to_json(a.diagram)["facets"];
        doc["monomial_factor"] =
            Json::array({a.diagram.monomial_factor.x, a.diagram.monomial_factor.y});
        doc["nondegenerate"] = true;
        doc["rays"] = rays_to_json(res.rays);
        doc["intersection_matrix"] = int_matrix_to_json(intersection_matrix(res.graph), false);
        doc["multiplicity_matrix"] = int_matrix_to_json(res.m.entries, true);
        doc["marked"] = marked_to_json(res.graph);

        if (wanted("theorem1")) forms.emplace("theorem1", product_formula(res.graph, res.m));
        if (wanted("corollary"))
            forms.emplace("corollary", newton_diagram_formula(a.diagram, res.graph, res.m));
        if (wanted("ijm")) {
            bool all_one = true;
            for (std::size_t pos : res.graph.marked_positions())
                all_one = all_one && res.graph.vertices[pos].marked_s == 1;
            if (all_one)
                forms.emplace("ijm", curve_complement_formula(res.graph, res.m));
            else if (method == "ijm")
                throw invalid_input_error("poincare: method ijm requires every s_i = 1");
            else
                notes.push_back("ijm skipped: some integer length s_i > 1");
        }
        if (wanted("oracle")) {
            try {
                FiltrationBox box;
                box.arity = arity;
                box.bound = degree;
                box.groups = lift_all_branches(a, degree);
                doc["branch_groups"] = groups_to_json(box.groups);
                oracle = oracle_series(box);
            } catch (const scope_error& e) {
                if (method == "oracle") throw;
                notes.push_back(std::string("oracle skipped: ") + e.what());
            }
        }
    } else if (input.kind == CurveInput::Kind::resolution_graph) {
        auto marked = input.graph.marked_positions();
        if (marked.empty())
            throw invalid_input_error("poincare: the resolution graph has no marked vertices");
        if (degree < 0) degree = default_degree(static_cast<int>(marked.size()));
        MultiplicityMatrix m = multiplicity_matrix(input.graph);
        doc["graph"] = graph_to_json(input.graph);
        doc["intersection_matrix"] = int_matrix_to_json(intersection_matrix(input.graph), false);
        doc["multiplicity_matrix"] = int_matrix_to_json(m.entries, true);
        doc["marked"] = marked_to_json(input.graph);

        if (method == "oracle") throw invalid_input_error("poincare: oracle requires branches");
        if (method == "corollary")
            throw invalid_input_error("poincare: corollary requires a polynomial input");
        if (wanted("theorem1")) forms.emplace("theorem1", product_formula(input.graph, m));
        if (wanted("ijm")) {
            bool all_one = true;
            for (std::size_t pos : marked) all_one = all_one && input.graph.vertices[pos].marked_s == 1;
            if (all_one)
                forms.emplace("ijm", curve_complement_formula(input.graph, m));
            else if (method == "ijm")
                throw invalid_input_error("poincare: method ijm requires every s_i = 1");
            else
                notes.push_back("ijm skipped: some integer length s_i > 1");
        }
    } else {
        if (method != "oracle" && method != "compare")
            throw invalid_input_error("poincare: method " + method +
                                      " requires a polynomial or resolution graph input");
        const int arity = static_cast<int>(input.groups.size());
        if (degree < 0) degree = default_degree(arity);
        FiltrationBox box;
        box.arity = arity;
        box.bound = degree;
        box.groups = input.groups;
        doc["branch_groups"] = groups_to_json(box.groups);
        oracle = oracle_series(box);
        if (method == "compare")
            notes.push_back("only the oracle is available for branch input; nothing to cross-check");
    }

    doc["degree"] = degree;
    if (!forms.empty()) {
        Json fj, ej;
        for (const auto& [name, form] : forms) {
            fj[name] = product_form_to_json(form);
            ej[name] = series_to_json(expand(form, degree));
        }
        doc["product_forms"] = fj;
        doc["expansions"] = ej;
    }
    if (oracle) doc["oracle"] = series_to_json(*oracle);
    if (!notes.empty()) doc["notes"] = notes;

    if (want_all) {
        // cross-check every computed series against the first available one
        std::vector<std::pair<std::string, TruncatedSeries>> series;
        for (const std::string& name : kMethodOrder) {
            auto it = forms.find(name);
            if (it != forms.end()) series.emplace_back(name, expand(it->second, degree));
        }
        if (oracle) series.emplace_back("oracle", *oracle);

        Json cmp;
        Json methods = Json::array();
        for (const auto& [name, s] : series) methods.push_back(name);
        cmp["methods"] = methods;
        cmp["first_mismatch"] = nullptr;
        cmp["verdict"] = "agree";
        for (std::size_t i = 1; i < series.size(); ++i) {
            ComparisonReport report = compare_expansions(series[0].second, series[i].second);
            if (!report.agree) {
                cmp["verdict"] = "mismatch";
                Json mm;
                mm["exponent"] = *report.first_mismatch;
                mm[series[0].first] = report.formula_coeff->str();
                mm[series[i].first] = report.oracle_coeff->str();
                cmp["first_mismatch"] = mm;
                break;
            }
        }
        doc["comparison"] = cmp;
        if (series.size() == 1 && input.kind != CurveInput::Kind::branch_groups)
            doc["comparison"]["verdict"] = "agree";
    }

    if (options.emit_tests) {
        Json fixture;
        fixture["schema"] = "divisor-series/fixture/1";
        fixture["input"] = input.echo;
        fixture["degree"] = degree;
        if (doc.contains("expansions")) fixture["expansions"] = doc["expansions"];
        if (oracle) fixture["oracle"] = series_to_json(*oracle);
        doc["fixture"] = fixture;
    }
    return doc;
}

Json run_order(const CurveInput& input, const OrderQuery& query) {
    if (query.g.is_zero()) throw invalid_input_error("order: g must be nonzero");
    Json doc = base_document(input, "order");
    doc["g"] = polynomial_to_json(query.g);
    doc["bound"] = query.bound;

    if (input.kind == CurveInput::Kind::polynomial) {
        if (!query.facet_normal)
            throw invalid_input_error("order: polynomial input needs --facet a1,a2");
        PolynomialAnalysis a = analyze_polynomial(input.polynomial);
        const Facet* facet = find_facet(a.diagram, *query.facet_normal);
        if (!facet)
            throw invalid_input_error("order: no facet with normal " +
                                      normal_string(*query.facet_normal));
        require_nondegenerate(a);

        OrderValue newton = newton_order(query.g, a.f, *facet, query.bound);
        doc["facet"] = Json::array({facet->normal.x, facet->normal.y});
        doc["newton_order"] = order_value_to_json(newton);
        doc["newton_order_text"] = newton.to_string();

        if (query.g.is_polynomial()) {
            try {
                const Facet* unit_facet = find_facet(a.unit_diagram, facet->normal);
                BranchGroup group;
                group.index = 1;
                group.branches = puiseux_lift(a.f_unit, *unit_facet, query.bound);
                OrderValue via_branches = group_order(query.g, group);
                doc["branch_order"] = order_value_to_json(via_branches);
                doc["branch_order_text"] = via_branches.to_string();
                if (newton.is_finite() && via_branches.is_finite())
                    doc["agreement"] = newton == via_branches;
                else
                    doc["agreement"] = nullptr;
            } catch (const scope_error& e) {
                doc["notes"] = Json::array({std::string("branch order skipped: ") + e.what()});
            }
        }
        return doc;
    }

    if (input.kind == CurveInput::Kind::branch_groups) {
        if (!query.group_index) throw invalid_input_error("order: branch input needs --group INDEX");
        int idx = *query.group_index;
        if (idx < 1 || static_cast<std::size_t>(idx) > input.groups.size())
            throw invalid_input_error("order: group index out of range");
        if (!query.g.is_polynomial())
            throw invalid_input_error("order: g must have non-negative exponents for branch orders");
        OrderValue value = group_order(query.g, input.groups[static_cast<std::size_t>(idx - 1)]);
        doc["group"] = idx;
        doc["branch_order"] = order_value_to_json(value);
        doc["branch_order_text"] = value.to_string();
        return doc;
    }

    throw invalid_input_error("order: requires a polynomial or branch input");
}

namespace {

std::string series_text(const Json& sj) {
    // rebuild a TruncatedSeries just for printing
    TruncatedSeries s(sj.at("arity").get<int>(), sj.at("bound").get<long long>());
    for (const Json& term : sj.at("terms"))
        s.add(term[0].get<ExpVec>(), Int(term[1].get<std::string>()));
    return s.to_string();
}

std::string form_text(const Json& fj) {
    if (fj.empty()) return "1";
    ProductForm form(static_cast<int>(fj[0]["m"].size()));
    for (const Json& factor : fj) form.push(factor["m"].get<ExpVec>(), factor["e"].get<long long>());
    return form.to_string();
}

} // namespace

std::string render_text(const Json& doc) {
    std::ostringstream out;
    const std::string command = doc.value("command", "");
    if (command == "facets") {
        const Json& facets = doc["facets"];
        if (facets.empty()) out << "no facets (monomial germ)\n";
        for (const Json& f : facets) {
            out << "facet normal (" << f["normal"][0] << "," << f["normal"][1] << ")"
                << "  constant " << f["constant"] << "  integer length " << f["integer_length"]
                << "  endpoints (" << f["endpoints"][0][0] << "," << f["endpoints"][0][1] << ")-("
                << f["endpoints"][1][0] << "," << f["endpoints"][1][1] << ")\n";
        }
        out << "monomial factor: x^" << doc["monomial_factor"][0] << " y^"
            << doc["monomial_factor"][1] << "\n";
        out << "nondegenerate: " << (doc["nondegenerate"].get<bool>() ? "yes" : "no") << "\n";
        if (doc.contains("warning")) out << "warning: " << doc["warning"].get<std::string>() << "\n";
    } else if (command == "poincare") {
        out << "degree bound: " << doc["degree"] << "\n";
        if (doc.contains("product_forms"))
            for (const auto& [name, fj] : doc["product_forms"].items())
                out << name << ": " << form_text(fj) << "\n";
        if (doc.contains("expansions"))
            for (const auto& [name, sj] : doc["expansions"].items())
                out << name << " expansion: " << series_text(sj) << "\n";
        if (doc.contains("oracle")) out << "oracle: " << series_text(doc["oracle"]) << "\n";
        if (doc.contains("comparison")) {
            out << "comparison: " << doc["comparison"]["verdict"].get<std::string>() << "\n";
            if (!doc["comparison"]["first_mismatch"].is_null())
                out << "first mismatch: " << doc["comparison"]["first_mismatch"].dump() << "\n";
        }
        if (doc.contains("notes"))
            for (const Json& n : doc["notes"]) out << "note: " << n.get<std::string>() << "\n";
    } else if (command == "order") {
        if (doc.contains("facet"))
            out << "facet (" << doc["facet"][0] << "," << doc["facet"][1] << ")\n";
        if (doc.contains("group")) out << "group " << doc["group"] << "\n";
        if (doc.contains("newton_order_text"))
            out << "newton order: " << doc["newton_order_text"].get<std::string>() << "\n";
        if (doc.contains("branch_order_text"))
            out << "branch order: " << doc["branch_order_text"].get<std::string>() << "\n";
        if (doc.contains("agreement")) {
            if (doc["agreement"].is_null())
                out << "agreement: indeterminate (a value hit the bound)\n";
            else
                out << "agreement: " << (doc["agreement"].get<bool>() ? "yes" : "no") << "\n";
        }
        if (doc.contains("notes"))
            for (const Json& n : doc["notes"]) out << "note: " << n.get<std::string>() << "\n";
    } else {
        out << dump_canonical(doc);
    }
    return out.str();
}

int exit_code_for(const Json& doc) {
    if (doc.contains("rejected") && doc["rejected"].is_boolean() && doc["rejected"].get<bool>())
        return 2;
    if (doc.contains("comparison") && doc["comparison"].contains("verdict") &&
        doc["comparison"]["verdict"] == "mismatch")
        return 1;
    return 0;
}

} // namespace divisor_series
