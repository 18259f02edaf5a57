// divisor-series: Poincare series of generalized divisorial filtrations on
// plane curve singularities, with an independent jet-space cross-check.
//
// Exit codes: 0 success/agreement, 1 mathematical mismatch, 2 invalid input,
// 3 scope error (irrational Puiseux roots, insufficient truncation).

#include "divisor_series/errors.hpp"
#include "divisor_series/pipeline.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace ds = divisor_series;

namespace {

ds::Exp2 parse_normal(const std::string& text) {
    std::string trimmed = text;
    if (!trimmed.empty() && trimmed.front() == '(') trimmed.erase(trimmed.begin());
    if (!trimmed.empty() && trimmed.back() == ')') trimmed.pop_back();
    auto comma = trimmed.find(',');
    if (comma == std::string::npos)
        throw ds::invalid_input_error("facet normal must look like \"a1,a2\"");
    try {
        return {std::stoll(trimmed.substr(0, comma)), std::stoll(trimmed.substr(comma + 1))};
    } catch (const std::exception&) {
        throw ds::invalid_input_error("facet normal must look like \"a1,a2\"");
    }
}

ds::LaurentPoly parse_poly_arg(const std::string& text) {
    ds::Json j;
    try {
        j = ds::Json::parse(text);
    } catch (const ds::Json::parse_error& e) {
        throw ds::invalid_input_error(std::string("--g: JSON parse error: ") + e.what());
    }
    return ds::parse_polynomial_terms(j);
}

int emit(const ds::Json& doc, const std::string& format) {
    if (format == "text")
        std::cout << ds::render_text(doc);
    else
        std::cout << ds::dump_canonical(doc);
    return ds::exit_code_for(doc);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Poincare series of generalized divisorial filtrations on plane curve "
                 "singularities (closed product forms and a jet-space oracle)"};
    app.require_subcommand(1);
    app.footer("Exit codes: 0 success/agreement, 1 mismatch, 2 invalid input, 3 scope error.\n"
               "DIVISOR_SERIES_THREADS caps oracle parallelism.");

    std::string input_path;
    std::string format = "json";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--input", input_path, "curve description (JSON file)")->required();
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "text"}))
            ->capture_default_str();
    };

    CLI::App* cmd_facets =
        app.add_subcommand("facets", "Newton diagram facet table and nondegeneracy verdict");
    add_common(cmd_facets);

    long long degree = -1;
    std::string method = "compare";
    bool emit_tests = false;
    CLI::App* cmd_poincare = app.add_subcommand(
        "poincare", "Poincare series: closed product forms, expansions, jet-space oracle");
    add_common(cmd_poincare);
    cmd_poincare->add_option("--degree", degree,
                             "box bound per variable (default 12 for one index, 6 otherwise)");
    cmd_poincare->add_option("--method", method, "theorem1 | corollary | ijm | oracle | compare")
        ->check(CLI::IsMember({"theorem1", "corollary", "ijm", "oracle", "compare"}))
        ->capture_default_str();
    cmd_poincare->add_flag("--emit-tests", emit_tests,
                           "append a frozen fixture block for regression suites");

    std::string g_text;
    std::string facet_text;
    int group_index = 0;
    long long bound = 32;
    CLI::App* cmd_order =
        app.add_subcommand("order", "order of g along a facet divisor or branch group");
    add_common(cmd_order);
    cmd_order->add_option("--g", g_text, "polynomial g as a JSON monomial list")->required();
    cmd_order->add_option("--facet", facet_text, "facet normal \"a1,a2\" (polynomial input)");
    cmd_order->add_option("--group", group_index, "branch group index, 1-based (branch input)");
    cmd_order->add_option("--bound", bound, "reduction bound")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        ds::CurveInput input = ds::load_curve_input(input_path);
        if (app.got_subcommand(cmd_facets)) return emit(ds::run_facets(input), format);
        if (app.got_subcommand(cmd_poincare)) {
            ds::PoincareOptions options;
            options.degree = degree;
            options.method = method;
            options.emit_tests = emit_tests;
            return emit(ds::run_poincare(input, options), format);
        }
        ds::OrderQuery query;
        query.g = parse_poly_arg(g_text);
        query.bound = bound;
        if (!facet_text.empty()) query.facet_normal = parse_normal(facet_text);
        if (group_index > 0) query.group_index = group_index;
        return emit(ds::run_order(input, query), format);
    } catch (const ds::scope_error& e) {
        std::cerr << "scope error: " << e.what() << "\n";
        return 3;
    } catch (const ds::invalid_input_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
