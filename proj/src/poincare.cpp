#include "divisor_series/poincare.hpp"

#include "divisor_series/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>

namespace divisor_series {

namespace {

// DIVISOR_SERIES_THREADS caps worker threads; defaults to the hardware.
std::size_t thread_budget(std::size_t tasks) {
    std::size_t budget = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("DIVISOR_SERIES_THREADS")) {
        char* end = nullptr;
        long parsed = std::strtol(env, &end, 10);
        if (end && *end == '\0' && parsed >= 1) budget = static_cast<std::size_t>(parsed);
    }
    return std::max<std::size_t>(1, std::min(budget, tasks));
}

ExpVec weight_vector(const MultiplicityMatrix& m, const std::vector<std::size_t>& marked,
                     std::size_t sigma) {
    ExpVec w(marked.size());
    for (std::size_t i = 0; i < marked.size(); ++i)
        w[i] = m.entries[sigma][marked[i]].convert_to<long long>();
    return w;
}

} // namespace

JetSpace make_jet_space(long long degree) {
    if (degree < 0) throw invalid_input_error("jet space: negative degree");
    JetSpace jets;
    jets.degree = degree;
    for (long long d = 0; d <= degree; ++d)
        for (long long a = d; a >= 0; --a) jets.basis.push_back({a, d - a});
    std::sort(jets.basis.begin(), jets.basis.end(), [](Exp2 a, Exp2 b) { return GradedLexExp2{}(a, b); });
    return jets;
}

ProductForm product_formula(const ResolutionGraph& graph, const MultiplicityMatrix& m) {
    auto marked = graph.marked_positions();
    if (marked.empty()) throw invalid_input_error("product formula: no marked vertices");
    ProductForm form(static_cast<int>(marked.size()));
    for (std::size_t sigma = 0; sigma < graph.vertices.size(); ++sigma) {
        long long chi = graph.chi_of(sigma);
        if (chi != 0) form.push(weight_vector(m, marked, sigma), -chi);
    }
    for (std::size_t pos : marked) {
        ExpVec w = weight_vector(m, marked, pos);
        for (auto& v : w) v *= graph.vertices[pos].marked_s;
        form.push(w, 1);
    }
    return form;
}

ProductForm curve_complement_formula(const ResolutionGraph& graph, const MultiplicityMatrix& m) {
    auto marked = graph.marked_positions();
    if (marked.empty()) throw invalid_input_error("curve-complement formula: no marked vertices");
    for (std::size_t pos : marked)
        if (graph.vertices[pos].marked_s != 1)
            throw invalid_input_error("curve-complement formula requires every marking s_i = 1");
    ProductForm form(static_cast<int>(marked.size()));
    for (std::size_t sigma = 0; sigma < graph.vertices.size(); ++sigma) {
        long long chi = graph.chi_of(sigma) - graph.vertices[sigma].marked_s;
        if (chi != 0) form.push(weight_vector(m, marked, sigma), -chi);
    }
    return form;
}

ProductForm newton_diagram_formula(const NewtonDiagram& diagram, const ResolutionGraph& graph,
                                   const MultiplicityMatrix& m) {
    if (diagram.facets.empty())
        throw invalid_input_error("newton-diagram formula: diagram has no facets");
    auto marked = graph.marked_positions();
    if (marked.size() != diagram.facets.size())
        throw invalid_input_error("newton-diagram formula: marked vertices do not match facets");

    ProductForm form(static_cast<int>(marked.size()));
    ExpVec vx(marked.size()), vy(marked.size());
    for (std::size_t i = 0; i < marked.size(); ++i) {
        const GraphVertex& vertex = graph.vertices[marked[i]];
        if (!vertex.ray)
            throw invalid_input_error("newton-diagram formula requires a toric chain graph");
        const Facet* facet = find_facet(diagram, *vertex.ray);
        if (!facet)
            throw invalid_input_error("newton-diagram formula: marked ray is not a facet normal");
        vx[i] = facet->normal.x;
        vy[i] = facet->normal.y;
        ExpVec w = weight_vector(m, marked, marked[i]);
        for (auto& v : w) v *= facet->integer_length;
        form.push(w, 1);
    }
    form.push(vx, -1);
    form.push(vy, -1);
    return form;
}

namespace {

// coefficients of t^0..t^kmax of every basis monomial composed with a branch
struct BranchTable {
    std::vector<std::vector<Rat>> rows; // [basis index][k]
};

BranchTable build_table(const Branch& branch, const std::vector<Exp2>& basis, long long kmax) {
    using SeriesMap = std::map<long long, Rat>;
    auto mul = [kmax](const SeriesMap& a, const SeriesMap& b) {
        SeriesMap r;
        for (const auto& [ea, ca] : a)
            for (const auto& [eb, cb] : b) {
                if (ea + eb > kmax) continue;
                Rat& slot = r[ea + eb];
                slot += ca * cb;
                if (slot == 0) r.erase(ea + eb);
            }
        return r;
    };

    long long max_x = 0, max_y = 0;
    for (Exp2 e : basis) {
        max_x = std::max(max_x, e.x);
        max_y = std::max(max_y, e.y);
    }
    std::vector<SeriesMap> xpow(static_cast<std::size_t>(max_x) + 1), ypow(static_cast<std::size_t>(max_y) + 1);
    xpow[0] = {{0, Rat(1)}};
    ypow[0] = {{0, Rat(1)}};
    SeriesMap xs(branch.x.coeffs.begin(), branch.x.coeffs.end());
    SeriesMap ys(branch.y.coeffs.begin(), branch.y.coeffs.end());
    for (long long a = 1; a <= max_x; ++a) xpow[a] = mul(xpow[a - 1], xs);
    for (long long b = 1; b <= max_y; ++b) ypow[b] = mul(ypow[b - 1], ys);

    BranchTable table;
    table.rows.resize(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        SeriesMap comp = mul(xpow[static_cast<std::size_t>(basis[i].x)],
                             ypow[static_cast<std::size_t>(basis[i].y)]);
        table.rows[i].assign(static_cast<std::size_t>(kmax) + 1, Rat(0));
        for (const auto& [e, c] : comp) table.rows[i][static_cast<std::size_t>(e)] = c;
    }
    return table;
}

long long jet_dim_impl(const FiltrationBox& box, const ExpVec& v, const JetSpace& jets,
                       const std::vector<std::vector<BranchTable>>& tables) {
    IntMatrix rows;
    for (std::size_t gi = 0; gi < box.groups.size(); ++gi) {
        long long vi = v[gi];
        if (vi == 0) continue;
        for (std::size_t bi = 0; bi < box.groups[gi].branches.size(); ++bi) {
            const Branch& branch = box.groups[gi].branches[bi];
            if (branch.truncation() < vi - 1)
                throw scope_error("jet_dim: branch truncation " + std::to_string(branch.truncation()) +
                                  " is insufficient, need at least " + std::to_string(vi - 1));
            const BranchTable& table = tables[gi][bi];
            for (long long k = 0; k < vi; ++k) {
                std::vector<Rat> row(jets.basis.size());
                for (std::size_t col = 0; col < jets.basis.size(); ++col)
                    row[col] = table.rows[col][static_cast<std::size_t>(k)];
                Int lcm = 1;
                for (const Rat& c : row)
                    lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(c));
                std::vector<Int> int_row(row.size());
                for (std::size_t col = 0; col < row.size(); ++col)
                    int_row[col] = boost::multiprecision::numerator(row[col] * Rat(lcm));
                rows.push_back(std::move(int_row));
            }
        }
    }
    long long rank = static_cast<long long>(rank_bareiss(std::move(rows)));
    return static_cast<long long>(jets.basis.size()) - rank;
}

std::vector<std::vector<BranchTable>> build_tables(const FiltrationBox& box,
                                                   const std::vector<Exp2>& basis, long long kmax) {
    std::vector<std::vector<BranchTable>> tables(box.groups.size());
    for (std::size_t gi = 0; gi < box.groups.size(); ++gi) {
        for (const Branch& branch : box.groups[gi].branches) {
            long long cap = std::min(kmax, branch.truncation());
            tables[gi].push_back(build_table(branch, basis, cap));
        }
    }
    return tables;
}

void validate_box(const FiltrationBox& box) {
    if (box.arity <= 0 || box.groups.size() != static_cast<std::size_t>(box.arity))
        throw invalid_input_error("filtration: arity does not match the number of branch groups");
    if (box.bound < 0) throw invalid_input_error("filtration: negative box bound");
    for (const auto& group : box.groups) {
        if (group.branches.empty()) throw invalid_input_error("filtration: empty branch group");
        for (const Branch& b : group.branches) {
            auto ox = b.x.order(), oy = b.y.order();
            if ((ox && *ox < 1) || (oy && *oy < 1))
                throw invalid_input_error("filtration: branch components must vanish at the origin");
            if (!ox && !oy)
                throw invalid_input_error("filtration: branch is identically zero");
        }
    }
}

} // namespace

long long jet_dim(const FiltrationBox& box, const ExpVec& v, const JetSpace& jets) {
    validate_box(box);
    if (v.size() != box.groups.size()) throw invalid_input_error("jet_dim: index arity mismatch");
    long long max_v = 0;
    for (long long vi : v) {
        if (vi < 0) throw invalid_input_error("jet_dim: negative index");
        max_v = std::max(max_v, vi);
    }
    if (max_v > jets.degree + 1)
        throw invalid_input_error("jet_dim: index exceeds jet degree + 1");
    auto tables = build_tables(box, jets.basis, std::max<long long>(0, max_v - 1));
    return jet_dim_impl(box, v, jets, tables);
}

TruncatedSeries oracle_series(const FiltrationBox& box) {
    validate_box(box);
    const long long N = box.bound;
    for (const auto& group : box.groups)
        for (const Branch& b : group.branches)
            if (b.truncation() < N)
                throw scope_error("oracle: branch truncation " + std::to_string(b.truncation()) +
                                  " is below the requested degree " + std::to_string(N));

    const JetSpace jets = make_jet_space(N);
    const auto tables = build_tables(box, jets.basis, N);
    const int r = box.arity;

    // jet dimensions on the grid [0, N+1]^r, mixed-radix indexed
    const long long digits = N + 2;
    std::size_t grid_size = 1;
    for (int i = 0; i < r; ++i) grid_size *= static_cast<std::size_t>(digits);
    auto decode = [&](std::size_t idx) {
        ExpVec v(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) {
            v[static_cast<std::size_t>(i)] = static_cast<long long>(idx % static_cast<std::size_t>(digits));
            idx /= static_cast<std::size_t>(digits);
        }
        return v;
    };

    std::vector<long long> dims(grid_size, 0);
    const std::size_t workers = thread_budget(grid_size);
    std::exception_ptr failure;
    if (workers <= 1) {
        for (std::size_t idx = 0; idx < grid_size; ++idx)
            dims[idx] = jet_dim_impl(box, decode(idx), jets, tables);
    } else {
        std::vector<std::thread> pool;
        std::mutex failure_mutex;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w]() {
                try {
                    for (std::size_t idx = w; idx < grid_size; idx += workers)
                        dims[idx] = jet_dim_impl(box, decode(idx), jets, tables);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }
    auto dim_at = [&](const ExpVec& v) {
        std::size_t idx = 0;
        for (int i = r - 1; i >= 0; --i)
            idx = idx * static_cast<std::size_t>(digits) + static_cast<std::size_t>(v[static_cast<std::size_t>(i)]);
        return dims[idx];
    };

    // chi of the exact-value stratum by inclusion-exclusion over raised indices
    TruncatedSeries result(r, N);
    ExpVec v(static_cast<std::size_t>(r), 0);
    while (true) {
        Int chi = 0;
        for (unsigned mask = 0; mask < (1u << r); ++mask) {
            ExpVec raised = v;
            int bits = 0;
            for (int i = 0; i < r; ++i)
                if (mask & (1u << i)) {
                    ++raised[static_cast<std::size_t>(i)];
                    ++bits;
                }
            long long d = dim_at(raised);
            chi += (bits % 2 == 0) ? Int(d) : Int(-d);
        }
        result.add(v, chi);

        int pos = 0;
        while (pos < r && v[static_cast<std::size_t>(pos)] == N) {
            v[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == r) break;
        ++v[static_cast<std::size_t>(pos)];
    }
    return result;
}

std::string ComparisonReport::to_string() const {
    if (agree) return "agree";
    std::ostringstream out;
    out << "mismatch at t^(";
    for (std::size_t i = 0; i < first_mismatch->size(); ++i) {
        if (i) out << ",";
        out << (*first_mismatch)[i];
    }
    out << "): formula " << formula_coeff->str() << ", oracle " << oracle_coeff->str();
    return out.str();
}

ComparisonReport compare_expansions(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.arity() != b.arity()) throw invalid_input_error("compare: arity mismatch");
    const long long bound = std::min(a.bound(), b.bound());
    auto in_box = [bound](const ExpVec& e) {
        return std::all_of(e.begin(), e.end(), [bound](long long v) { return v <= bound; });
    };

    std::vector<ExpVec> keys;
    for (const auto& [e, c] : a.coeffs())
        if (in_box(e)) keys.push_back(e);
    for (const auto& [e, c] : b.coeffs())
        if (in_box(e)) keys.push_back(e);
    std::sort(keys.begin(), keys.end(), [](const ExpVec& x, const ExpVec& y) { return GradedLexVec{}(x, y); });
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

    ComparisonReport report;
    for (const ExpVec& e : keys) {
        Int ca = a.coeff(e), cb = b.coeff(e);
        if (ca != cb) {
            report.agree = false;
            report.first_mismatch = e;
            report.formula_coeff = ca;
            report.oracle_coeff = cb;
            return report;
        }
    }
    report.agree = true;
    return report;
}

ComparisonReport compare_series(const ProductForm& formula, const TruncatedSeries& oracle) {
    if (formula.arity() != oracle.arity()) throw invalid_input_error("compare: arity mismatch");
    return compare_expansions(expand(formula, oracle.bound()), oracle);
}

} // namespace divisor_series
