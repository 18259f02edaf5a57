#include "divisor_series/order.hpp"

#include "divisor_series/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace divisor_series {

OrderValue OrderValue::min_of(const OrderValue& a, const OrderValue& b) {
    if (a.is_infinite()) return b;
    if (b.is_infinite()) return a;
    if (a.is_finite() && b.is_finite()) return finite(std::min(a.value_, b.value_));
    if (a.is_finite()) return a.value_ <= b.value_ ? a : b;
    if (b.is_finite()) return b.value_ <= a.value_ ? b : a;
    return at_least(std::min(a.value_, b.value_));
}

std::string OrderValue::to_string() const {
    switch (kind_) {
        case Kind::finite: return std::to_string(value_);
        case Kind::at_least: return ">= " + std::to_string(value_) + " (possibly infinite)";
        default: return "infinite";
    }
}

void PowerSeries1::add(long long e, const Rat& c) {
    if (c == 0 || e > truncation) return;
    auto [it, inserted] = coeffs.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }
}

std::optional<long long> PowerSeries1::order() const {
    if (coeffs.empty()) return std::nullopt;
    return coeffs.begin()->first;
}

Dehomogenized dehomogenize(const LaurentPoly& p, const Facet& facet) {
    if (p.is_zero()) throw invalid_input_error("dehomogenize: zero polynomial");
    const long long a2 = facet.normal.y;
    const long long u = *facet_value(p, facet);

    long long alpha = p.terms().begin()->first.x;
    for (const auto& [e, c] : p.terms()) {
        if (facet.ell(e) != u)
            throw invalid_input_error("dehomogenize: polynomial is not quasihomogeneous for this facet");
        alpha = std::min(alpha, e.x);
    }
    long long beta = 0;
    for (const auto& [e, c] : p.terms())
        if (e.x == alpha) beta = e.y;

    Dehomogenized result;
    result.monomial = {alpha, beta};
    for (const auto& [e, c] : p.terms()) {
        // a2 | (kx - alpha) because the normal is primitive and ell is constant
        long long j = (e.x - alpha) / a2;
        result.poly.set_coeff(static_cast<std::size_t>(j), c);
    }
    return result;
}

LaurentPoly rehomogenize(const Dehomogenized& d, const Facet& facet) {
    const long long a1 = facet.normal.x, a2 = facet.normal.y;
    LaurentPoly p;
    const auto& cs = d.poly.coeffs();
    for (std::size_t j = 0; j < cs.size(); ++j) {
        if (cs[j] == 0) continue;
        long long jj = static_cast<long long>(j);
        p.add_term({d.monomial.x + a2 * jj, d.monomial.y - a1 * jj}, cs[j]);
    }
    return p;
}

std::optional<LaurentPoly> face_divide(const LaurentPoly& g_face, const LaurentPoly& f_face,
                                       const Facet& facet) {
    if (g_face.is_zero() || f_face.is_zero())
        throw invalid_input_error("face_divide: zero face polynomial");
    Dehomogenized dg = dehomogenize(g_face, facet);
    Dehomogenized df = dehomogenize(f_face, facet);
    auto q = dg.poly.divide_exact(df.poly);
    if (!q) return std::nullopt;
    return rehomogenize({dg.monomial - df.monomial, *q}, facet);
}

OrderValue newton_order(LaurentPoly g, const LaurentPoly& f, const Facet& facet, long long bound) {
    if (f.is_zero()) throw invalid_input_error("newton_order: zero curve polynomial");
    const LaurentPoly f_face = face_part(f, facet);
    if (!dehomogenize(f_face, facet).poly.is_squarefree())
        throw invalid_input_error("newton_order: curve is degenerate on this facet");
    if (g.is_zero()) return OrderValue::infinite();

    long long prev_u = 0;
    bool have_prev = false;
    while (true) {
        long long u = *facet_value(g, facet);
        if (have_prev && u <= prev_u) // every step must strictly raise u
            throw std::logic_error("newton_order: reduction failed to increase the facet value");
        prev_u = u;
        have_prev = true;
        if (u > bound) return OrderValue::at_least(bound);
        auto h = face_divide(face_part(g, facet), f_face, facet);
        if (!h) return OrderValue::finite(u);
        g = g - (*h) * f;
        if (g.is_zero()) return OrderValue::infinite();
    }
}

PowerSeries1 compose_on_branch(const LaurentPoly& g, const Branch& branch) {
    if (!g.is_polynomial())
        throw invalid_input_error("compose_on_branch: negative exponents cannot be composed with a branch");
    const long long T = branch.truncation();

    using SeriesMap = std::map<long long, Rat>;
    auto mul = [T](const SeriesMap& a, const SeriesMap& b) {
        SeriesMap r;
        for (const auto& [ea, ca] : a)
            for (const auto& [eb, cb] : b) {
                if (ea + eb > T) continue;
                Rat& slot = r[ea + eb];
                slot += ca * cb;
                if (slot == 0) r.erase(ea + eb);
            }
        return r;
    };

    long long max_x = 0, max_y = 0;
    for (const auto& [e, c] : g.terms()) {
        max_x = std::max(max_x, e.x);
        max_y = std::max(max_y, e.y);
    }
    std::vector<SeriesMap> xpow(static_cast<std::size_t>(max_x) + 1);
    std::vector<SeriesMap> ypow(static_cast<std::size_t>(max_y) + 1);
    xpow[0] = {{0, Rat(1)}};
    ypow[0] = {{0, Rat(1)}};
    SeriesMap xs(branch.x.coeffs.begin(), branch.x.coeffs.end());
    SeriesMap ys(branch.y.coeffs.begin(), branch.y.coeffs.end());
    for (long long a = 1; a <= max_x; ++a) xpow[a] = mul(xpow[a - 1], xs);
    for (long long b = 1; b <= max_y; ++b) ypow[b] = mul(ypow[b - 1], ys);

    PowerSeries1 result;
    result.truncation = T;
    for (const auto& [e, c] : g.terms()) {
        SeriesMap prod = mul(xpow[static_cast<std::size_t>(e.x)], ypow[static_cast<std::size_t>(e.y)]);
        for (const auto& [exp, coeff] : prod) result.add(exp, c * coeff);
    }
    return result;
}

OrderValue branch_order(const LaurentPoly& g, const Branch& branch) {
    if (g.is_zero()) return OrderValue::infinite();
    PowerSeries1 composed = compose_on_branch(g, branch);
    auto ord = composed.order();
    if (ord) return OrderValue::finite(*ord);
    return OrderValue::at_least(branch.truncation() + 1);
}

OrderValue group_order(const LaurentPoly& g, const BranchGroup& group) {
    if (group.branches.empty()) throw invalid_input_error("group_order: empty branch group");
    OrderValue result = OrderValue::infinite();
    for (const Branch& b : group.branches) result = OrderValue::min_of(result, branch_order(g, b));
    return result;
}

namespace {

using TPoly = std::map<long long, Rat>; // exact polynomial in t

void tpoly_add(TPoly& dst, long long e, const Rat& c) {
    if (c == 0) return;
    Rat& slot = dst[e];
    slot += c;
    if (slot == 0) dst.erase(e);
}

TPoly tpoly_mul(const TPoly& a, const TPoly& b) {
    TPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) tpoly_add(r, ea + eb, ca * cb);
    return r;
}

// f(t^{a1}, y(t)) computed exactly.
TPoly compose_exact(const LaurentPoly& f, long long a1, const TPoly& y) {
    long long max_y = 0;
    for (const auto& [e, c] : f.terms()) max_y = std::max(max_y, e.y);
    std::vector<TPoly> ypow(static_cast<std::size_t>(max_y) + 1);
    ypow[0] = {{0, Rat(1)}};
    for (long long b = 1; b <= max_y; ++b) ypow[b] = tpoly_mul(ypow[b - 1], y);

    TPoly result;
    for (const auto& [e, c] : f.terms()) {
        assert(e.x >= 0 && e.y >= 0);
        for (const auto& [exp, coeff] : ypow[static_cast<std::size_t>(e.y)])
            tpoly_add(result, exp + a1 * e.x, c * coeff);
    }
    return result;
}

} // namespace

std::vector<Branch> puiseux_lift(const LaurentPoly& f, const Facet& facet, long long truncation) {
    if (!f.is_polynomial()) throw invalid_input_error("puiseux_lift: f must be a polynomial");
    const long long a1 = facet.normal.x, a2 = facet.normal.y;
    if (truncation < a2) throw invalid_input_error("puiseux_lift: truncation below the leading exponent");

    Dehomogenized deh = dehomogenize(face_part(f, facet), facet);
    const Poly1& face_poly = deh.poly;
    if (face_poly.degree() != facet.integer_length)
        throw std::logic_error("puiseux_lift: face polynomial degree != facet integer length");

    auto roots = face_poly.rational_roots();
    long long found = 0;
    for (const auto& [root, mult] : roots) {
        if (mult > 1)
            throw invalid_input_error("puiseux_lift: repeated face root (degenerate curve), root " +
                                      format_rational(root));
        found += mult;
    }
    if (found < face_poly.degree())
        throw scope_error("puiseux_lift: face polynomial has irrational roots; supply explicit branch "
                          "parametrizations instead");

    const LaurentPoly fy = f.derivative_y();
    std::vector<Branch> branches;
    for (const auto& [w0, mult] : roots) {
        // leading coefficient: eta^{a1} = 1/w0 (w0 != 0 since the face
        // polynomial has nonzero constant term)
        auto eta = rational_nth_root(Rat(1) / w0, static_cast<int>(a1));
        if (!eta)
            throw scope_error("puiseux_lift: leading coefficient for face root " + format_rational(w0) +
                              " is irrational; supply explicit branch parametrizations instead");

        TPoly y{{a2, *eta}};
        while (true) {
            TPoly residual = compose_exact(f, a1, y);
            if (residual.empty()) break; // branch is exactly polynomial
            long long d = residual.begin()->first;

            TPoly deriv = compose_exact(fy, a1, y);
            if (deriv.empty()) // cannot happen for simple face roots
                throw std::logic_error("puiseux_lift: y-derivative vanishes on the branch");
            long long e = deriv.begin()->first;
            const Rat& pivot = deriv.begin()->second;

            long long m = d - e;
            if (m > truncation) break;
            if (m <= y.rbegin()->first) // corrections must arrive in strictly increasing order
                throw std::logic_error("puiseux_lift: correction order did not advance");
            tpoly_add(y, m, -residual.begin()->second / pivot);
        }

        Branch branch;
        branch.x.truncation = truncation;
        branch.x.add(a1, Rat(1));
        branch.y.truncation = truncation;
        for (const auto& [e, c] : y) branch.y.add(e, c);
        branches.push_back(std::move(branch));
    }
    return branches;
}

} // namespace divisor_series
