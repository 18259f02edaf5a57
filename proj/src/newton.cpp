#include "divisor_series/newton.hpp"

#include "divisor_series/errors.hpp"
#include "divisor_series/order.hpp"

#include <algorithm>
#include <numeric>

namespace divisor_series {

namespace {

long long cross(Exp2 o, Exp2 a, Exp2 b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

} // namespace

NewtonDiagram build_diagram(const std::vector<Exp2>& support) {
    if (support.empty()) throw invalid_input_error("build_diagram: empty support");
    for (Exp2 p : support)
        if (p.x < 0 || p.y < 0)
            throw invalid_input_error("build_diagram: support points must be non-negative");

    NewtonDiagram d;
    d.support = support;
    std::sort(d.support.begin(), d.support.end(), [](Exp2 a, Exp2 b) {
        return GradedLexExp2{}(a, b);
    });
    d.support.erase(std::unique(d.support.begin(), d.support.end()), d.support.end());

    d.monomial_factor = d.support.front();
    for (Exp2 p : d.support) {
        d.monomial_factor.x = std::min(d.monomial_factor.x, p.x);
        d.monomial_factor.y = std::min(d.monomial_factor.y, p.y);
    }

    // Pareto-minimal points; anything dominated lies above the diagram.
    std::vector<Exp2> pts;
    for (Exp2 p : d.support) {
        bool dominated = false;
        for (Exp2 q : d.support)
            if ((q.x < p.x && q.y <= p.y) || (q.x <= p.x && q.y < p.y)) {
                dominated = true;
                break;
            }
        if (!dominated) pts.push_back(p);
    }
    std::sort(pts.begin(), pts.end(), [](Exp2 a, Exp2 b) { return a.x < b.x; });

    // Convex chain toward the origin; collinear interior points dropped.
    std::vector<Exp2> hull;
    for (Exp2 p : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0)
            hull.pop_back();
        hull.push_back(p);
    }

    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
        Exp2 p = hull[i], q = hull[i + 1];
        long long dx = q.x - p.x, dy = p.y - q.y; // both positive
        long long g = std::gcd(dx, dy);
        Facet f;
        f.normal = {dy / g, dx / g};
        f.constant = f.normal.x * p.x + f.normal.y * p.y;
        f.first = p;
        f.second = q;
        f.integer_length = g;
        d.facets.push_back(f);
    }

    for (const Facet& f : d.facets)
        for (Exp2 p : d.support)
            if (f.ell(p) < f.constant)
                throw invalid_input_error("build_diagram: support point below a facet line");
    return d;
}

NewtonDiagram diagram_of(const LaurentPoly& f) {
    if (f.is_zero()) throw invalid_input_error("diagram_of: zero polynomial");
    if (!f.is_polynomial())
        throw invalid_input_error("diagram_of: Newton diagrams require non-negative exponents");
    std::vector<Exp2> support;
    support.reserve(f.term_count());
    for (const auto& [e, c] : f.terms()) support.push_back(e);
    return build_diagram(support);
}

std::optional<long long> facet_value(const LaurentPoly& g, const Facet& facet) {
    if (g.is_zero()) return std::nullopt;
    std::optional<long long> best;
    for (const auto& [e, c] : g.terms()) {
        long long v = facet.ell(e);
        if (!best || v < *best) best = v;
    }
    return best;
}

LaurentPoly face_part(const LaurentPoly& g, const Facet& facet) {
    LaurentPoly r;
    auto u = facet_value(g, facet);
    if (!u) return r;
    for (const auto& [e, c] : g.terms())
        if (facet.ell(e) == *u) r.add_term(e, c);
    return r;
}

bool check_nondegenerate(const LaurentPoly& f, const NewtonDiagram& diagram) {
    if (f.is_zero()) return false;
    for (const Facet& facet : diagram.facets) {
        Dehomogenized deh = dehomogenize(face_part(f, facet), facet);
        if (deh.poly.coeff(0) == 0) return false; // cannot happen for genuine face parts
        if (!deh.poly.is_squarefree()) return false;
    }
    return true;
}

long long translated_facet_min(const Facet& facet, const Facet& other) {
    Exp2 shift{-std::min(facet.first.x, facet.second.x), -std::min(facet.first.y, facet.second.y)};
    long long a = other.ell(facet.first + shift);
    long long b = other.ell(facet.second + shift);
    return std::min(a, b);
}

const Facet* find_facet(const NewtonDiagram& diagram, Exp2 normal) {
    for (const Facet& f : diagram.facets)
        if (f.normal == normal) return &f;
    return nullptr;
}

} // namespace divisor_series
