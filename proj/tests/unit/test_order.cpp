#include "divisor_series/order.hpp"
#include "divisor_series/errors.hpp"

#include <doctest.h>

#include "corpus.hpp"

#include <random>

using namespace divisor_series;

namespace {

const Facet& facet_by_normal(const NewtonDiagram& d, Exp2 normal) {
    const Facet* f = find_facet(d, normal);
    REQUIRE(f != nullptr);
    return *f;
}

Branch make_branch(std::vector<std::pair<long long, Rat>> xs,
                   std::vector<std::pair<long long, Rat>> ys, long long T) {
    Branch b;
    b.x.truncation = T;
    b.y.truncation = T;
    for (auto& [e, c] : xs) b.x.add(e, c);
    for (auto& [e, c] : ys) b.y.add(e, c);
    return b;
}

} // namespace

TEST_CASE("dehomogenize quasihomogeneous polynomials") {
    NewtonDiagram d = diagram_of(corpus::curve_a());
    const Facet& f12 = facet_by_normal(d, {1, 2});
    const Facet& f11 = facet_by_normal(d, {1, 1});

    // y^2 x - x^5 = x y^2 (1 - w^2), w = x^2 y^{-1}
    LaurentPoly p{{{1, 2}, Rat(1)}, {{5, 0}, Rat(-1)}};
    Dehomogenized deh = dehomogenize(p, f12);
    CHECK(deh.monomial == Exp2{1, 2});
    CHECK(deh.poly == Poly1({Rat(1), Rat(0), Rat(-1)}));
    CHECK(rehomogenize(deh, f12) == p);

    LaurentPoly mono{{{3, 1}, Rat(-7)}};
    Dehomogenized dm = dehomogenize(mono, f12);
    CHECK(dm.monomial == Exp2{3, 1});
    CHECK(dm.poly == Poly1({Rat(-7)}));

    // y + x = y (1 + w), w = x y^{-1}
    LaurentPoly yx{{{0, 1}, Rat(1)}, {{1, 0}, Rat(1)}};
    Dehomogenized dyx = dehomogenize(yx, f11);
    CHECK(dyx.monomial == Exp2{0, 1});
    CHECK(dyx.poly == Poly1({Rat(1), Rat(1)}));

    CHECK_THROWS_AS(dehomogenize(corpus::curve_a(), f12), invalid_input_error);
}

TEST_CASE("face division") {
    NewtonDiagram d = diagram_of(corpus::curve_a());
    const Facet& f12 = facet_by_normal(d, {1, 2});
    LaurentPoly f_face{{{1, 2}, Rat(1)}, {{5, 0}, Rat(-1)}}; // x y^2 - x^5

    // (y^2 - x^4) = x^{-1} (x y^2 - x^5)
    LaurentPoly g = corpus::curve_c();
    auto h = face_divide(g, f_face, f12);
    REQUIRE(h.has_value());
    CHECK(*h == LaurentPoly{{{-1, 0}, Rat(1)}});
    CHECK((*h) * f_face == g);

    LaurentPoly g2{{{-1, 3}, Rat(-1)}}; // -y^3 x^{-1}
    CHECK_FALSE(face_divide(g2, f_face, f12).has_value());

    auto h3 = face_divide(f_face, f_face, f12);
    REQUIRE(h3.has_value());
    CHECK(*h3 == LaurentPoly{{{0, 0}, Rat(1)}});
}

TEST_CASE("newton order reproduces the worked example") {
    LaurentPoly f = corpus::curve_a();
    NewtonDiagram d = diagram_of(f);
    const Facet& f12 = facet_by_normal(d, {1, 2});

    LaurentPoly g1{{{0, 1}, Rat(1)}, {{2, 0}, Rat(1)}};  // y + x^2
    LaurentPoly g2{{{0, 1}, Rat(1)}, {{2, 0}, Rat(-1)}}; // y - x^2
    CHECK(newton_order(g1, f, f12, 32) == OrderValue::finite(2));
    CHECK(newton_order(g2, f, f12, 32) == OrderValue::finite(2));
    CHECK(newton_order(g1 * g2, f, f12, 32) == OrderValue::finite(5));

    // one reduction step: x y^2 - x^5 -> -y^3
    LaurentPoly g3{{{1, 2}, Rat(1)}, {{5, 0}, Rat(-1)}};
    CHECK(newton_order(g3, f, f12, 32) == OrderValue::finite(6));

    // g in the ideal (f): the reduction never stops, the bound reports
    CHECK(newton_order(f, f, f12, 17) == OrderValue::at_least(17));
    LaurentPoly xf = LaurentPoly{{{1, 0}, Rat(1)}} * f;
    CHECK(newton_order(xf, f, f12, 17) == OrderValue::at_least(17));

    CHECK(newton_order(LaurentPoly{}, f, f12, 17) == OrderValue::infinite());
}

TEST_CASE("newton order rejects degenerate facets") {
    LaurentPoly bad{{{0, 2}, Rat(1)}, {{2, 1}, Rat(-2)}, {{4, 0}, Rat(1)}, {{7, 0}, Rat(-1)}};
    NewtonDiagram d = diagram_of(bad);
    LaurentPoly g{{{0, 1}, Rat(1)}};
    CHECK_THROWS_AS(newton_order(g, bad, d.facets[0], 32), invalid_input_error);
}

TEST_CASE("branch orders") {
    Branch plus = make_branch({{1, Rat(1)}}, {{2, Rat(1)}}, 8);   // (t, t^2)
    Branch minus = make_branch({{1, Rat(1)}}, {{2, Rat(-1)}}, 8); // (t, -t^2)
    LaurentPoly g{{{0, 1}, Rat(1)}, {{2, 0}, Rat(-1)}}; // y - x^2

    CHECK(branch_order(g, plus) == OrderValue::at_least(9));
    CHECK(branch_order(g, minus) == OrderValue::finite(2));

    BranchGroup group{1, {plus, minus}};
    CHECK(group_order(g, group) == OrderValue::finite(2));
    CHECK(group_order(corpus::curve_c(), group) == OrderValue::at_least(9));
    CHECK(group_order(LaurentPoly{{{1, 0}, Rat(1)}}, group) == OrderValue::finite(1));
    CHECK(group_order(LaurentPoly{}, group) == OrderValue::infinite());
}

TEST_CASE("order value combination") {
    using OV = OrderValue;
    CHECK(OV::min_of(OV::finite(3), OV::at_least(5)) == OV::finite(3));
    CHECK(OV::min_of(OV::finite(7), OV::at_least(5)) == OV::at_least(5));
    CHECK(OV::min_of(OV::at_least(4), OV::at_least(9)) == OV::at_least(4));
    CHECK(OV::min_of(OV::infinite(), OV::at_least(9)) == OV::at_least(9));
    CHECK(OV::min_of(OV::infinite(), OV::infinite()) == OV::infinite());
}

TEST_CASE("puiseux lift: cusp") {
    LaurentPoly f = corpus::curve_b();
    NewtonDiagram d = diagram_of(f);
    auto branches = puiseux_lift(f, d.facets[0], 10);
    REQUIRE(branches.size() == 1);
    Branch expected = make_branch({{2, Rat(1)}}, {{3, Rat(1)}}, 10);
    CHECK(branches[0].x == expected.x);
    CHECK(branches[0].y == expected.y);
}

TEST_CASE("puiseux lift: two branches with corrections") {
    LaurentPoly f = corpus::curve_a();
    NewtonDiagram d = diagram_of(f);
    auto branches = puiseux_lift(f, facet_by_normal(d, {1, 2}), 5);
    REQUIRE(branches.size() == 2);

    // leading terms -t^2 and t^2, both corrected by -t^3/2
    CHECK(branches[0].y.coeffs.at(2) == Rat(-1));
    CHECK(branches[0].y.coeffs.at(3) == Rat(-1, 2));
    CHECK(branches[1].y.coeffs.at(2) == Rat(1));
    CHECK(branches[1].y.coeffs.at(3) == Rat(-1, 2));

    // substitution kills everything up to the truncation
    for (const Branch& b : branches) {
        PowerSeries1 composed = compose_on_branch(f, b);
        CHECK_FALSE(composed.order().has_value());
    }
}

TEST_CASE("puiseux lift: smooth branch of the (1,1) facet") {
    LaurentPoly f = corpus::curve_a();
    NewtonDiagram d = diagram_of(f);
    auto branches = puiseux_lift(f, facet_by_normal(d, {1, 1}), 5);
    REQUIRE(branches.size() == 1);
    // y = -t + t^3 + 2 t^5 + O(t^6)
    Branch expected = make_branch({{1, Rat(1)}}, {{1, Rat(-1)}, {3, Rat(1)}, {5, Rat(2)}}, 5);
    CHECK(branches[0].y == expected.y);
}

TEST_CASE("puiseux lift error paths") {
    // y^2 - 2 x^3: eta^2 = 2 is irrational
    LaurentPoly f{{{0, 2}, Rat(1)}, {{3, 0}, Rat(-2)}};
    NewtonDiagram d = diagram_of(f);
    CHECK_THROWS_AS(puiseux_lift(f, d.facets[0], 8), scope_error);

    // y^3 - 2 x^3: the face polynomial 1 - 2 w^3 has no rational root
    LaurentPoly g{{{0, 3}, Rat(1)}, {{3, 0}, Rat(-2)}};
    NewtonDiagram dg = diagram_of(g);
    CHECK_THROWS_AS(puiseux_lift(g, dg.facets[0], 8), scope_error);

    // repeated root: degenerate
    LaurentPoly bad{{{0, 2}, Rat(1)}, {{2, 1}, Rat(-2)}, {{4, 0}, Rat(1)}, {{7, 0}, Rat(-1)}};
    NewtonDiagram db = diagram_of(bad);
    CHECK_THROWS_AS(puiseux_lift(bad, db.facets[0], 8), invalid_input_error);
}

TEST_CASE("newton order is bounded below by the facet value") {
    std::mt19937 rng(7101);
    LaurentPoly f = corpus::curve_a();
    NewtonDiagram d = diagram_of(f);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly g = corpus::random_poly(rng, 4, 5);
        for (const Facet& facet : d.facets) {
            OrderValue v = newton_order(g, f, facet, 40);
            long long u = *facet_value(g, facet);
            if (v.is_finite()) {
                CHECK(v.value() >= u);
                bool first_division_fails =
                    !face_divide(face_part(g, facet), face_part(f, facet), facet).has_value();
                CHECK((v.value() == u) == first_division_fails);
            }
        }
    }
}

TEST_CASE("order function axiom and the non-valuation witness") {
    std::mt19937 rng(7102);
    LaurentPoly f = corpus::curve_a();
    NewtonDiagram d = diagram_of(f);
    const Facet& f12 = facet_by_normal(d, {1, 2});

    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly g1 = corpus::random_poly(rng, 3, 4);
        LaurentPoly g2 = corpus::random_poly(rng, 3, 4);
        for (const Facet& facet : d.facets) {
            OrderValue a = newton_order(g1, f, facet, 40);
            OrderValue b = newton_order(g2, f, facet, 40);
            OrderValue sum = newton_order(g1 + g2, f, facet, 40);
            if (a.is_finite() && b.is_finite() && sum.is_finite())
                CHECK(sum.value() >= std::min(a.value(), b.value()));
        }
    }

    // the order function is not a valuation: 5 != 2 + 2
    LaurentPoly g1{{{0, 1}, Rat(1)}, {{2, 0}, Rat(1)}};
    LaurentPoly g2{{{0, 1}, Rat(1)}, {{2, 0}, Rat(-1)}};
    OrderValue product = newton_order(g1 * g2, f, f12, 32);
    CHECK(product == OrderValue::finite(5));
    CHECK(product.value() !=
          newton_order(g1, f, f12, 32).value() + newton_order(g2, f, f12, 32).value());
}

TEST_CASE("newton order agrees with branch orders") {
    std::mt19937 rng(7103);
    const long long T = 24;
    for (const LaurentPoly& f : {corpus::curve_a(), corpus::curve_c(), corpus::curve_e()}) {
        NewtonDiagram d = diagram_of(f);
        Exp2 mf = d.monomial_factor;
        LaurentPoly f_unit = f * LaurentPoly::monomial({-mf.x, -mf.y}, Rat(1));
        NewtonDiagram du = diagram_of(f_unit);
        for (std::size_t i = 0; i < d.facets.size(); ++i) {
            BranchGroup group{static_cast<int>(i) + 1, puiseux_lift(f_unit, du.facets[i], T)};
            for (int trial = 0; trial < 60; ++trial) {
                LaurentPoly g = corpus::random_poly(rng, 3, 4);
                OrderValue reduction = newton_order(g, f, d.facets[i], T);
                OrderValue branches = group_order(g, group);
                if (reduction.is_finite() && branches.is_finite())
                    CHECK(reduction == branches);
            }
        }
    }
}

TEST_CASE("branch order is a valuation on a single branch") {
    std::mt19937 rng(7104);
    LaurentPoly f = corpus::curve_a();
    NewtonDiagram d = diagram_of(f);
    auto branches = puiseux_lift(f, facet_by_normal(d, {1, 2}), 30);
    for (int trial = 0; trial < 100; ++trial) {
        LaurentPoly g1 = corpus::random_poly(rng, 3, 3);
        LaurentPoly g2 = corpus::random_poly(rng, 3, 3);
        for (const Branch& b : branches) {
            OrderValue a = branch_order(g1, b);
            OrderValue bb = branch_order(g2, b);
            OrderValue prod = branch_order(g1 * g2, b);
            if (a.is_finite() && bb.is_finite() && prod.is_finite())
                CHECK(prod.value() == a.value() + bb.value());
        }
    }
}

TEST_CASE("composition respects exactness near the truncation") {
    // total degree 2 against truncation 6: coefficients above 6 are unknown,
    // so Finite is only certified up to the truncation
    Branch b = make_branch({{1, Rat(1)}}, {{2, Rat(1)}, {6, Rat(1)}}, 6);
    LaurentPoly g{{{0, 2}, Rat(1)}}; // y^2 = t^4 + 2 t^8 + ... -> order 4 certified
    CHECK(branch_order(g, b) == OrderValue::finite(4));
    // y - x^2 = t^6 on the nose at the truncation boundary
    LaurentPoly h{{{0, 1}, Rat(1)}, {{2, 0}, Rat(-1)}};
    CHECK(branch_order(h, b) == OrderValue::finite(6));
}
