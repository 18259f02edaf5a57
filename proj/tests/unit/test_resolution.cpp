#include "divisor_series/resolution.hpp"
#include "divisor_series/errors.hpp"

#include <doctest.h>

#include "corpus.hpp"

#include <random>

using namespace divisor_series;

namespace {

ResolutionGraph two_lines_graph() {
    // path E2 - E1 - E3, a point blown up twice more; the two lines meet the
    // outer vertices
    ResolutionGraph g;
    g.vertices.push_back({1, std::nullopt, -3, 0});
    g.vertices.push_back({2, std::nullopt, -1, 1});
    g.vertices.push_back({3, std::nullopt, -1, 1});
    g.edges.insert({1, 2});
    g.edges.insert({1, 3});
    return g;
}

std::vector<Ray> random_targets(std::mt19937& rng, int count) {
    std::uniform_int_distribution<long long> comp(1, 9);
    std::vector<Ray> targets;
    while (static_cast<int>(targets.size()) < count) {
        Ray r{comp(rng), comp(rng)};
        long long g = std::gcd(r.x, r.y);
        r = {r.x / g, r.y / g};
        if (std::find(targets.begin(), targets.end(), r) == targets.end()) targets.push_back(r);
    }
    return targets;
}

} // namespace

TEST_CASE("fan subdivision examples") {
    CHECK(subdivide_fan({}) == std::vector<Ray>{{1, 0}, {0, 1}});
    CHECK(subdivide_fan({{2, 3}}) == std::vector<Ray>{{1, 0}, {1, 1}, {2, 3}, {1, 2}, {0, 1}});
    CHECK(subdivide_fan({{1, 1}, {1, 2}}) == std::vector<Ray>{{1, 0}, {1, 1}, {1, 2}, {0, 1}});
    CHECK_THROWS_AS(subdivide_fan({{2, 4}}), invalid_input_error);
    CHECK_THROWS_AS(subdivide_fan({{0, 1}}), invalid_input_error);
}

TEST_CASE("fan subdivision is unimodular") {
    std::mt19937 rng(7201);
    for (int trial = 0; trial < 100; ++trial) {
        auto rays = subdivide_fan(random_targets(rng, 1 + trial % 4));
        for (std::size_t i = 0; i + 1 < rays.size(); ++i)
            CHECK(rays[i].x * rays[i + 1].y - rays[i].y * rays[i + 1].x == 1);
    }
}

TEST_CASE("chain graphs from diagrams") {
    SUBCASE("cusp") {
        NewtonDiagram d = diagram_of(corpus::curve_b());
        auto rays = subdivide_fan({{2, 3}});
        ResolutionGraph g = chain_graph(rays, d);
        REQUIRE(g.vertices.size() == 3);
        CHECK(g.vertices[0].self_intersection == -3);
        CHECK(g.vertices[1].self_intersection == -1);
        CHECK(g.vertices[2].self_intersection == -2);
        CHECK(g.vertices[0].marked_s == 0);
        CHECK(g.vertices[1].marked_s == 1);
        CHECK(g.vertices[2].marked_s == 0);
        CHECK(g.chi_of(0) == 1);
        CHECK(g.chi_of(1) == 0);
        CHECK(g.chi_of(2) == 1);
    }
    SUBCASE("curve a") {
        NewtonDiagram d = diagram_of(corpus::curve_a());
        ResolutionGraph g = chain_graph(subdivide_fan({{1, 1}, {1, 2}}), d);
        REQUIRE(g.vertices.size() == 2);
        CHECK(g.vertices[0].self_intersection == -2);
        CHECK(g.vertices[1].self_intersection == -1);
        CHECK(g.vertices[0].marked_s == 1);
        CHECK(g.vertices[1].marked_s == 2);
    }
    SUBCASE("single blow-up") {
        NewtonDiagram d = build_diagram({{0, 1}, {1, 0}}); // x + y
        ResolutionGraph g = chain_graph(subdivide_fan({{1, 1}}), d);
        REQUIRE(g.vertices.size() == 1);
        CHECK(g.vertices[0].self_intersection == -1);
        CHECK(g.vertices[0].marked_s == 1);
        CHECK(g.chi_of(0) == 2);
    }
}

TEST_CASE("multiplicity matrices") {
    SUBCASE("chain (-2,-1)") {
        NewtonDiagram d = diagram_of(corpus::curve_a());
        ResolutionGraph g = chain_graph(subdivide_fan({{1, 1}, {1, 2}}), d);
        MultiplicityMatrix m = multiplicity_matrix(g);
        CHECK(m.entries == IntMatrix{{1, 1}, {1, 2}});
    }
    SUBCASE("chain (-3,-1,-2)") {
        NewtonDiagram d = diagram_of(corpus::curve_b());
        ResolutionGraph g = chain_graph(subdivide_fan({{2, 3}}), d);
        MultiplicityMatrix m = multiplicity_matrix(g);
        CHECK(m.entries == IntMatrix{{1, 2, 1}, {2, 6, 3}, {1, 3, 2}});
    }
    SUBCASE("single -1 vertex") {
        NewtonDiagram d = build_diagram({{0, 1}, {1, 0}});
        ResolutionGraph g = chain_graph(subdivide_fan({{1, 1}}), d);
        CHECK(multiplicity_matrix(g).entries == IntMatrix{{1}});
    }
}

TEST_CASE("graph validation") {
    CHECK_NOTHROW(validate_graph(two_lines_graph()));

    // not negative definite
    ResolutionGraph bad;
    bad.vertices.push_back({1, std::nullopt, -1, 0});
    bad.vertices.push_back({2, std::nullopt, -1, 0});
    bad.vertices.push_back({3, std::nullopt, -1, 0});
    bad.edges.insert({1, 2});
    bad.edges.insert({2, 3});
    CHECK_THROWS_WITH_AS(validate_graph(bad), doctest::Contains("negative definite"),
                         invalid_input_error);

    ResolutionGraph disconnected;
    disconnected.vertices.push_back({1, std::nullopt, -2, 0});
    disconnected.vertices.push_back({2, std::nullopt, -2, 0});
    CHECK_THROWS_WITH_AS(validate_graph(disconnected), doctest::Contains("connected"),
                         invalid_input_error);
}

TEST_CASE("multiplicity matrix identities on random chains") {
    std::mt19937 rng(7202);
    for (int trial = 0; trial < 50; ++trial) {
        auto targets = random_targets(rng, 1 + trial % 3);
        auto rays = subdivide_fan(targets);
        NewtonDiagram dummy; // no facets: unmarked chain
        ResolutionGraph g = chain_graph(rays, dummy);
        if (g.vertices.empty()) continue;
        MultiplicityMatrix m = multiplicity_matrix(g);
        IntMatrix M = intersection_matrix(g);
        const std::size_t n = M.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Int acc = 0;
                for (std::size_t k = 0; k < n; ++k) acc += -M[i][k] * m.entries[k][j];
                CHECK(acc == (i == j ? 1 : 0));
                CHECK(m.entries[i][j] == m.entries[j][i]);
                CHECK(m.entries[i][j] >= 1);
            }
    }
}

TEST_CASE("facet pair minima match the multiplicity matrix") {
    for (const LaurentPoly& f :
         {corpus::curve_a(), corpus::curve_b(), corpus::curve_c(), corpus::curve_e()}) {
        NewtonDiagram d = diagram_of(f);
        std::vector<Ray> targets;
        for (const Facet& facet : d.facets) targets.push_back(facet.normal);
        ResolutionGraph g = chain_graph(subdivide_fan(targets), d);
        MultiplicityMatrix m = multiplicity_matrix(g);
        auto marked = g.marked_positions();
        REQUIRE(marked.size() == d.facets.size());
        for (std::size_t i = 0; i < marked.size(); ++i)
            for (std::size_t j = 0; j < marked.size(); ++j) {
                Int lhs = Int(d.facets[i].integer_length) * m.entries[marked[i]][marked[j]];
                CHECK(lhs == translated_facet_min(d.facets[i], d.facets[j]));
            }
    }
}

TEST_CASE("chain end rows read off the facet normals") {
    for (const LaurentPoly& f : {corpus::curve_a(), corpus::curve_b(), corpus::curve_e()}) {
        NewtonDiagram d = diagram_of(f);
        std::vector<Ray> targets;
        for (const Facet& facet : d.facets) targets.push_back(facet.normal);
        ResolutionGraph g = chain_graph(subdivide_fan(targets), d);
        MultiplicityMatrix m = multiplicity_matrix(g);
        auto marked = g.marked_positions();
        const std::size_t first = 0, last = g.vertices.size() - 1;
        for (std::size_t i = 0; i < marked.size(); ++i) {
            CHECK(m.entries[first][marked[i]] == d.facets[i].normal.x); // order of x
            CHECK(m.entries[last][marked[i]] == d.facets[i].normal.y);  // order of y
        }
    }
}

TEST_CASE("refining the fan preserves the marked block") {
    std::mt19937 rng(7203);
    NewtonDiagram d = diagram_of(corpus::curve_a());
    std::vector<Ray> targets{{1, 1}, {1, 2}};
    auto rays = subdivide_fan(targets);
    ResolutionGraph g0 = chain_graph(rays, d);
    MultiplicityMatrix m0 = multiplicity_matrix(g0);
    auto marked0 = g0.marked_positions();

    for (int trial = 0; trial < 20; ++trial) {
        auto refined = rays;
        std::uniform_int_distribution<std::size_t> pick(0, refined.size() - 2);
        int inserts = 1 + trial % 4;
        for (int k = 0; k < inserts; ++k) {
            std::size_t i = pick(rng) % (refined.size() - 1);
            refined.insert(refined.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                           refined[i] + refined[i + 1]);
        }
        ResolutionGraph g1 = chain_graph(refined, d);
        MultiplicityMatrix m1 = multiplicity_matrix(g1);
        auto marked1 = g1.marked_positions();
        REQUIRE(marked1.size() == marked0.size());
        for (std::size_t i = 0; i < marked0.size(); ++i) {
            for (std::size_t j = 0; j < marked0.size(); ++j)
                CHECK(m0.entries[marked0[i]][marked0[j]] == m1.entries[marked1[i]][marked1[j]]);
        }
        // every inserted vertex is interior: chi = 0
        for (std::size_t pos = 0; pos < g1.vertices.size(); ++pos) {
            bool existed = std::find(rays.begin(), rays.end(), *g1.vertices[pos].ray) != rays.end();
            if (!existed) CHECK(g1.chi_of(pos) == 0);
        }
    }
}
