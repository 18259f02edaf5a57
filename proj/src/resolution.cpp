#include "divisor_series/resolution.hpp"

#include "divisor_series/errors.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace divisor_series {

namespace {

long long det2(Ray a, Ray b) { return a.x * b.y - a.y * b.x; }

} // namespace

std::size_t ResolutionGraph::position_of(int id) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].id == id) return i;
    throw invalid_input_error("resolution graph: unknown vertex id " + std::to_string(id));
}

std::size_t ResolutionGraph::degree_of(std::size_t pos) const {
    int id = vertices.at(pos).id;
    std::size_t deg = 0;
    for (const auto& [a, b] : edges)
        if (a == id || b == id) ++deg;
    return deg;
}

std::vector<std::size_t> ResolutionGraph::marked_positions() const {
    std::vector<std::size_t> marked;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].marked_s > 0) marked.push_back(i);
    std::sort(marked.begin(), marked.end(),
              [this](std::size_t a, std::size_t b) { return vertices[a].id < vertices[b].id; });
    return marked;
}

std::vector<Ray> subdivide_fan(const std::vector<Ray>& targets) {
    for (Ray t : targets) {
        if (t.x <= 0 || t.y <= 0)
            throw invalid_input_error("subdivide_fan: targets must have positive components");
        if (std::gcd(t.x, t.y) != 1)
            throw invalid_input_error("subdivide_fan: target (" + std::to_string(t.x) + "," +
                                      std::to_string(t.y) + ") is not primitive");
    }

    std::vector<Ray> rays{{1, 0}, {0, 1}};
    for (Ray target : targets) {
        while (std::find(rays.begin(), rays.end(), target) == rays.end()) {
            // locate the cone strictly containing the target, insert the mediant
            bool inserted = false;
            for (std::size_t i = 0; i + 1 < rays.size(); ++i) {
                if (det2(rays[i], target) > 0 && det2(target, rays[i + 1]) > 0) {
                    Ray mediant = rays[i] + rays[i + 1];
                    rays.insert(rays.begin() + static_cast<std::ptrdiff_t>(i) + 1, mediant);
                    inserted = true;
                    break;
                }
            }
            if (!inserted) throw std::logic_error("subdivide_fan: target escaped every cone");
        }
    }
    return rays;
}

ResolutionGraph chain_graph(const std::vector<Ray>& rays, const NewtonDiagram& diagram) {
    if (rays.size() < 2 || !(rays.front() == Ray{1, 0}) || !(rays.back() == Ray{0, 1}))
        throw invalid_input_error("chain_graph: ray sequence must run from (1,0) to (0,1)");
    for (std::size_t i = 0; i + 1 < rays.size(); ++i)
        if (det2(rays[i], rays[i + 1]) != 1)
            throw invalid_input_error("chain_graph: consecutive rays are not unimodular");

    ResolutionGraph graph;
    for (std::size_t i = 1; i + 1 < rays.size(); ++i) {
        Ray prev = rays[i - 1], cur = rays[i], next = rays[i + 1];
        long long c = det2(prev, next); // prev + next = c * cur in a unimodular chain
        if (c <= 0 || !(prev + next == Ray{c * cur.x, c * cur.y}))
            throw invalid_input_error("chain_graph: malformed ray sequence at position " +
                                      std::to_string(i));
        GraphVertex v;
        v.id = static_cast<int>(i);
        v.ray = cur;
        v.self_intersection = -c;
        graph.vertices.push_back(v);
        if (i >= 2) graph.edges.insert({static_cast<int>(i - 1), static_cast<int>(i)});
    }

    for (const Facet& facet : diagram.facets) {
        bool found = false;
        for (auto& v : graph.vertices)
            if (v.ray && *v.ray == facet.normal) {
                v.marked_s = facet.integer_length;
                found = true;
            }
        if (!found)
            throw invalid_input_error("chain_graph: fan does not contain the facet normal (" +
                                      std::to_string(facet.normal.x) + "," +
                                      std::to_string(facet.normal.y) + ")");
    }
    return graph;
}

IntMatrix intersection_matrix(const ResolutionGraph& graph) {
    const std::size_t n = graph.vertices.size();
    IntMatrix m(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = graph.vertices[i].self_intersection;
    for (const auto& [a, b] : graph.edges) {
        std::size_t i = graph.position_of(a), j = graph.position_of(b);
        m[i][j] = 1;
        m[j][i] = 1;
    }
    return m;
}

MultiplicityMatrix multiplicity_matrix(const ResolutionGraph& graph) {
    if (graph.vertices.empty()) throw invalid_input_error("multiplicity_matrix: empty graph");
    IntMatrix neg = intersection_matrix(graph);
    for (auto& row : neg)
        for (auto& entry : row) entry = -entry;
    if (!leading_minors_positive(neg))
        throw invalid_input_error("multiplicity_matrix: intersection matrix is not negative definite");
    auto inverse = exact_inverse(neg);
    if (!inverse) throw invalid_input_error("multiplicity_matrix: intersection matrix is singular");

    const std::size_t n = neg.size();
    MultiplicityMatrix result;
    result.entries.assign(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rat& value = (*inverse)[i][j];
            if (boost::multiprecision::denominator(value) != 1)
                throw invalid_input_error("multiplicity_matrix: non-integral entry (malformed graph)");
            result.entries[i][j] = boost::multiprecision::numerator(value);
            if (result.entries[i][j] < 1)
                throw invalid_input_error("multiplicity_matrix: non-positive entry (malformed graph)");
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (result.entries[i][j] != result.entries[j][i])
                throw invalid_input_error("multiplicity_matrix: result is not symmetric (malformed graph)");
    return result;
}

ResolutionGraph validate_graph(ResolutionGraph graph) {
    if (graph.vertices.empty()) throw invalid_input_error("resolution graph: no vertices");
    std::sort(graph.vertices.begin(), graph.vertices.end(),
              [](const GraphVertex& a, const GraphVertex& b) { return a.id < b.id; });
    for (std::size_t i = 0; i + 1 < graph.vertices.size(); ++i)
        if (graph.vertices[i].id == graph.vertices[i + 1].id)
            throw invalid_input_error("resolution graph: duplicate vertex id " +
                                      std::to_string(graph.vertices[i].id));
    for (const auto& v : graph.vertices) {
        if (v.self_intersection >= 0)
            throw invalid_input_error("resolution graph: vertex " + std::to_string(v.id) +
                                      " must have negative self-intersection");
        if (v.marked_s < 0)
            throw invalid_input_error("resolution graph: vertex " + std::to_string(v.id) +
                                      " has negative marking");
    }
    std::set<std::pair<int, int>> edges;
    for (auto [a, b] : graph.edges) {
        if (a == b)
            throw invalid_input_error("resolution graph: self-loop at vertex " + std::to_string(a));
        graph.position_of(a);
        graph.position_of(b);
        edges.insert({std::min(a, b), std::max(a, b)});
    }
    graph.edges = std::move(edges);

    // connectivity
    std::set<int> seen;
    std::queue<int> todo;
    todo.push(graph.vertices.front().id);
    seen.insert(graph.vertices.front().id);
    while (!todo.empty()) {
        int cur = todo.front();
        todo.pop();
        for (const auto& [a, b] : graph.edges) {
            int other = a == cur ? b : (b == cur ? a : cur);
            if (other != cur && seen.insert(other).second) todo.push(other);
        }
    }
    if (seen.size() != graph.vertices.size())
        throw invalid_input_error("resolution graph: graph is not connected");

    multiplicity_matrix(graph); // throws with the offending invariant
    return graph;
}

} // namespace divisor_series
