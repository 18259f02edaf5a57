#pragma once

#include "divisor_series/laurent.hpp"
#include "divisor_series/linalg.hpp"
#include "divisor_series/newton.hpp"

#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace divisor_series {

// Primitive lattice direction (gcd 1, non-negative, not both zero).
using Ray = Exp2;

struct GraphVertex {
    int id = 0;
    std::optional<Ray> ray;          // present for vertices of toric chains
    long long self_intersection = 0; // negative
    long long marked_s = 0;          // > 0 marks a filtration component
};

// Dual graph of an embedded resolution: vertices are exceptional components,
// edges are intersection points.  chi of the punctured component is
// 2 - degree.  Marked vertices carry the filtration order functions; their
// filtration indices 1..r follow ascending vertex id.
struct ResolutionGraph {
    std::vector<GraphVertex> vertices;
    std::set<std::pair<int, int>> edges; // normalized (smaller id, larger id)

    std::size_t position_of(int id) const;
    std::size_t degree_of(std::size_t pos) const;
    long long chi_of(std::size_t pos) const { return 2 - static_cast<long long>(degree_of(pos)); }

    // positions of marked vertices, filtration order
    std::vector<std::size_t> marked_positions() const;
};

// Symmetric positive matrix m = (-intersection matrix)^{-1}; entry (sigma,
// delta) is the order of a curvette at component sigma along component delta.
struct MultiplicityMatrix {
    IntMatrix entries;
};

// Unimodular subdivision of the first quadrant by repeated mediant
// insertion: starts (1,0), ends (0,1), consecutive determinants 1, contains
// every target.  Targets must be primitive with both components positive.
std::vector<Ray> subdivide_fan(const std::vector<Ray>& targets);

// Resolution chain for a fan: one vertex per interior ray, path edges,
// self-intersection -c from prev + next = c * ray, markings from the facet
// integer lengths of the diagram.
ResolutionGraph chain_graph(const std::vector<Ray>& rays, const NewtonDiagram& diagram);

IntMatrix intersection_matrix(const ResolutionGraph& graph);

MultiplicityMatrix multiplicity_matrix(const ResolutionGraph& graph);

// Full invariant check for (possibly hand-supplied) graphs: connectivity,
// negative definiteness, integrality/positivity of the multiplicity matrix.
// Returns the graph with vertices sorted by id.
ResolutionGraph validate_graph(ResolutionGraph graph);

} // namespace divisor_series
