#pragma once

#include "divisor_series/laurent.hpp"

#include <optional>
#include <vector>

namespace divisor_series {

// Compact face of the Newton polygon with reduced supporting line
// a1*kx + a2*ky = c, gcd(a1,a2) = 1, a1,a2 > 0.  `first` is the endpoint
// with the smaller kx (larger ky), `second` the other one.
struct Facet {
    Exp2 normal;
    long long constant = 0;
    Exp2 first;
    Exp2 second;
    long long integer_length = 0;

    long long ell(Exp2 k) const { return normal.x * k.x + normal.y * k.y; }
};

struct NewtonDiagram {
    std::vector<Exp2> support;  // deduped, graded-lex sorted
    std::vector<Facet> facets;  // ordered by strictly increasing a2/a1
    Exp2 monomial_factor;       // componentwise minimum of the support
};

// Compact faces of conv(support + Z_{>=0}^2).  Support points must be
// componentwise non-negative and the set non-empty.
NewtonDiagram build_diagram(const std::vector<Exp2>& support);

// Diagram of the exponent support of f (f must be a genuine polynomial).
NewtonDiagram diagram_of(const LaurentPoly& f);

// min of ell over the terms of g; nullopt (= +infinity) for g = 0.
std::optional<long long> facet_value(const LaurentPoly& g, const Facet& facet);

// Sub-sum of the terms of g attaining facet_value; zero for g = 0.
LaurentPoly face_part(const LaurentPoly& g, const Facet& facet);

// Every facet's dehomogenized face polynomial is squarefree (equivalently,
// the face polynomials have no critical points off the axes).
bool check_nondegenerate(const LaurentPoly& f, const NewtonDiagram& diagram);

// Translate `facet`'s segment to touch both axes, then minimize `other`'s
// linear form over it.  The minimum sits at an endpoint.
long long translated_facet_min(const Facet& facet, const Facet& other);

// Facet lookup by primitive normal.
const Facet* find_facet(const NewtonDiagram& diagram, Exp2 normal);

} // namespace divisor_series
