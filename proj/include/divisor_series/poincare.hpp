#pragma once

#include "divisor_series/order.hpp"
#include "divisor_series/resolution.hpp"
#include "divisor_series/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace divisor_series {

// A multi-index filtration given by its order functions: group i contributes
// v_i(g) = min over its branches of the vanishing order of g.  Branch
// truncations must be >= bound.
struct FiltrationBox {
    int arity = 0;
    long long bound = 0;
    std::vector<BranchGroup> groups;
};

// Monomial basis of polynomials of total degree <= degree (the jets modulo
// the (degree+1)-st power of the maximal ideal).
struct JetSpace {
    long long degree = 0;
    std::vector<Exp2> basis; // graded-lex sorted
};

JetSpace make_jet_space(long long degree);

// Closed product form over all exceptional components:
//   prod_sigma (1 - t^{m_sigma})^{-chi(punctured E_sigma)}
//   * prod_{marked i} (1 - t^{s_i m_i}).
ProductForm product_formula(const ResolutionGraph& graph, const MultiplicityMatrix& m);

// Specialization valid when every marking is 1: chi counts the component
// minus neighbours minus the strict transform points.
ProductForm curve_complement_formula(const ResolutionGraph& graph, const MultiplicityMatrix& m);

// Newton-diagram form: prod (1 - t^{s_i m_i}) / ((1-t^{v(x)}) (1-t^{v(y)}))
// with v(x), v(y) read off the facet normals.  Requires a toric chain graph.
ProductForm newton_diagram_formula(const NewtonDiagram& diagram, const ResolutionGraph& graph,
                                   const MultiplicityMatrix& m);

// Dimension of the subspace of jets vanishing to order >= v_i along every
// branch of every group; exact rank computation.
long long jet_dim(const FiltrationBox& box, const ExpVec& v, const JetSpace& jets);

// Coefficientwise Euler-characteristic integral over the projectivized jet
// space: coefficient of t^v is the alternating sum of jet_dim(v + e_I) over
// subsets I of the index set.  Jet degree = box bound.
TruncatedSeries oracle_series(const FiltrationBox& box);

struct ComparisonReport {
    bool agree = false;
    std::optional<ExpVec> first_mismatch;
    std::optional<Int> formula_coeff;
    std::optional<Int> oracle_coeff;

    std::string to_string() const;
};

// Expands the form in the oracle's box and reports the first differing
// exponent in graded-lex order, if any.
ComparisonReport compare_series(const ProductForm& formula, const TruncatedSeries& oracle);
ComparisonReport compare_expansions(const TruncatedSeries& a, const TruncatedSeries& b);

} // namespace divisor_series
