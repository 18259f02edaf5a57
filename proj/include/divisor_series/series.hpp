#pragma once

#include "divisor_series/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace divisor_series {

// Multi-exponent (v_1,...,v_r) of a monomial t_1^{v_1}...t_r^{v_r}.
using ExpVec = std::vector<long long>;

struct GradedLexVec {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

// Signed product of binomial factors: prod (1 - t^m)^e with m != 0 and
// e != 0; factors with equal exponent vector are merged.
class ProductForm {
public:
    explicit ProductForm(int arity) : arity_(arity) {}

    int arity() const { return arity_; }
    const std::map<ExpVec, long long>& factors() const { return factors_; }

    // multiply by (1 - t^m)^e
    void push(const ExpVec& m, long long e);

    std::string to_string() const;

private:
    int arity_;
    std::map<ExpVec, long long> factors_;
};

// Exact integer coefficients on the box 0 <= v_i <= bound; canonical
// graded-lex iteration order.
class TruncatedSeries {
public:
    TruncatedSeries(int arity, long long bound) : arity_(arity), bound_(bound) {}

    static TruncatedSeries one(int arity, long long bound);

    int arity() const { return arity_; }
    long long bound() const { return bound_; }
    const std::map<ExpVec, Int, GradedLexVec>& coeffs() const { return coeffs_; }

    Int coeff(const ExpVec& e) const;
    void add(const ExpVec& e, const Int& c); // drops exponents outside the box

    bool operator==(const TruncatedSeries& o) const {
        return arity_ == o.arity_ && bound_ == o.bound_ && coeffs_ == o.coeffs_;
    }

    std::string to_string() const;

private:
    int arity_;
    long long bound_;
    std::map<ExpVec, Int, GradedLexVec> coeffs_;
};

// Exact expansion of the product form on the box [0, bound]^r.
TruncatedSeries expand(const ProductForm& form, long long bound);

// Convolution inside the common box (bound = min of the two bounds).
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);

// Coefficientwise comparison over the common box.
bool equal_in_box(const TruncatedSeries& a, const TruncatedSeries& b);

// Brute-force sum of t^{(l_1+...+l_s) m} over tuples of non-negative
// integers with at least one l_j = 0, truncated to the box.  Deliberately
// independent of expand().
TruncatedSeries grid_sum_identity(const ExpVec& m, int s, long long bound);

} // namespace divisor_series
