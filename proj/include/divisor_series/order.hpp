#pragma once

#include "divisor_series/laurent.hpp"
#include "divisor_series/newton.hpp"
#include "divisor_series/univariate.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace divisor_series {

// Value of an order function.  Exact values are Finite; AtLeast(b) records
// "at least b, possibly infinite" and is produced only at configured bounds
// (series truncations, reduction bounds).  The zero function gets Infinite.
class OrderValue {
public:
    enum class Kind { finite, at_least, infinite };

    static OrderValue finite(long long n) { return OrderValue(Kind::finite, n); }
    static OrderValue at_least(long long b) { return OrderValue(Kind::at_least, b); }
    static OrderValue infinite() { return OrderValue(Kind::infinite, 0); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::finite; }
    bool is_at_least() const { return kind_ == Kind::at_least; }
    bool is_infinite() const { return kind_ == Kind::infinite; }

    // Finite value or AtLeast bound; meaningless for Infinite.
    long long value() const { return value_; }

    // Conservative minimum: Finite(n) wins against AtLeast(b) only when
    // n <= b, otherwise all that is known is "at least b".
    static OrderValue min_of(const OrderValue& a, const OrderValue& b);

    bool operator==(const OrderValue& o) const { return kind_ == o.kind_ && (kind_ == Kind::infinite || value_ == o.value_); }
    bool operator!=(const OrderValue& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    OrderValue(Kind k, long long v) : kind_(k), value_(v) {}
    Kind kind_;
    long long value_;
};

// Truncated one-variable power series: coefficients are exact for exponents
// <= truncation and unknown above it.  No zero coefficients stored.
struct PowerSeries1 {
    std::map<long long, Rat> coeffs;
    long long truncation = 0;

    void add(long long e, const Rat& c);
    std::optional<long long> order() const; // smallest stored exponent
    bool operator==(const PowerSeries1& o) const { return coeffs == o.coeffs && truncation == o.truncation; }
};

// Truncated parametrization t -> (x(t), y(t)) of a curve branch; both
// components vanish at 0.
struct Branch {
    PowerSeries1 x;
    PowerSeries1 y;

    long long truncation() const { return std::min(x.truncation, y.truncation); }
};

// Branches whose strict transforms meet one and the same exceptional
// component; the group order function is the min over its branches.
struct BranchGroup {
    int index = 0; // 1-based position of the component among the marked ones
    std::vector<Branch> branches;
};

// p written as x^alpha y^beta * P(w) with w = x^{a2} y^{-a1} and P(0) != 0.
// Requires p quasihomogeneous for the facet's linear form.
struct Dehomogenized {
    Exp2 monomial;
    Poly1 poly;
};

Dehomogenized dehomogenize(const LaurentPoly& p, const Facet& facet);

// Inverse of dehomogenize.
LaurentPoly rehomogenize(const Dehomogenized& d, const Facet& facet);

// Laurent quotient h with g_face = h * f_face, when the dehomogenized
// polynomial of f_face divides that of g_face; nullopt otherwise.
std::optional<LaurentPoly> face_divide(const LaurentPoly& g_face, const LaurentPoly& f_face,
                                       const Facet& facet);

// Newton order function by iterated face division: raise the facet value of
// g by subtracting Laurent multiples of f while the face parts divide.  The
// facet of f must be nondegenerate; values above `bound` come back as
// AtLeast(bound).
OrderValue newton_order(LaurentPoly g, const LaurentPoly& f, const Facet& facet, long long bound);

// Order of vanishing of g composed with the branch parametrization.
// Certifies Finite(n) only for n <= truncation, else AtLeast(truncation+1).
OrderValue branch_order(const LaurentPoly& g, const Branch& branch);

OrderValue group_order(const LaurentPoly& g, const BranchGroup& group);

// Rational Newton-Puiseux specialization for one facet of a nondegenerate f:
// one branch x = t^{a1}, y = c t^{a2} + ... per root of the dehomogenized
// face polynomial, exact modulo t^{T+1}.  Throws scope_error when a needed
// root (or its a1-th root) is not rational, invalid_input_error on repeated
// roots.
std::vector<Branch> puiseux_lift(const LaurentPoly& f, const Facet& facet, long long truncation);

// g(x(t), y(t)) truncated at the branch's certification level.
PowerSeries1 compose_on_branch(const LaurentPoly& g, const Branch& branch);

} // namespace divisor_series
