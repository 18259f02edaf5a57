#pragma once

#include "divisor_series/numeric.hpp"

#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace divisor_series {

// Exponent pair of a monomial x^kx y^ky.  Negative entries are allowed in
// Laurent contexts; Newton-diagram supports require both non-negative.
struct Exp2 {
    long long x = 0;
    long long y = 0;

    friend Exp2 operator+(Exp2 a, Exp2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Exp2 operator-(Exp2 a, Exp2 b) { return {a.x - b.x, a.y - b.y}; }
    friend bool operator==(Exp2 a, Exp2 b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(Exp2 a, Exp2 b) { return !(a == b); }
};

// Graded lexicographic: total degree first, then x.  Canonical term order
// for all iteration and serialization.
struct GradedLexExp2 {
    bool operator()(Exp2 a, Exp2 b) const {
        long long da = a.x + a.y, db = b.x + b.y;
        if (da != db) return da < db;
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

// Finite sum of c * x^kx y^ky with exact rational coefficients and integer
// (possibly negative) exponents.  Zero coefficients are never stored.
class LaurentPoly {
public:
    using TermMap = std::map<Exp2, Rat, GradedLexExp2>;

    LaurentPoly() = default;
    LaurentPoly(std::initializer_list<std::pair<Exp2, Rat>> terms);

    static LaurentPoly monomial(Exp2 e, const Rat& c);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rat coeff(Exp2 e) const;
    void add_term(Exp2 e, const Rat& c);

    // True iff every exponent is componentwise non-negative.
    bool is_polynomial() const;

    // Max of kx + ky over terms; -1 for the zero polynomial.
    long long total_degree() const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& other) const;
    LaurentPoly operator-(const LaurentPoly& other) const;
    LaurentPoly operator*(const LaurentPoly& other) const;

    bool operator==(const LaurentPoly& other) const { return terms_ == other.terms_; }
    bool operator!=(const LaurentPoly& other) const { return !(*this == other); }

    LaurentPoly derivative_y() const;

    std::string to_string() const;

private:
    TermMap terms_;
};

} // namespace divisor_series
