#pragma once

#include "divisor_series/numeric.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace divisor_series {

// Dense univariate polynomial over the rationals.  Coefficient i is the
// coefficient of w^i; no trailing zeros are stored.
class Poly1 {
public:
    Poly1() = default;
    explicit Poly1(std::vector<Rat> coeffs);

    static Poly1 constant(const Rat& c);

    long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }
    Rat leading() const;

    void set_coeff(std::size_t i, const Rat& c);

    Poly1 operator+(const Poly1& other) const;
    Poly1 operator-(const Poly1& other) const;
    Poly1 operator*(const Poly1& other) const;
    bool operator==(const Poly1& other) const { return coeffs_ == other.coeffs_; }

    Rat eval(const Rat& w) const;
    Poly1 derivative() const;

    // Euclidean division; divisor must be nonzero.
    std::pair<Poly1, Poly1> divmod(const Poly1& divisor) const;

    // Exact quotient, or nullopt when the division leaves a remainder.
    std::optional<Poly1> divide_exact(const Poly1& divisor) const;

    // Monic gcd (Euclid); gcd(0,0) = 0.
    static Poly1 gcd(Poly1 a, Poly1 b);

    // No repeated roots: gcd with the derivative is constant.
    bool is_squarefree() const;

    // All rational roots with multiplicities, sorted ascending.  Requires a
    // nonzero polynomial; a root at 0 is reported like any other.
    std::vector<std::pair<Rat, int>> rational_roots() const;

private:
    void normalize();
    std::vector<Rat> coeffs_;
};

} // namespace divisor_series
