#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace divisor_series {

// Exact arithmetic everywhere: series coefficients and matrix entries grow
// past 64 bits quickly (binomials, determinants), so arbitrary precision is
// not optional.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// C(n, k) as an exact integer; 0 for k < 0 or k > n.
Int binomial(long long n, long long k);

// Floor of the n-th root of a >= 0.
Int int_nth_root(const Int& a, int n);

// Exact rational n-th root, if one exists (for even n the positive root).
std::optional<Rat> rational_nth_root(const Rat& q, int n);

// Accepts "p", "-p", "p/q" and decimal strings like "0.25"; exact parse.
Rat parse_rational(const std::string& text);

// "p" or "p/q", canonical (denominator > 0, reduced).
std::string format_rational(const Rat& q);

} // namespace divisor_series
