#pragma once

#include "divisor_series/numeric.hpp"

#include <optional>
#include <vector>

namespace divisor_series {

using IntMatrix = std::vector<std::vector<Int>>;
using RatMatrix = std::vector<std::vector<Rat>>;

// Rank by fraction-free (Bareiss) elimination with row pivoting.
std::size_t rank_bareiss(IntMatrix m);

// Sylvester test: all leading principal minors positive.  The Bareiss pivots
// are exactly those minors, so a zero or negative pivot decides.
bool leading_minors_positive(const IntMatrix& m);

// Exact inverse by fraction-free Gauss-Jordan (Montante); nullopt when
// singular.
std::optional<RatMatrix> exact_inverse(const IntMatrix& m);

} // namespace divisor_series
