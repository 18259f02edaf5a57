#include "divisor_series/linalg.hpp"

#include "divisor_series/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace divisor_series {

namespace {

// Bareiss-style one-step division is exact by the determinantal identity;
// a failed division means corrupted state, not bad input.
Int exact_div(const Int& num, const Int& den) {
    if (den == 0 || num % den != 0) throw std::logic_error("fraction-free elimination: inexact division");
    return num / den;
}

} // namespace

std::size_t rank_bareiss(IntMatrix m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    Int prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                m[i][j] = exact_div(m[rank][col] * m[i][j] - m[i][col] * m[rank][j], prev);
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

bool leading_minors_positive(const IntMatrix& m) {
    const std::size_t n = m.size();
    IntMatrix a = m;
    Int prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] <= 0) return false; // Bareiss pivot = (k+1)-st leading minor
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return true;
}

std::optional<RatMatrix> exact_inverse(const IntMatrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw invalid_input_error("exact_inverse: matrix is not square");

    // fraction-free Gauss-Jordan on [A | I]; the left block ends up diagonal
    IntMatrix a(n, std::vector<Int>(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
        a[i][n + i] = 1;
    }
    Int prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][k] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[k], a[pivot]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            for (std::size_t j = 0; j < 2 * n; ++j) {
                if (j == k) continue;
                a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    RatMatrix inv(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = Rat(a[i][n + j], a[i][i]);
    return inv;
}

} // namespace divisor_series
