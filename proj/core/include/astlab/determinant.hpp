#pragma once

#include "astlab/eisenstein.hpp"
#include "astlab/numeric.hpp"

#include <vector>

namespace astlab {

inline Rational ring_exact_div(const Rational& a, const Rational& b) { return a / b; }

inline BigInt ring_exact_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if (q * b != a) throw InternalError("integer division not exact in Bareiss step");
    return q;
}

inline Eisenstein ring_exact_div(const Eisenstein& a, const Eisenstein& b) {
    return a.exact_div(b);
}

// Fraction-free Bareiss determinant over an integral domain. All divisions
// performed are exact (the intermediates are minors of the input matrix).
template <typename Ring>
Ring det_exact(std::vector<std::vector<Ring>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) throw ValidationError("det_exact requires a square matrix");
    }
    if (n == 0) return Ring(1);

    Ring sign(1);
    Ring prev(1);
    const Ring zero(0);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == zero) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == zero) ++pivot;
            if (pivot == n) return Ring(0);
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = ring_exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            }
            m[i][k] = zero;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace astlab
