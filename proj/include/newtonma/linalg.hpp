#pragma once

/* Dense exact linear algebra on small matrices (n <= 7 in practice):
   Gaussian elimination for determinant, inverse, and rank.  Rows are
   rational vectors; no pivoting heuristics are needed beyond "first
   nonzero" because arithmetic is exact. */

#include <cstddef>
#include <vector>

#include "newtonma/rational.hpp"

namespace newtonma {

using Matrix = std::vector<Vec>;  // row major

inline Rational determinant(Matrix m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

inline std::size_t rank(Matrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rk = 0;
    for (std::size_t col = 0; col < cols && rk < rows; ++col) {
        std::size_t piv = rk;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rk]);
        for (std::size_t r = rk + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            const Rational f = m[r][col] / m[rk][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[rk][c];
        }
        ++rk;
    }
    return rk;
}

/* Throws on singular input; callers only invert bases they proved full rank. */
inline Matrix inverse(Matrix m) {
    const std::size_t n = m.size();
    Matrix inv(n, Vec(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw precondition_error("singular matrix");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        const Rational d = m[col][col];
        for (std::size_t c = 0; c < n; ++c) {
            m[col][c] /= d;
            inv[col][c] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (std::size_t c = 0; c < n; ++c) {
                m[r][c] -= f * m[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

/* Solves A x = b for square nonsingular A. */
inline Vec solve(const Matrix& a, const Vec& b) {
    const Matrix inv = inverse(a);
    Vec x(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) x[i] += inv[i][j] * b[j];
    return x;
}

}  // namespace newtonma
