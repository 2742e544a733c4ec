#pragma once

/* Exact resultants of bivariate polynomials.  One variable is eliminated
 * through the Sylvester matrix, whose entries are univariate polynomials
 * in the survivor; the determinant is taken by fraction-free elimination,
 * so every division is exact and no rational-function arithmetic appears.
 */

#include <cstddef>
#include <vector>

#include "newtonma/polynomial.hpp"

namespace newtonma {

/* Univariate polynomial over the rationals: ascending coefficients with a
 * nonzero back; the zero polynomial is the empty vector. */
using QPoly = std::vector<Rational>;

namespace qp {

inline void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline bool is_zero(const QPoly& p) { return p.empty(); }

inline int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

inline QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly out(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    trim(out);
    return out;
}

inline QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

/* Quotient of an exact division; complains if a remainder survives, which
 * would mean the fraction-free elimination invariant broke. */
inline QPoly div_exact(const QPoly& a, const QPoly& b) {
    if (b.empty()) throw precondition_error("polynomial division by zero");
    QPoly rem = a;
    QPoly quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (!rem.empty() && rem.size() >= b.size()) {
        const std::size_t k = rem.size() - b.size();
        const Rational c = rem.back() / b.back();
        quot[k] = c;
        for (std::size_t i = 0; i < b.size(); ++i) rem[k + i] -= c * b[i];
        trim(rem);
    }
    if (!rem.empty()) throw precondition_error("inexact polynomial division");
    trim(quot);
    return quot;
}

inline Rational eval(const QPoly& p, const Rational& x) {
    Rational acc(0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

}  // namespace qp

/* Coefficients of p viewed as a polynomial in variable `var`; entry j is
 * the coefficient of var^j, itself a polynomial in the other variable. */
inline std::vector<QPoly> coefficients_in(const Polynomial& p, int var) {
    if (p.n_vars != 2) throw input_error("bivariate polynomial expected");
    if (p.is_laurent())
        throw precondition_error("negative exponents are not supported here");
    const int other = 1 - var;
    std::vector<QPoly> out;
    for (const auto& [e, c] : p.terms) {
        const std::size_t dv = static_cast<std::size_t>(e[static_cast<std::size_t>(var)]);
        const std::size_t d_other = static_cast<std::size_t>(e[static_cast<std::size_t>(other)]);
        if (out.size() <= dv) out.resize(dv + 1);
        QPoly& q = out[dv];
        if (q.size() <= d_other) q.resize(d_other + 1, Rational(0));
        q[d_other] += c;
    }
    for (QPoly& q : out) qp::trim(q);
    while (!out.empty() && out.back().empty()) out.pop_back();
    return out;
}

namespace detail {

/* Determinant of a matrix with univariate-polynomial entries, by Bareiss
 * elimination: every 2x2 cross-product is exactly divisible by the
 * previous pivot, so entries stay polynomials throughout. */
inline QPoly poly_determinant(std::vector<std::vector<QPoly>> m) {
    const std::size_t dim = m.size();
    if (dim == 0) return {Rational(1)};
    int sign = 1;
    QPoly prev{Rational(1)};
    for (std::size_t k = 0; k + 1 < dim; ++k) {
        if (qp::is_zero(m[k][k])) {
            std::size_t swap_row = k;
            for (std::size_t l = k + 1; l < dim; ++l)
                if (!qp::is_zero(m[l][k])) { swap_row = l; break; }
            if (swap_row == k) return {};  // zero column: singular
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < dim; ++i) {
            for (std::size_t j = k + 1; j < dim; ++j)
                m[i][j] = qp::div_exact(
                    qp::sub(qp::mul(m[k][k], m[i][j]), qp::mul(m[i][k], m[k][j])),
                    prev);
            m[i][k] = {};
        }
        prev = m[k][k];
    }
    QPoly det = m[dim - 1][dim - 1];
    if (sign < 0)
        for (Rational& c : det) c = -c;
    return det;
}

}  // namespace detail

/* Resultant of p1 and p2 with respect to variable `var`, returned as a
 * univariate polynomial in the other variable.  Identically zero exactly
 * when the inputs share a factor involving the eliminated variable. */
inline QPoly sylvester_resultant(const Polynomial& p1, const Polynomial& p2,
                                 int var) {
    if (p1.is_zero() || p2.is_zero()) return {};
    const std::vector<QPoly> a = coefficients_in(p1, var);
    const std::vector<QPoly> b = coefficients_in(p2, var);
    const int d1 = static_cast<int>(a.size()) - 1;
    const int d2 = static_cast<int>(b.size()) - 1;
    if (d1 == 0 && d2 == 0) return {Rational(1)};
    if (d1 == 0) {  // Res(const-in-var, q) = a0 ^ deg q
        QPoly out{Rational(1)};
        for (int i = 0; i < d2; ++i) out = qp::mul(out, a[0]);
        return out;
    }
    if (d2 == 0) {
        QPoly out{Rational(1)};
        for (int i = 0; i < d1; ++i) out = qp::mul(out, b[0]);
        return out;
    }

    const std::size_t dim = static_cast<std::size_t>(d1 + d2);
    std::vector<std::vector<QPoly>> syl(dim, std::vector<QPoly>(dim));
    for (int row = 0; row < d2; ++row)           // shifted copies of p1
        for (int j = 0; j <= d1; ++j)
            syl[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + j)] =
                a[static_cast<std::size_t>(d1 - j)];
    for (int row = 0; row < d1; ++row)           // shifted copies of p2
        for (int j = 0; j <= d2; ++j)
            syl[static_cast<std::size_t>(d2 + row)][static_cast<std::size_t>(row + j)] =
                b[static_cast<std::size_t>(d2 - j)];
    return detail::poly_determinant(std::move(syl));
}

}  // namespace newtonma
