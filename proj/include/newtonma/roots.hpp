#pragma once

/* Root counting for bivariate polynomial systems.
 *
 * The affine count is exact: after an integer shear z1 = w1 + c*w2 chosen
 * so that both polynomials keep a constant leading coefficient in w2, the
 * resultant with respect to w2 has degree equal to the number of common
 * zeros counted with multiplicity, and that degree is read off an exact
 * resultant.  Floating point enters only afterwards, to locate the zeros
 * and decide which of them avoid the coordinate axes; that classification
 * carries a certified flag which is withdrawn whenever clusters, residuals
 * or borderline magnitudes leave room for doubt.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "newtonma/resultant.hpp"

namespace newtonma {

struct RootCount {
    long long affine = 0;  // common zeros in C^2, with multiplicity
    long long torus = 0;   // those with both coordinates nonzero
    bool certified = true; // numeric classification free of close calls
};

namespace detail {

using Cplx = std::complex<double>;

inline int total_degree(const Polynomial& p) {
    int d = 0;
    for (const auto& [e, c] : p.terms) d = std::max(d, e[0] + e[1]);
    return d;
}

/* The coefficient of w2^d after the shear z1 = w1 + c*w2 is the top form
 * evaluated at (c, 1); the shear is usable once that is nonzero for both
 * polynomials, because deg_{w2} then equals the total degree and the
 * leading coefficient is a nonzero constant. */
inline bool shear_keeps_leading_constant(const Polynomial& p, long c) {
    const int d = total_degree(p);
    Rational top(0);
    for (const auto& [e, coef] : p.terms) {
        if (e[0] + e[1] != d) continue;
        Rational pw(1);
        for (int i = 0; i < e[0]; ++i) pw *= c;
        top += coef * pw;
    }
    return top != 0;
}

inline Polynomial apply_shear(const Polynomial& p, long c) {
    if (c == 0) return p;
    Polynomial out{2, {}};
    for (const auto& [e, coef] : p.terms) {
        Rational binom(1);  // C(e0, k) * c^(e0 - k), updated incrementally
        for (int i = 0; i < e[0]; ++i) binom *= c;
        for (int k = 0; k <= e[0]; ++k) {
            add_term(out, {k, e[0] - k + e[1]}, coef * binom);
            if (k < e[0]) {
                binom *= e[0] - k;
                binom /= (k + 1) * c;
            }
        }
    }
    return out;
}

struct AberthResult {
    std::vector<Cplx> roots;
    bool converged = false;
};

/* Simultaneous Aberth-Ehrlich iteration; coefficients ascending, nonzero
 * leading coefficient expected. */
inline AberthResult aberth_roots(std::vector<Cplx> a) {
    AberthResult res;
    while (a.size() > 1 && std::abs(a.back()) == 0.0) a.pop_back();
    const int deg = static_cast<int>(a.size()) - 1;
    if (deg < 1) {
        res.converged = true;
        return res;
    }
    for (Cplx& c : a) c /= a.back();

    double radius = 0.0;
    for (int i = 0; i < deg; ++i) radius = std::max(radius, std::abs(a[static_cast<std::size_t>(i)]));
    radius = 1.0 + radius;  // Cauchy bound on root moduli

    std::vector<Cplx>& z = res.roots;
    z.resize(static_cast<std::size_t>(deg));
    for (int j = 0; j < deg; ++j) {
        const double ang = 2.0 * M_PI * j / deg + 0.4;  // offset breaks conjugate symmetry
        z[static_cast<std::size_t>(j)] = radius * Cplx(std::cos(ang), std::sin(ang));
    }

    const auto eval_both = [&a, deg](Cplx x, Cplx& val, Cplx& der) {
        val = a[static_cast<std::size_t>(deg)];
        der = 0.0;
        for (int i = deg - 1; i >= 0; --i) {
            der = der * x + val;
            val = val * x + a[static_cast<std::size_t>(i)];
        }
    };

    for (int iter = 0; iter < 600; ++iter) {
        bool settled = true;
        for (int j = 0; j < deg; ++j) {
            Cplx val, der;
            eval_both(z[static_cast<std::size_t>(j)], val, der);
            if (std::abs(val) == 0.0) continue;
            if (std::abs(der) == 0.0) {  // stationary start; nudge off it
                z[static_cast<std::size_t>(j)] += 1e-8 * (1.0 + std::abs(z[static_cast<std::size_t>(j)]));
                settled = false;
                continue;
            }
            const Cplx newton = val / der;
            Cplx repulsion = 0.0;
            for (int k = 0; k < deg; ++k)
                if (k != j) repulsion += 1.0 / (z[static_cast<std::size_t>(j)] - z[static_cast<std::size_t>(k)]);
            const Cplx denom = 1.0 - newton * repulsion;
            const Cplx step = std::abs(denom) == 0.0 ? newton : newton / denom;
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
                z[static_cast<std::size_t>(j)] += 1e-8 * (1.0 + std::abs(z[static_cast<std::size_t>(j)]));
                settled = false;
                continue;
            }
            z[static_cast<std::size_t>(j)] -= step;
            if (std::abs(step) > 5e-14 * (1.0 + std::abs(z[static_cast<std::size_t>(j)])))
                settled = false;
        }
        if (settled) {
            res.converged = true;
            break;
        }
    }
    for (int polish = 0; polish < 3; ++polish)
        for (Cplx& root : z) {
            Cplx val, der;
            eval_both(root, val, der);
            if (std::abs(der) > 0.0 && std::isfinite(std::abs(val / der)))
                root -= val / der;
        }
    return res;
}

struct Cluster {
    Cplx center;
    long long size = 0;
};

/* Single-linkage clusters at absolute tolerance tol; centers are means. */
inline std::vector<Cluster> cluster_points(const std::vector<Cplx>& pts, double tol) {
    const std::size_t m = pts.size();
    std::vector<std::size_t> parent(m);
    for (std::size_t i = 0; i < m; ++i) parent[i] = i;
    const auto find = [&parent](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (std::abs(pts[i] - pts[j]) <= tol) parent[find(i)] = find(j);
    std::vector<Cluster> out;
    std::vector<long long> index(m, -1);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t r = find(i);
        if (index[r] < 0) {
            index[r] = static_cast<long long>(out.size());
            out.push_back({Cplx(0.0, 0.0), 0});
        }
        Cluster& cl = out[static_cast<std::size_t>(index[r])];
        cl.center += pts[i];
        cl.size += 1;
    }
    for (Cluster& cl : out) cl.center /= static_cast<double>(cl.size);
    return out;
}

inline Cplx eval_qpoly(const QPoly& p, Cplx x) {
    Cplx acc = 0.0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + to_double(p[i]);
    return acc;
}

/* Magnitude scale of an evaluation: the same Horner sum with every term
 * replaced by its absolute value, to judge residuals relatively. */
inline double eval_scale(const Polynomial& p, Cplx z1, Cplx z2) {
    double acc = 0.0;
    const double m1 = std::abs(z1), m2 = std::abs(z2);
    for (const auto& [e, coef] : p.terms)
        acc += std::abs(to_double(coef)) * std::pow(m1, e[0]) * std::pow(m2, e[1]);
    return acc;
}

}  // namespace detail

/* Number of common zeros of p1 and p2 in C^2 and in the torus (C*)^2.
 * Throws precondition_error when the common zero set has positive
 * dimension, and input_error when the system exceeds the resultant caps.
 * tol is the clustering/axis tolerance for the numeric classification. */
inline RootCount count_roots_bivariate(const Polynomial& p1, const Polynomial& p2,
                                       double tol = 1e-8) {
    using detail::Cplx;
    if (p1.n_vars != 2 || p2.n_vars != 2)
        throw input_error("the root counter handles bivariate systems");
    if (p1.is_zero() || p2.is_zero())
        throw precondition_error("zero polynomial in the system");
    if (p1.is_laurent() || p2.is_laurent())
        throw precondition_error("negative exponents have no affine zero count");

    const int d1 = detail::total_degree(p1);
    const int d2 = detail::total_degree(p2);
    if (d1 == 0 || d2 == 0) return {0, 0, true};  // a nonzero constant kills all zeros
    if (d1 + d2 > 64) throw input_error("system too large for the resultant cap");

    /* Candidate shears 0, 1, -1, 2, -2, ...: each bad c is a root of one of
     * two top forms, so d1 + d2 + 1 candidates always contain a good one. */
    std::vector<long> shears;
    for (long k = 0; static_cast<int>(shears.size()) <= d1 + d2; ++k) {
        if (k == 0) shears.push_back(0);
        else {
            shears.push_back(k);
            shears.push_back(-k);
        }
    }

    bool have_fallback = false;
    RootCount fallback;
    int attempts = 0;
    for (const long c : shears) {
        if (attempts >= 5) break;
        if (!detail::shear_keeps_leading_constant(p1, c) ||
            !detail::shear_keeps_leading_constant(p2, c))
            continue;
        ++attempts;

        const Polynomial q1 = detail::apply_shear(p1, c);
        const Polynomial q2 = detail::apply_shear(p2, c);
        const QPoly res = sylvester_resultant(q1, q2, 1);
        if (qp::is_zero(res))
            throw precondition_error("positive-dimensional or degenerate system");
        if (qp::degree(res) > 64)
            throw input_error("resultant degree exceeds the cap");

        RootCount count;
        count.affine = qp::degree(res);
        if (count.affine == 0) return {0, 0, true};

        std::vector<Cplx> rc(res.size());
        for (std::size_t i = 0; i < res.size(); ++i) rc[i] = to_double(res[i]);
        const detail::AberthResult solved = detail::aberth_roots(rc);
        if (!solved.converged) count.certified = false;

        const std::vector<detail::Cluster> alphas = detail::cluster_points(solved.roots, tol);
        for (std::size_t i = 0; i < alphas.size(); ++i)
            for (std::size_t j = i + 1; j < alphas.size(); ++j)
                if (std::abs(alphas[i].center - alphas[j].center) < 10.0 * tol)
                    count.certified = false;

        const std::vector<QPoly> fiber_coeffs = coefficients_in(q1, 1);
        for (const detail::Cluster& al : alphas) {
            std::vector<Cplx> fc(fiber_coeffs.size());
            for (std::size_t i = 0; i < fiber_coeffs.size(); ++i)
                fc[i] = detail::eval_qpoly(fiber_coeffs[i], al.center);
            const detail::AberthResult fiber = detail::aberth_roots(fc);
            if (!fiber.converged) count.certified = false;
            const std::vector<detail::Cluster> betas = detail::cluster_points(fiber.roots, tol);

            /* Keep the fiber points that also annihilate q2, judged by the
             * relative residual; the middle ground is inconclusive. */
            std::vector<detail::Cluster> accepted;
            for (const detail::Cluster& be : betas) {
                const double scale = detail::eval_scale(q2, al.center, be.center) + 1e-300;
                const double rel = std::abs(evaluate(q2, {al.center, be.center})) / scale;
                if (rel <= 1e-6) accepted.push_back(be);
                else if (rel <= 1e-2) count.certified = false;
            }
            if (accepted.empty()) {
                count.certified = false;  // the resultant says this alpha matters
                continue;
            }

            /* Multiplicity of alpha in the resultant, distributed over the
             * accepted fiber points.  Fiber cluster sizes need not match
             * intersection multiplicities, so only clean splits certify. */
            const long long mu = al.size;
            std::vector<long long> mult(accepted.size(), 0);
            long long cluster_total = 0;
            for (const detail::Cluster& be : accepted) cluster_total += be.size;
            if (cluster_total == mu) {
                for (std::size_t i = 0; i < accepted.size(); ++i) mult[i] = accepted[i].size;
            } else if (accepted.size() == 1) {
                mult[0] = mu;
            } else {
                count.certified = false;
                long long left = mu;  // best effort: spread evenly, keep the sum
                for (std::size_t i = 0; i < accepted.size(); ++i) {
                    mult[i] = left / static_cast<long long>(accepted.size() - i);
                    left -= mult[i];
                }
            }

            for (std::size_t i = 0; i < accepted.size(); ++i) {
                const Cplx z1 = al.center + static_cast<double>(c) * accepted[i].center;
                const Cplx z2 = accepted[i].center;
                const double m = std::min(std::abs(z1), std::abs(z2));
                if (m > tol) count.torus += mult[i];
                if (m > tol && m < 1000.0 * tol) count.certified = false;
            }
        }

        if (count.certified) return count;
        if (!have_fallback) {
            fallback = count;
            have_fallback = true;
        }
    }
    if (have_fallback) return fallback;
    throw precondition_error("no usable shear found");  // unreachable by construction
}

}  // namespace newtonma
