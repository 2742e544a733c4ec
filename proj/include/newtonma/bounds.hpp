#pragma once

/* Upper bounds for total masses of mixed Monge-Ampere currents attached to
 * polynomial growth data, each consuming nothing but indicators:
 *
 *   bezout         delta * product of total types
 *   mixed_volume   delta * n! * MV(bodies, padded with unit simplices)
 *   permanent      delta * n! * per(per-variable types)
 *   directional    delta * inf over positive directions a of
 *                  prod_j psi_j(a) / prod_k a_k   (numeric)
 *   kouchnirenko   delta * n! * Vol(body), for a single repeated body
 *
 * The first four are ordered: mixed_volume is the sharpest, bezout and
 * permanent relax it through simplex and box enclosures, and directional
 * interpolates (its infimum is attained at a = (1,...,1) for the bezout
 * enclosure).  delta is an opaque positive multiplier for mass carried by
 * an ambient current; the default 1 is the plain zero-counting case.
 */

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "newtonma/indicator.hpp"
#include "newtonma/volume.hpp"

namespace newtonma {

inline Rational bezout_bound(const std::vector<Rational>& sigmas,
                             const Rational& delta_t = Rational(1)) {
    if (sigmas.empty()) throw input_error("bezout bound needs at least one type");
    Rational out = delta_t;
    for (const Rational& s : sigmas) {
        if (s <= 0)
            throw precondition_error("bezout bound requires positive types");
        out *= s;
    }
    return out;
}

/* Fewer bodies than variables is allowed: the remaining slots are filled
 * with the unit simplex, the body of plain logarithmic growth. */
inline Rational mixed_volume_bound(const std::vector<Indicator>& inds, int n,
                                   const Rational& delta_t = Rational(1)) {
    if (inds.empty())
        throw precondition_error("mixed volume bound needs at least one indicator");
    if (static_cast<int>(inds.size()) > n)
        throw precondition_error("more indicators than variables");
    std::vector<Polytope> bodies;
    bodies.reserve(static_cast<std::size_t>(n));
    for (const Indicator& ind : inds) {
        if (ind.n_vars() != n)
            throw input_error("indicator dimension mismatch");
        bodies.push_back(ind.theta());
    }
    const Polytope simplex = unit_simplex(n);
    while (static_cast<int>(bodies.size()) < n) bodies.push_back(simplex);
    return delta_t * Rational(factorial(n)) * mixed_volume(bodies);
}

/* Permanent of a square rational matrix, by Ryser's inclusion-exclusion. */
inline Rational permanent(const Matrix& m) {
    const std::size_t n = m.size();
    Rational total(0);
    for (std::size_t s = 1; s < (std::size_t{1} << n); ++s) {
        Rational prod(1);
        for (std::size_t j = 0; j < n; ++j) {
            Rational row_sum(0);
            for (std::size_t k = 0; k < n; ++k)
                if (s & (std::size_t{1} << k)) row_sum += m[j][k];
            prod *= row_sum;
        }
        const std::size_t bits = static_cast<std::size_t>(__builtin_popcountll(s));
        if ((n - bits) % 2 == 0) total += prod;
        else total -= prod;
    }
    return total;
}

inline Rational permanent_bound(const std::vector<Indicator>& inds,
                                const Rational& delta_t = Rational(1)) {
    const std::size_t n = inds.size();
    if (n == 0) throw input_error("permanent bound needs indicators");
    Matrix m(n, Vec(n));
    for (std::size_t j = 0; j < n; ++j) {
        if (inds[j].n_vars() != static_cast<int>(n))
            throw input_error("permanent bound needs one indicator per variable");
        const std::vector<Rational> types = multitype(inds[j]);
        for (std::size_t k = 0; k < n; ++k) m[j][k] = types[k];
    }
    return delta_t * Rational(factorial(static_cast<int>(n))) * permanent(m);
}

inline Rational kouchnirenko_bound(const Indicator& ind, int n) {
    if (ind.n_vars() != n) throw input_error("indicator dimension mismatch");
    return Rational(factorial(n)) * volume(ind.theta());
}

struct DirectionalBound {
    double value = 0;               // best objective value found
    std::vector<double> minimizer;  // direction a attaining it
    double tolerance = 0;           // requested relative stopping tolerance
    int iterations = 0;
    bool degenerate = false;        // some body was {0}; bound reported as 0
};

/* Minimizes prod_j psi_j(a) / prod_k a_k over positive a.  In coordinates
 * s = log a the objective log prod psi_j(e^s) - sum s_k is convex (each
 * psi_j(e^s) is a max of sums of exponentials), so plain subgradient
 * descent with diminishing steps converges; the best value seen is
 * returned, which keeps the result an upper estimate of the infimum even
 * on early termination.  The subgradient picks the lexicographically least
 * vertex attaining each psi_j, for reproducibility. */
inline DirectionalBound directional_bound(const std::vector<Indicator>& inds,
                                          double tol) {
    if (inds.empty()) throw input_error("directional bound needs indicators");
    if (!(tol > 0)) throw input_error("tolerance must be positive");
    const std::size_t n = inds.size();
    DirectionalBound out;
    out.tolerance = tol;
    out.minimizer.assign(n, 1.0);
    for (const Indicator& ind : inds) {
        if (ind.n_vars() != static_cast<int>(n))
            throw input_error("directional bound needs one indicator per variable");
        if (sigma(ind) == 0) {  // body is {0}: objective is identically 0
            out.degenerate = true;
            return out;
        }
    }

    std::vector<std::vector<std::vector<double>>> verts(n);
    for (std::size_t j = 0; j < n; ++j)
        for (const Vec& v : inds[j].theta().vertices()) {
            std::vector<double> vd(n);
            for (std::size_t k = 0; k < n; ++k) vd[k] = to_double(v[k]);
            verts[j].push_back(std::move(vd));
        }

    // objective and one subgradient at s = log a
    const auto eval = [&](const std::vector<double>& s, std::vector<double>& g) {
        std::vector<double> a(n);
        for (std::size_t k = 0; k < n; ++k) a[k] = std::exp(s[k]);
        g.assign(n, -1.0);
        double f = 0;
        for (std::size_t j = 0; j < n; ++j) {
            double best = 0;
            const std::vector<double>* arg = nullptr;
            for (const auto& vd : verts[j]) {
                double val = 0;
                for (std::size_t k = 0; k < n; ++k) val += vd[k] * a[k];
                if (arg == nullptr || val > best) { best = val; arg = &vd; }
            }
            f += std::log(best);
            for (std::size_t k = 0; k < n; ++k)
                g[k] += (*arg)[k] * a[k] / best;
        }
        for (std::size_t k = 0; k < n; ++k) f -= s[k];
        return f;
    };

    std::vector<double> s(n, 0.0), best_s = s, g;
    double best_f = eval(s, g);
    int stall = 0;
    const int max_iter = 4000;
    int it = 0;
    for (; it < max_iter && stall < 50; ++it) {
        double gnorm = 0;
        for (double gk : g) gnorm += gk * gk;
        gnorm = std::sqrt(gnorm);
        if (gnorm < 1e-15) break;
        const double step = 1.0 / std::sqrt(it + 1.0);
        for (std::size_t k = 0; k < n; ++k) s[k] -= step * g[k] / gnorm;

        const double f = eval(s, g);
        if (f < best_f) {
            const double gain = (best_f - f) / std::max(1.0, std::fabs(best_f));
            stall = gain > tol ? 0 : stall + 1;
            best_f = f;
            best_s = s;
        } else {
            ++stall;
        }
    }
    out.iterations = it;
    out.value = std::exp(best_f);
    for (std::size_t k = 0; k < n; ++k) out.minimizer[k] = std::exp(best_s[k]);
    return out;
}

struct BoundReport {
    int n_vars = 0;
    std::size_t n_inputs = 0;
    Rational delta_t = 1;
    Rational bezout = 0;
    Rational mixed_volume = 0;
    // square systems only (one indicator per variable):
    std::optional<Rational> permanent;
    std::optional<DirectionalBound> directional;
    std::optional<Rational> kouchnirenko;  // and all bodies identical
};

inline BoundReport compute_bounds(const std::vector<Indicator>& inds, int n,
                                  const Rational& delta_t = Rational(1),
                                  double tol = 1e-9) {
    if (inds.empty() || static_cast<int>(inds.size()) > n)
        throw precondition_error("bound report needs between 1 and n indicators");
    if (delta_t < 0) throw input_error("mass multiplier must be nonnegative");
    BoundReport r;
    r.n_vars = n;
    r.n_inputs = inds.size();
    r.delta_t = delta_t;

    r.bezout = delta_t;  // product of total types, 0 allowed for {0} bodies
    for (const Indicator& ind : inds) r.bezout *= sigma(ind);

    r.mixed_volume = mixed_volume_bound(inds, n, delta_t);

    if (static_cast<int>(inds.size()) == n) {
        r.permanent = permanent_bound(inds, delta_t);
        DirectionalBound d = directional_bound(inds, tol);
        d.value *= to_double(delta_t);
        r.directional = d;

        bool identical = true;
        for (std::size_t j = 1; j < inds.size() && identical; ++j)
            identical = inds[j].theta().vertices() == inds[0].theta().vertices();
        if (identical)
            r.kouchnirenko = delta_t * kouchnirenko_bound(inds[0], n);
    }
    return r;
}

}  // namespace newtonma
