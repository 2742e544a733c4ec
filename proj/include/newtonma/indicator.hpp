#pragma once

/* Growth indicators.  An indicator is a convex body in the closed
 * nonnegative orthant containing the origin; its support function psi is
 * convex, 1-homogeneous, nondecreasing in every coordinate, and vanishes on
 * the closed negative orthant.  Logarithmic types of polynomial growth are
 * support values of such a body, and the relative type of one body against
 * another is the least dilation of the second that swallows the first.
 */

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "newtonma/polynomial.hpp"
#include "newtonma/polytope.hpp"

namespace newtonma {

class Indicator {
public:
    Indicator(int n_vars, Polytope theta) : theta_(std::move(theta)) {
        if (theta_.dim() != n_vars)
            throw input_error("indicator dimension mismatch");
        for (const Vec& v : theta_.vertices())
            for (const Rational& c : v)
                if (c < 0)
                    throw precondition_error(
                        "indicator body leaves the nonnegative orthant");
        if (!contains(theta_, Vec(static_cast<std::size_t>(n_vars), Rational(0))))
            throw precondition_error("indicator body does not contain the origin");
    }

    int n_vars() const { return theta_.dim(); }
    const Polytope& theta() const { return theta_; }

private:
    Polytope theta_;
};

struct WeightedTerm {
    Exponent exponent;  // componentwise >= 0
    Rational weight;    // > 0
};

using WeightedSupport = std::vector<WeightedTerm>;

/* Indicator of log|P| recentred at x: hull of the exponents of P expanded
 * around x, with the origin adjoined. */
inline Indicator newton_at_infinity(const Polynomial& p, const Vec& x) {
    if (p.is_zero())
        throw precondition_error("zero polynomial has no growth indicator");
    if (p.is_laurent())
        throw precondition_error("growth indicator requires nonnegative exponents");
    if (static_cast<int>(x.size()) != p.n_vars)
        throw input_error("recentring point dimension mismatch");
    bool shifted = false;
    for (const Rational& c : x)
        if (c != 0) { shifted = true; break; }
    const Polynomial q = shifted ? taylor_shift(p, x) : p;

    std::vector<Vec> pts;
    pts.reserve(q.terms.size() + 1);
    pts.emplace_back(static_cast<std::size_t>(p.n_vars), Rational(0));
    for (const Exponent& e : support(q)) {
        Vec pt(e.size());
        for (std::size_t k = 0; k < e.size(); ++k) pt[k] = e[k];
        pts.push_back(std::move(pt));
    }
    return Indicator(p.n_vars, Polytope::convex_hull(p.n_vars, std::move(pts)));
}

/* Hull of the exponents alone, origin not adjoined; Laurent terms allowed.
 * This is the body whose mixed volumes count torus zeros. */
inline Polytope torus_polytope(const Polynomial& p) {
    std::vector<Vec> pts;
    for (const Exponent& e : support(p)) {  // rejects the zero polynomial
        Vec pt(e.size());
        for (std::size_t k = 0; k < e.size(); ++k) pt[k] = e[k];
        pts.push_back(std::move(pt));
    }
    return Polytope::convex_hull(p.n_vars, std::move(pts));
}

/* Indicator generated by scaled exponents: hull of {weight * exponent} with
 * the origin adjoined.  Admits growth data that does not come from a single
 * polynomial, e.g. logarithms of weighted moduli. */
inline Indicator from_weighted_support(const WeightedSupport& ws) {
    if (ws.empty())
        throw precondition_error("weighted support must be nonempty");
    const std::size_t n = ws.front().exponent.size();
    std::vector<Vec> pts;
    pts.reserve(ws.size() + 1);
    pts.emplace_back(n, Rational(0));
    for (const WeightedTerm& t : ws) {
        if (t.exponent.size() != n)
            throw input_error("weighted support arity mismatch");
        if (t.weight <= 0)
            throw precondition_error("weighted support weights must be positive");
        Vec pt(n);
        for (std::size_t k = 0; k < n; ++k) {
            if (t.exponent[k] < 0)
                throw precondition_error(
                    "weighted support exponents must be nonnegative");
            pt[k] = t.weight * Rational(t.exponent[k]);
        }
        pts.push_back(std::move(pt));
    }
    const int dim = static_cast<int>(n);
    return Indicator(dim, Polytope::convex_hull(dim, std::move(pts)));
}

inline Rational psi(const Indicator& ind, const Vec& t) {
    return support_value(ind.theta(), t);
}

/* Growth rate along a direction.  Strictly positive directions measure
 * weighted degrees; the axis unit vectors are additionally allowed and give
 * the per-variable degrees. */
inline Rational directional_type(const Indicator& ind, const Vec& a) {
    if (static_cast<int>(a.size()) != ind.n_vars())
        throw input_error("direction dimension mismatch");
    bool axis = true;
    int ones = 0;
    for (const Rational& c : a) {
        if (c == 1) ++ones;
        else if (c != 0) axis = false;
    }
    axis = axis && ones == 1;
    if (!axis)
        for (const Rational& c : a)
            if (c <= 0)
                throw precondition_error("direction must be strictly positive");
    return psi(ind, a);
}

/* Type at the all-ones direction: the degree-like total growth rate. */
inline Rational sigma(const Indicator& ind) {
    return psi(ind, Vec(static_cast<std::size_t>(ind.n_vars()), Rational(1)));
}

/* Per-variable growth rates (psi at each axis unit vector). */
inline std::vector<Rational> multitype(const Indicator& ind) {
    const std::size_t n = static_cast<std::size_t>(ind.n_vars());
    std::vector<Rational> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        Vec e(n, Rational(0));
        e[k] = 1;
        out[k] = psi(ind, e);
    }
    return out;
}

/* True when psi is positive in every direction with a positive coordinate;
 * equivalently the body is full-dimensional and each facet through the
 * origin has a componentwise nonpositive normal (the vertex cone then
 * covers the whole nonnegative orthant). */
inline bool is_exhaustive(const Indicator& ind) {
    if (!ind.theta().is_full_dimensional()) return false;
    for (const Facet& f : ind.theta().facets())
        if (f.offset == 0)
            for (const Integer& c : f.normal)
                if (c > 0) return false;
    return true;
}

/* Least lambda >= 0 with the body of ind_u inside lambda times the body of
 * ind_w: the largest ratio of a vertex of ind_u against a positive-offset
 * facet of ind_w.  Facets of ind_w through the origin never constrain
 * lambda because exhaustiveness makes their normals nonpositive while the
 * vertices of ind_u are nonnegative. */
inline Rational relative_type(const Indicator& ind_u, const Indicator& ind_w) {
    if (ind_u.n_vars() != ind_w.n_vars())
        throw input_error("relative type dimension mismatch");
    if (!is_exhaustive(ind_w))
        throw precondition_error("relative type requires an exhaustive weight");
    Rational best(0);
    for (const Facet& f : ind_w.theta().facets()) {
        if (f.offset == 0) continue;
        for (const Vec& v : ind_u.theta().vertices()) {
            Rational r = dot(f.normal, v) / f.offset;
            if (r > best) best = r;
        }
    }
    return best;
}

}  // namespace newtonma
