#pragma once

/* Independent cross-checks for the exact machinery: a from-scratch mixed
 * volume, Monte Carlo estimators for volumes and torus averages, and a
 * grid probe of the relative type.  These deliberately avoid the code
 * paths they confirm — volumes come from a fan triangulation instead of
 * facet pyramids, Minkowski sums from raw vertex tuples instead of the
 * staged pairwise sums — sharing only the hull/chart/determinant kernel.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "newtonma/degree.hpp"
#include "newtonma/linalg.hpp"
#include "newtonma/indicator.hpp"
#include "newtonma/polytope.hpp"
#include "newtonma/rng.hpp"
#include "newtonma/volume.hpp"

namespace newtonma {

struct SampleEstimate {
    double value = 0.0;
    double std_err = 0.0;  // one standard error of the estimator
    long long samples = 0;
    std::uint64_t seed = 0;
};

namespace detail {

/* Simplices covering a full-dimensional hull, fanned from its first
 * vertex; facets recurse through their own charts, and chart exactness
 * brings the pieces back in ambient coordinates unchanged. */
inline std::vector<std::vector<Vec>> fan_simplices(const Polytope& hull) {
    const int dim = hull.dim();
    const std::vector<Vec>& verts = hull.vertices();
    if (dim == 1) return {{verts.front(), verts.back()}};
    std::vector<std::vector<Vec>> out;
    const Vec& apex = verts[0];
    for (const Facet& f : hull.facets()) {
        if (dot(f.normal, apex) == f.offset) continue;
        std::vector<Vec> fverts;
        fverts.reserve(f.vertex_ids.size());
        for (std::size_t id : f.vertex_ids) fverts.push_back(verts[id]);
        const Chart chart = build_chart(fverts);
        std::vector<Vec> image;
        image.reserve(fverts.size());
        for (const Vec& v : fverts) image.push_back(chart.to_chart(v));
        for (const std::vector<Vec>& sub :
             fan_simplices(Polytope::convex_hull(dim - 1, std::move(image)))) {
            std::vector<Vec> simplex;
            simplex.reserve(static_cast<std::size_t>(dim) + 1);
            simplex.push_back(apex);
            for (const Vec& c : sub) simplex.push_back(chart.from_chart(c));
            out.push_back(std::move(simplex));
        }
    }
    return out;
}

inline Rational fan_volume(const std::vector<Vec>& points, int dim) {
    const Polytope hull = Polytope::convex_hull(dim, points);
    if (!hull.is_full_dimensional()) return Rational(0);
    Rational total(0);
    for (const std::vector<Vec>& s : fan_simplices(hull)) {
        Matrix edges(static_cast<std::size_t>(dim), Vec(static_cast<std::size_t>(dim)));
        for (int i = 1; i <= dim; ++i)
            for (int k = 0; k < dim; ++k)
                edges[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)] =
                    s[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] -
                    s[0][static_cast<std::size_t>(k)];
        total += abs(determinant(std::move(edges)));
    }
    return total / Rational(factorial(dim));
}

}  // namespace detail

/* Mixed volume recomputed from the definition: for every nonempty subset,
 * the Minkowski sum is formed as the set of all vertex-tuple sums and its
 * volume taken by fan triangulation; inclusion-exclusion does the rest.
 * Same normalization as mixed_volume: MV(K, ..., K) = vol(K). */
inline Rational mv_inclusion_exclusion(const std::vector<Polytope>& ks) {
    const int n = static_cast<int>(ks.size());
    if (n == 0) throw input_error("mixed volume of an empty family");
    for (const Polytope& k : ks)
        if (k.dim() != n)
            throw input_error("mixed volume needs n polytopes of dimension n");
    Rational total(0);
    const std::size_t full = (std::size_t{1} << n) - 1;
    for (std::size_t mask = 1; mask <= full; ++mask) {
        std::vector<Vec> pts{Vec(static_cast<std::size_t>(n), Rational(0))};
        for (int i = 0; i < n; ++i) {
            if (!(mask >> i & 1)) continue;
            std::vector<Vec> next;
            next.reserve(pts.size() * ks[static_cast<std::size_t>(i)].vertices().size());
            for (const Vec& p : pts)
                for (const Vec& v : ks[static_cast<std::size_t>(i)].vertices()) {
                    Vec s = p;
                    for (int k = 0; k < n; ++k)
                        s[static_cast<std::size_t>(k)] += v[static_cast<std::size_t>(k)];
                    next.push_back(std::move(s));
                }
            std::sort(next.begin(), next.end(),
                      [](const Vec& a, const Vec& b) { return lex_less(a, b); });
            next.erase(std::unique(next.begin(), next.end()), next.end());
            pts = std::move(next);
        }
        const Rational v = detail::fan_volume(pts, n);
        total += ((n - __builtin_popcountll(mask)) % 2 == 0) ? v : -v;
    }
    return total / Rational(factorial(n));
}

/* Monte Carlo volume: rejection sampling in the exact bounding box, with
 * exact membership rechecks for points too close to a facet to trust the
 * double-precision test. */
inline SampleEstimate mc_volume(const Polytope& k, long long samples, std::uint64_t seed) {
    if (!k.is_full_dimensional())
        throw precondition_error("volume sampling needs a full-dimensional body");
    if (samples <= 0) throw input_error("sample count must be positive");
    const int n = k.dim();
    Vec lo = k.vertices().front(), hi = lo;
    for (const Vec& v : k.vertices())
        for (int j = 0; j < n; ++j) {
            const std::size_t js = static_cast<std::size_t>(j);
            if (v[js] < lo[js]) lo[js] = v[js];
            if (v[js] > hi[js]) hi[js] = v[js];
        }
    Rational box_vol(1);
    std::vector<double> lo_d(static_cast<std::size_t>(n)), width_d(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const std::size_t js = static_cast<std::size_t>(j);
        box_vol *= hi[js] - lo[js];
        lo_d[js] = to_double(lo[js]);
        width_d[js] = to_double(hi[js] - lo[js]);
    }

    std::vector<std::vector<double>> normals;
    std::vector<double> offsets;
    for (const Facet& f : k.facets()) {
        std::vector<double> row(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j)
            row[static_cast<std::size_t>(j)] = static_cast<double>(
                f.normal[static_cast<std::size_t>(j)].get_si());
        normals.push_back(std::move(row));
        offsets.push_back(to_double(f.offset));
    }

    const CounterRng rng(seed);
    long long hits = 0;
    std::vector<double> x(static_cast<std::size_t>(n));
    for (long long i = 0; i < samples; ++i) {
        for (int j = 0; j < n; ++j) {
            const std::size_t js = static_cast<std::size_t>(j);
            x[js] = lo_d[js] +
                    width_d[js] * rng.uniform_at(static_cast<std::uint64_t>(i) *
                                                     static_cast<std::uint64_t>(n) +
                                                 static_cast<std::uint64_t>(j));
        }
        bool inside = true, borderline = false;
        for (std::size_t fi = 0; fi < normals.size(); ++fi) {
            double s = -offsets[fi], scale = 1.0 + std::abs(offsets[fi]);
            for (int j = 0; j < n; ++j) {
                const double term = normals[fi][static_cast<std::size_t>(j)] *
                                    x[static_cast<std::size_t>(j)];
                s += term;
                scale += std::abs(term);
            }
            const double margin = 1e-9 * scale;
            if (s > margin) {
                inside = false;
                borderline = false;
                break;
            }
            if (s > -margin) borderline = true;
        }
        if (inside && borderline) {
            Vec xr(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j)
                xr[static_cast<std::size_t>(j)] = Rational(x[static_cast<std::size_t>(j)]);
            inside = contains(k, xr);
        }
        if (inside) ++hits;
    }
    const double phat = static_cast<double>(hits) / static_cast<double>(samples);
    const double vb = to_double(box_vol);
    SampleEstimate est;
    est.value = vb * phat;
    est.std_err = vb * std::sqrt(phat * (1.0 - phat) / static_cast<double>(samples));
    est.samples = samples;
    est.seed = seed;
    return est;
}

/* Largest psi_u / psi_w over an exact direction grid on the faces of the
 * cube [-1,1]^n: a lower bound for relative_type that converges to it as
 * the grid refines, computed without the facet machinery. */
inline double relative_type_grid_check(const Indicator& u, const Indicator& w,
                                       long grid_points) {
    if (u.n_vars() != w.n_vars())
        throw input_error("indicators live in different dimensions");
    if (!is_exhaustive(w))
        throw precondition_error("grid check needs an exhaustive comparison weight");
    if (grid_points < 1) throw input_error("grid size must be positive");
    const int n = u.n_vars();

    long side = 1;  // points per free axis is side + 1
    if (n > 1) {
        const long per_face = std::max<long>(1, grid_points / (2 * n));
        side = n == 2 ? per_face
                      : static_cast<long>(std::sqrt(static_cast<double>(per_face)));
        side = std::max<long>(1, side - 1);
    }

    Rational best(0);
    Vec t(static_cast<std::size_t>(n));
    std::vector<long> idx(static_cast<std::size_t>(n > 1 ? n - 1 : 1), 0);
    for (int axis = 0; axis < n; ++axis) {
        for (int sign = -1; sign <= 1; sign += 2) {
            std::fill(idx.begin(), idx.end(), 0);
            for (;;) {
                t[static_cast<std::size_t>(axis)] = Rational(sign);
                int slot = 0;
                for (int j = 0; j < n; ++j) {
                    if (j == axis) continue;
                    t[static_cast<std::size_t>(j)] =
                        make_rational(2 * idx[static_cast<std::size_t>(slot)] - side, side);
                    ++slot;
                }
                const Rational pw = psi(w, t);
                if (pw > 0) {
                    const Rational ratio = psi(u, t) / pw;
                    if (ratio > best) best = ratio;
                }
                int carry = 0;
                while (carry < n - 1) {
                    if (++idx[static_cast<std::size_t>(carry)] <= side) break;
                    idx[static_cast<std::size_t>(carry)] = 0;
                    ++carry;
                }
                if (n == 1 || carry == n - 1) break;
            }
        }
    }
    return to_double(best);
}

/* Mean of log|P| over product-of-circles tori with radii exp(r * t) at the
 * swept-measure atoms t, combined with the atom masses.  `samples` is the
 * per-atom count; the estimate and its standard error carry the n! of the
 * degree normalization. */
inline SampleEstimate swept_mean_estimate(const Polynomial& p, const Indicator& weight,
                                          double r, long long samples,
                                          std::uint64_t seed) {
    if (p.is_zero()) throw precondition_error("cannot sample the zero polynomial");
    if (p.n_vars != weight.n_vars()) throw input_error("dimension mismatch");
    if (!(r > 0.0)) throw input_error("radius scale must be positive");
    if (samples <= 0) throw input_error("sample count must be positive");
    const int n = p.n_vars;
    const SweptMeasure sm = swept_measure(weight);
    const double nfd = factorial(n).get_d();
    const double two_pi = 2.0 * M_PI;

    const CounterRng base(seed);
    double acc_value = 0.0, acc_var = 0.0;
    std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
    std::vector<double> radius(static_cast<std::size_t>(n));
    for (std::size_t ai = 0; ai < sm.atoms.size(); ++ai) {
        const CounterRng rng = base.split(ai);
        for (int k = 0; k < n; ++k)
            radius[static_cast<std::size_t>(k)] =
                std::exp(r * to_double(sm.atoms[ai].point[static_cast<std::size_t>(k)]));
        double mean = 0.0, m2 = 0.0;
        std::uint64_t retries = 0;
        for (long long i = 0; i < samples; ++i) {
            std::uint64_t block = static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(n);
            double logabs;
            for (;;) {
                for (int k = 0; k < n; ++k) {
                    const double ang =
                        two_pi * rng.uniform_at(block + static_cast<std::uint64_t>(k));
                    z[static_cast<std::size_t>(k)] =
                        radius[static_cast<std::size_t>(k)] *
                        std::complex<double>(std::cos(ang), std::sin(ang));
                }
                const double a = std::abs(evaluate(p, z));
                if (a > 0.0) {
                    logabs = std::log(a);
                    break;
                }
                // landed exactly on a zero: redraw from a block past the main range
                block = (static_cast<std::uint64_t>(samples) + retries++) *
                        static_cast<std::uint64_t>(n);
            }
            const double delta = logabs - mean;
            mean += delta / static_cast<double>(i + 1);
            m2 += delta * (logabs - mean);
        }
        const double se =
            samples > 1 ? std::sqrt(m2 / static_cast<double>(samples - 1) /
                                    static_cast<double>(samples))
                        : 0.0;
        const double mass = to_double(sm.atoms[ai].mass);
        acc_value += mass * mean;
        acc_var += mass * se * mass * se;
    }
    SampleEstimate est;
    est.value = nfd * acc_value;
    est.std_err = nfd * std::sqrt(acc_var);
    est.samples = samples;
    est.seed = seed;
    return est;
}

}  // namespace newtonma
