#pragma once

/*
 * Exact Euclidean volume and normalized mixed volume.
 *
 * volume() decomposes the polytope into signed pyramids over its facets,
 * anchored at the origin.  Each facet is mapped to an affine chart spanned
 * by difference vectors of its own vertices; the pyramid over the facet
 * contributes |det[v0, b_1, ..., b_{n-1}]| * vol(chart image) / n with the
 * sign of the facet offset.  The chart determinant absorbs the metric
 * factors, so no square roots or orthogonal projections appear and the
 * result is an exact rational.
 *
 * mixed_volume() is normalized so that MV(K, ..., K) = volume(K), computed
 * by inclusion-exclusion over volumes of Minkowski sums of subsets.
 */

#include <cstddef>
#include <vector>

#include "newtonma/polytope.hpp"

namespace newtonma {

inline Rational volume(const Polytope& k) {
    if (!k.is_full_dimensional()) return Rational(0);
    const int n = k.dim();
    if (n == 1) {
        // vertices are sorted, so the hull is [first, last]
        return k.vertices().back()[0] - k.vertices().front()[0];
    }
    Rational total = 0;
    for (const Facet& f : k.facets()) {
        const int side = sgn(f.offset);
        if (side == 0) continue;
        std::vector<Vec> fverts;
        fverts.reserve(f.vertex_ids.size());
        for (std::size_t id : f.vertex_ids) fverts.push_back(k.vertices()[id]);
        const detail::Chart chart = detail::build_chart(fverts);
        if (chart.dim() != n - 1)
            throw precondition_error("facet of unexpected dimension");
        std::vector<Vec> image;
        image.reserve(fverts.size());
        for (const Vec& v : fverts) image.push_back(chart.to_chart(v));
        const Rational slice = volume(Polytope::convex_hull(n - 1, std::move(image)));
        Matrix rows;
        rows.reserve(static_cast<std::size_t>(n));
        rows.push_back(fverts[0]);
        for (const Vec& b : chart.basis) rows.push_back(b);
        total += Rational(side) * abs(determinant(std::move(rows))) * slice;
    }
    return total / n;
}

inline Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

/* Normalized mixed volume of exactly n polytopes in dimension n:
   MV = (1/n!) * sum over nonempty S of (-1)^(n-|S|) vol(sum of K_i, i in S). */
inline Rational mixed_volume(const std::vector<Polytope>& ks) {
    const int n = static_cast<int>(ks.size());
    if (n == 0) throw input_error("mixed volume of an empty family");
    for (const Polytope& k : ks)
        if (k.dim() != n)
            throw input_error("mixed volume needs n polytopes of dimension n");
    const std::size_t full = (std::size_t{1} << n) - 1;
    std::vector<Polytope> sums(full + 1);
    Rational total = 0;
    for (std::size_t mask = 1; mask <= full; ++mask) {
        const int pc = __builtin_popcountll(mask);
        const std::size_t low = mask & (~mask + 1);
        int low_idx = __builtin_ctzll(mask);
        if (pc == 1) {
            sums[mask] = ks[static_cast<std::size_t>(low_idx)];
        } else {
            sums[mask] = minkowski_sum(sums[mask ^ low],
                                       ks[static_cast<std::size_t>(low_idx)]);
        }
        const Rational v = volume(sums[mask]);
        total += ((n - pc) % 2 == 0) ? v : -v;
    }
    return total / Rational(factorial(n));
}

}  // namespace newtonma
