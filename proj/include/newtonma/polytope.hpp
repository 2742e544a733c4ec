#pragma once

/*
 * Convex polytopes in V-representation over exact rationals.
 *
 * A Polytope stores its extreme points (sorted, duplicate free) and, when
 * it is full-dimensional, the irredundant facet list.  Facet enumeration
 * runs the double description method on the homogenization cone: a point p
 * lifts to (1, p), facets of the polytope correspond exactly to extreme
 * rays of the dual cone.  The method is insertion-based, exact, and needs
 * no general-position assumption, which is what degenerate inputs (boxes,
 * Minkowski sums of parallel segments, repeated points) require.
 *
 * Lower-dimensional hulls are supported as vertex sets: extreme points are
 * computed in an affine chart of the correct dimension.  Asking such a
 * polytope for facets is an error the caller must handle.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "newtonma/linalg.hpp"
#include "newtonma/rational.hpp"

namespace newtonma {

struct Facet {
    IntVec normal;    // primitive integer, outward: <normal, x> <= offset
    Rational offset;  // support value of the polytope in direction `normal`
    std::vector<std::size_t> vertex_ids;  // ascending indices into vertices()
};

namespace detail {

inline Integer dot_int(const IntVec& a, const IntVec& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

class Bits {
public:
    explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
    void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    bool subset_of(const Bits& other) const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & ~other.words_[w]) return false;
        return true;
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }
    static Bits intersect(const Bits& a, const Bits& b) {
        Bits r;
        r.words_.resize(a.words_.size());
        for (std::size_t w = 0; w < a.words_.size(); ++w)
            r.words_[w] = a.words_[w] & b.words_[w];
        return r;
    }

private:
    std::vector<std::uint64_t> words_;
};

struct Ray {
    IntVec v;
    Bits zero;  // processed constraint indices this ray is tight on
};

/*
 * Extreme rays of {y : <y, g> >= 0 for every generator g}.
 *
 * Preconditions: the generators span R^D (so the dual cone is pointed) and
 * generate a pointed cone (so the dual cone is full-dimensional); both hold
 * for homogenized point sets of full affine rank.  Starts from a simplicial
 * cone cut out by D independent generators, whose extreme rays are the
 * columns of the inverse basis matrix, then inserts the remaining
 * constraints one at a time.  Adjacency of rays uses the combinatorial
 * criterion: rays p, q are adjacent iff no third ray is tight on every
 * constraint both p and q are tight on.
 */
inline std::vector<IntVec> dual_cone_rays(const std::vector<IntVec>& gens) {
    const std::size_t m = gens.size();
    const std::size_t D = gens[0].size();

    std::vector<std::size_t> basis_idx;
    std::vector<bool> in_basis(m, false);
    {
        Matrix echelon;
        for (std::size_t i = 0; i < m && basis_idx.size() < D; ++i) {
            Vec u(D);
            for (std::size_t k = 0; k < D; ++k) u[k] = Rational(gens[i][k]);
            for (const Vec& row : echelon) {
                std::size_t p = 0;
                while (p < D && row[p] == 0) ++p;
                if (p < D && u[p] != 0) {
                    const Rational f = u[p] / row[p];
                    for (std::size_t c = p; c < D; ++c) u[c] -= f * row[c];
                }
            }
            bool nonzero = false;
            for (const auto& q : u)
                if (q != 0) { nonzero = true; break; }
            if (nonzero) {
                echelon.push_back(u);
                basis_idx.push_back(i);
                in_basis[i] = true;
            }
        }
    }
    if (basis_idx.size() < D)
        throw precondition_error("dual_cone_rays: generators do not span");

    Matrix basis_mat(D, Vec(D));
    for (std::size_t r = 0; r < D; ++r)
        for (std::size_t c = 0; c < D; ++c)
            basis_mat[r][c] = Rational(gens[basis_idx[r]][c]);
    const Matrix inv = inverse(basis_mat);

    std::vector<Ray> rays;
    rays.reserve(D);
    for (std::size_t j = 0; j < D; ++j) {
        Vec col(D);
        for (std::size_t r = 0; r < D; ++r) col[r] = inv[r][j];
        Ray ray{primitive_direction(col), Bits(m)};
        for (std::size_t i = 0; i < D; ++i)
            if (i != j) ray.zero.set(basis_idx[i]);
        rays.push_back(std::move(ray));
    }

    for (std::size_t i = 0; i < m; ++i) {
        if (in_basis[i]) continue;
        std::vector<Integer> val(rays.size());
        std::vector<std::size_t> pos, neg, zer;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            val[r] = dot_int(rays[r].v, gens[i]);
            const int s = sgn(val[r]);
            if (s > 0) pos.push_back(r);
            else if (s < 0) neg.push_back(r);
            else zer.push_back(r);
        }
        if (neg.empty()) {
            for (std::size_t r : zer) rays[r].zero.set(i);
            continue;
        }
        std::vector<Ray> next;
        next.reserve(pos.size() + zer.size());
        for (std::size_t r : pos) next.push_back(rays[r]);
        for (std::size_t r : zer) {
            rays[r].zero.set(i);
            next.push_back(rays[r]);
        }
        for (std::size_t p : pos) {
            for (std::size_t q : neg) {
                Bits common = Bits::intersect(rays[p].zero, rays[q].zero);
                if (D >= 2 && common.count() + 2 < D) continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size(); ++r) {
                    if (r == p || r == q) continue;
                    if (common.subset_of(rays[r].zero)) { adjacent = false; break; }
                }
                if (!adjacent) continue;
                IntVec v(D);
                for (std::size_t k = 0; k < D; ++k)
                    v[k] = val[p] * rays[q].v[k] - val[q] * rays[p].v[k];
                make_primitive(v);
                common.set(i);
                bool dup = false;
                for (const Ray& existing : next)
                    if (existing.v == v) { dup = true; break; }
                if (!dup) next.push_back(Ray{std::move(v), std::move(common)});
            }
        }
        rays = std::move(next);
    }

    std::vector<IntVec> out;
    out.reserve(rays.size());
    for (auto& r : rays) out.push_back(std::move(r.v));
    return out;
}

/* Affine chart: base point plus an independent set of difference vectors.
   Coordinates are recovered through the inverse of the basis restricted to
   its pivot rows, which is exact because every mapped point lies in the
   affine hull by construction. */
struct Chart {
    Vec base;
    std::vector<Vec> basis;          // d independent columns
    std::vector<std::size_t> pivots; // d coordinate rows with invertible minor
    Matrix inv;                      // inverse of basis[pivots]

    int dim() const { return static_cast<int>(basis.size()); }

    Vec to_chart(const Vec& p) const {
        const std::size_t d = basis.size();
        Vec rhs(d);
        for (std::size_t i = 0; i < d; ++i)
            rhs[i] = p[pivots[i]] - base[pivots[i]];
        Vec c(d, Rational(0));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) c[i] += inv[i][j] * rhs[j];
        return c;
    }

    Vec from_chart(const Vec& c) const {
        Vec p = base;
        for (std::size_t j = 0; j < basis.size(); ++j)
            for (std::size_t k = 0; k < p.size(); ++k) p[k] += c[j] * basis[j][k];
        return p;
    }
};

inline Chart build_chart(const std::vector<Vec>& points) {
    const std::size_t n = points[0].size();
    Chart chart;
    chart.base = points[0];
    Matrix echelon;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t i = 1; i < points.size(); ++i) {
        Vec u(n);
        for (std::size_t k = 0; k < n; ++k) u[k] = points[i][k] - chart.base[k];
        Vec red = u;
        for (const Vec& row : echelon) {
            std::size_t p = 0;
            while (p < n && row[p] == 0) ++p;
            if (p < n && red[p] != 0) {
                const Rational f = red[p] / row[p];
                for (std::size_t c = p; c < n; ++c) red[c] -= f * row[c];
            }
        }
        std::size_t p = 0;
        while (p < n && red[p] == 0) ++p;
        if (p == n) continue;
        echelon.push_back(red);
        pivot_cols.push_back(p);
        chart.basis.push_back(u);
    }
    chart.pivots = pivot_cols;
    const std::size_t d = chart.basis.size();
    if (d > 0) {
        Matrix m(d, Vec(d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                m[i][j] = chart.basis[j][chart.pivots[i]];
        chart.inv = inverse(m);
    }
    return chart;
}

/* Facets of a full-dimensional point set via double description on the
   lifted cone.  vertex_ids are left empty; the caller fills them against
   its final vertex list. */
inline std::vector<Facet> full_dim_facets(const std::vector<Vec>& points, int dim) {
    std::vector<IntVec> gens;
    gens.reserve(points.size());
    for (const Vec& p : points) {
        Vec lifted(static_cast<std::size_t>(dim) + 1);
        lifted[0] = 1;
        for (int k = 0; k < dim; ++k)
            lifted[static_cast<std::size_t>(k) + 1] = p[static_cast<std::size_t>(k)];
        gens.push_back(primitive_direction(lifted));
    }
    std::vector<Facet> facets;
    for (const IntVec& ray : dual_cone_rays(gens)) {
        IntVec normal(static_cast<std::size_t>(dim));
        bool nonzero = false;
        for (int k = 0; k < dim; ++k) {
            normal[static_cast<std::size_t>(k)] = -ray[static_cast<std::size_t>(k) + 1];
            if (normal[static_cast<std::size_t>(k)] != 0) nonzero = true;
        }
        if (!nonzero) continue;  // cannot occur for dim >= 1; defensive
        Integer content = 0;
        for (const auto& x : normal)
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
        Facet f;
        f.offset = make_rational(ray[0], content);
        for (auto& x : normal) x /= content;
        f.normal = std::move(normal);
        facets.push_back(std::move(f));
    }
    std::sort(facets.begin(), facets.end(), [](const Facet& a, const Facet& b) {
        return lex_less(a.normal, b.normal);
    });
    return facets;
}

}  // namespace detail

class Polytope {
public:
    Polytope() = default;

    /* Builds the hull of a finite point set: extreme points always, facets
       when the set is full-dimensional. */
    static Polytope convex_hull(int dim, std::vector<Vec> points) {
        if (dim < 1) throw input_error("polytope dimension must be positive");
        if (points.empty()) throw input_error("convex hull of an empty set");
        for (const Vec& p : points)
            if (static_cast<int>(p.size()) != dim)
                throw input_error("point dimension mismatch");
        std::sort(points.begin(), points.end(),
                  [](const Vec& a, const Vec& b) { return lex_less(a, b); });
        points.erase(std::unique(points.begin(), points.end()), points.end());

        Polytope k;
        k.dim_ = dim;
        if (points.size() == 1) {
            k.affine_dim_ = 0;
            k.vertices_ = std::move(points);
            return k;
        }

        const detail::Chart chart = detail::build_chart(points);
        const int d = chart.dim();
        k.affine_dim_ = d;

        std::vector<Vec> work;  // coordinates facet enumeration runs in
        if (d == dim) {
            work = points;
        } else {
            work.reserve(points.size());
            for (const Vec& p : points) work.push_back(chart.to_chart(p));
        }
        std::vector<Facet> facets = detail::full_dim_facets(work, d);

        // a point is extreme iff its tight facet normals span the space
        for (std::size_t i = 0; i < points.size(); ++i) {
            Matrix active;
            for (const Facet& f : facets) {
                Rational v = 0;
                for (std::size_t c = 0; c < f.normal.size(); ++c)
                    v += Rational(f.normal[c]) * work[i][c];
                if (v == f.offset) {
                    Vec row(f.normal.size());
                    for (std::size_t c = 0; c < f.normal.size(); ++c)
                        row[c] = Rational(f.normal[c]);
                    active.push_back(std::move(row));
                }
            }
            if (static_cast<int>(rank(std::move(active))) == d)
                k.vertices_.push_back(points[i]);
        }

        if (d == dim) {
            for (Facet& f : facets) {
                for (std::size_t i = 0; i < k.vertices_.size(); ++i)
                    if (dot(f.normal, k.vertices_[i]) == f.offset)
                        f.vertex_ids.push_back(i);
            }
            k.facets_ = std::move(facets);
        }
        return k;
    }

    int dim() const { return dim_; }
    int affine_dim() const { return affine_dim_; }
    bool is_full_dimensional() const { return affine_dim_ == dim_; }
    const std::vector<Vec>& vertices() const { return vertices_; }

    const std::vector<Facet>& facets() const {
        if (!is_full_dimensional())
            throw precondition_error(
                "facet list requested for a lower-dimensional polytope "
                "(affine dimension " + std::to_string(affine_dim_) +
                " inside dimension " + std::to_string(dim_) + ")");
        return facets_;
    }

private:
    int dim_ = 0;
    int affine_dim_ = -1;
    std::vector<Vec> vertices_;
    std::vector<Facet> facets_;

    friend Polytope scale(const Polytope& k, const Rational& c);
};

inline Rational support_value(const Polytope& k, const Vec& t) {
    if (static_cast<int>(t.size()) != k.dim())
        throw input_error("support direction dimension mismatch");
    Rational best;
    bool first = true;
    for (const Vec& v : k.vertices()) {
        Rational s = dot(v, t);
        if (first || s > best) { best = s; first = false; }
    }
    return best;
}

inline Polytope minkowski_sum(const Polytope& a, const Polytope& b) {
    if (a.dim() != b.dim()) throw input_error("Minkowski sum dimension mismatch");
    std::vector<Vec> sums;
    sums.reserve(a.vertices().size() * b.vertices().size());
    for (const Vec& u : a.vertices()) {
        for (const Vec& v : b.vertices()) {
            Vec s(u.size());
            for (std::size_t k = 0; k < u.size(); ++k) s[k] = u[k] + v[k];
            sums.push_back(std::move(s));
        }
    }
    return Polytope::convex_hull(a.dim(), std::move(sums));
}

/* Dilation by c >= 0.  Positive scaling preserves extremeness, facet
   normals, and lexicographic vertex order, so no re-hull is needed. */
inline Polytope scale(const Polytope& k, const Rational& c) {
    if (c < 0) throw input_error("scale factor must be nonnegative");
    if (c == 0) {
        return Polytope::convex_hull(
            k.dim(), {Vec(static_cast<std::size_t>(k.dim()), Rational(0))});
    }
    Polytope out;
    out.dim_ = k.dim_;
    out.affine_dim_ = k.affine_dim_;
    out.vertices_ = k.vertices_;
    for (Vec& v : out.vertices_)
        for (Rational& x : v) x *= c;
    out.facets_ = k.facets_;
    for (Facet& f : out.facets_) f.offset *= c;
    return out;
}

inline bool contains(const Polytope& k, const Vec& p) {
    if (static_cast<int>(p.size()) != k.dim())
        throw input_error("containment query dimension mismatch");
    if (k.is_full_dimensional()) {
        for (const Facet& f : k.facets())
            if (dot(f.normal, p) > f.offset) return false;
        return true;
    }
    // lower-dimensional: p is inside iff adjoining it changes nothing
    std::vector<Vec> pts = k.vertices();
    pts.push_back(p);
    return Polytope::convex_hull(k.dim(), std::move(pts)).vertices() == k.vertices();
}

/* conv{0, e_1, ..., e_n}. */
inline Polytope unit_simplex(int n) {
    std::vector<Vec> pts(static_cast<std::size_t>(n) + 1,
                         Vec(static_cast<std::size_t>(n), Rational(0)));
    for (int k = 0; k < n; ++k)
        pts[static_cast<std::size_t>(k) + 1][static_cast<std::size_t>(k)] = 1;
    return Polytope::convex_hull(n, std::move(pts));
}

/* [0, a_1] x ... x [0, a_n] with a_k >= 0. */
inline Polytope box_polytope(const Vec& a) {
    const std::size_t n = a.size();
    std::vector<Vec> pts;
    pts.reserve(std::size_t{1} << n);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Vec p(n, Rational(0));
        for (std::size_t k = 0; k < n; ++k)
            if (mask & (std::size_t{1} << k)) p[k] = a[k];
        pts.push_back(std::move(p));
    }
    return Polytope::convex_hull(static_cast<int>(n), std::move(pts));
}

}  // namespace newtonma
