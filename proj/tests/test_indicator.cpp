#include <catch2/catch_amalgamated.hpp>

#include "newtonma/indicator.hpp"
#include "newtonma/volume.hpp"
#include "test_util.hpp"

using namespace newtonma;

namespace {

Vec v2(long a, long b) { return Vec{Rational(a), Rational(b)}; }

Indicator simplex_indicator(int n, const Rational& d) {
    return Indicator(n, scale(unit_simplex(n), d));
}

Indicator box_indicator(const Vec& a) {
    return Indicator(static_cast<int>(a.size()), box_polytope(a));
}

/* conv{(0,0),(2,0),(2,2)}: full-dimensional but not exhaustive. */
Indicator steep_triangle() {
    return from_weighted_support({{{1, 0}, Rational(2)}, {{1, 1}, Rational(2)}});
}

Indicator diagonal_segment() {
    return from_weighted_support({{{1, 1}, Rational(1)}});
}

}  // namespace

TEST_CASE("growth indicator of a polynomial, recentred and not") {
    const Polynomial p = parse_polynomial("z1*z2", 2);

    const Indicator at0 = newton_at_infinity(p, v2(0, 0));
    REQUIRE(at0.theta().vertices() == std::vector<Vec>{v2(0, 0), v2(1, 1)});
    REQUIRE(at0.theta().affine_dim() == 1);

    const Indicator at11 = newton_at_infinity(p, v2(1, 1));
    REQUIRE(at11.theta().vertices() ==
            std::vector<Vec>{v2(0, 0), v2(0, 1), v2(1, 0), v2(1, 1)});
    REQUIRE(volume(at11.theta()) == 1);
}

TEST_CASE("growth indicator rejects bad inputs") {
    const Polynomial zero = parse_polynomial("z1 - z1", 2);
    REQUIRE_THROWS_AS(newton_at_infinity(zero, v2(0, 0)), precondition_error);
    const Polynomial laurent = parse_polynomial("z1^-1 + z2", 2, true);
    REQUIRE_THROWS_AS(newton_at_infinity(laurent, v2(0, 0)), precondition_error);
    const Polynomial p = parse_polynomial("z1 + z2", 2);
    REQUIRE_THROWS_AS(newton_at_infinity(p, Vec{Rational(1)}), input_error);
}

TEST_CASE("torus polytope: exponent hull without the origin") {
    REQUIRE(torus_polytope(parse_polynomial("z1*z2 - 1", 2)).vertices() ==
            std::vector<Vec>{v2(0, 0), v2(1, 1)});
    REQUIRE(torus_polytope(parse_polynomial("z1 + z2 - 3", 2)).vertices() ==
            std::vector<Vec>{v2(0, 0), v2(0, 1), v2(1, 0)});
    REQUIRE(torus_polytope(parse_polynomial("z1^-1 + z2", 2, true)).vertices() ==
            std::vector<Vec>{v2(-1, 0), v2(0, 1)});
    REQUIRE_THROWS_AS(torus_polytope(parse_polynomial("0", 2)),
                      precondition_error);
}

TEST_CASE("indicators from weighted exponent data") {
    REQUIRE(diagonal_segment().theta().vertices() ==
            std::vector<Vec>{v2(0, 0), v2(1, 1)});
    REQUIRE(steep_triangle().theta().vertices() ==
            std::vector<Vec>{v2(0, 0), v2(2, 0), v2(2, 2)});

    const Indicator origin = from_weighted_support({{{0, 0}, Rational(1)}});
    REQUIRE(origin.theta().vertices() == std::vector<Vec>{v2(0, 0)});
    REQUIRE(origin.theta().affine_dim() == 0);

    REQUIRE_THROWS_AS(from_weighted_support({}), precondition_error);
    REQUIRE_THROWS_AS(from_weighted_support({{{1, 0}, Rational(0)}}),
                      precondition_error);
    REQUIRE_THROWS_AS(from_weighted_support({{{-1, 0}, Rational(1)}}),
                      precondition_error);
}

TEST_CASE("indicator construction enforces the orthant and the origin") {
    REQUIRE_THROWS_AS(
        Indicator(2, Polytope::convex_hull(2, {v2(-1, 0), v2(1, 0), v2(0, 1)})),
        precondition_error);
    REQUIRE_THROWS_AS(
        Indicator(2, Polytope::convex_hull(2, {v2(1, 0), v2(2, 0), v2(1, 1)})),
        precondition_error);
    REQUIRE_NOTHROW(
        Indicator(2, Polytope::convex_hull(2, {v2(0, 0), v2(2, 0), v2(1, 1)})));
}

TEST_CASE("psi evaluates the support function") {
    REQUIRE(psi(steep_triangle(), v2(1, 1)) == 4);
    REQUIRE(psi(simplex_indicator(2, 1), v2(1, 1)) == 1);
    REQUIRE(psi(diagonal_segment(), Vec{Rational(1), Rational(-2)}) == 0);
    REQUIRE_THROWS_AS(psi(diagonal_segment(), Vec{Rational(1)}), input_error);
}

TEST_CASE("directional types, total type, per-variable types") {
    for (long d = 1; d <= 4; ++d) {
        const Indicator dd = simplex_indicator(2, Rational(d));
        REQUIRE(directional_type(dd, v2(1, 1)) == d);
        REQUIRE(sigma(dd) == d);
    }

    const Indicator box = box_indicator(v2(1, 1));
    REQUIRE(directional_type(box, v2(1, 0)) == 1);  // axis direction allowed
    REQUIRE(multitype(box) == std::vector<Rational>{Rational(1), Rational(1)});

    const Indicator tri = steep_triangle();
    REQUIRE(directional_type(tri, v2(0, 1)) == 2);
    REQUIRE(sigma(tri) == 4);
    REQUIRE(multitype(tri) == std::vector<Rational>{Rational(2), Rational(2)});
    REQUIRE(multitype(diagonal_segment()) ==
            std::vector<Rational>{Rational(1), Rational(1)});

    REQUIRE_THROWS_AS(directional_type(tri, v2(2, 0)), precondition_error);
    REQUIRE_THROWS_AS(directional_type(tri, v2(1, -1)), precondition_error);
    REQUIRE_THROWS_AS(directional_type(tri, v2(0, 0)), precondition_error);
}

TEST_CASE("psi is 1-homogeneous and vanishes on the negative orthant") {
    testutil::Rng rng(424242);
    for (int trial = 0; trial < 25; ++trial) {
        const int dim = 2 + static_cast<int>(rng() % 3);
        const Indicator ind = testutil::random_indicator(rng, dim, 3);
        const Vec t = testutil::random_point(rng, dim, -6, 6, 3);
        const Rational c = testutil::random_rational(rng, 0, 5, 3);
        Vec ct(t.size());
        for (std::size_t k = 0; k < t.size(); ++k) ct[k] = c * t[k];
        REQUIRE(psi(ind, ct) == c * psi(ind, t));

        Vec neg = testutil::random_point(rng, dim, -7, 0, 3);
        REQUIRE(psi(ind, neg) == 0);
    }
}

TEST_CASE("types are monotone under indicator containment") {
    testutil::Rng rng(99901);
    for (int trial = 0; trial < 20; ++trial) {
        const int dim = 2 + static_cast<int>(rng() % 2);
        const Indicator big = testutil::random_indicator(rng, dim, 4);

        // sub-hull of some of big's vertices, origin kept
        std::vector<Vec> sub;
        sub.emplace_back(static_cast<std::size_t>(dim), Rational(0));
        for (const Vec& v : big.theta().vertices())
            if (rng() % 2) sub.push_back(v);
        const Indicator small =
            Indicator(dim, Polytope::convex_hull(dim, std::move(sub)));

        for (int k = 0; k < 5; ++k) {
            const Vec a = testutil::random_point(rng, dim, 1, 6, 3);
            REQUIRE(directional_type(small, a) <= directional_type(big, a));
        }
    }
}

TEST_CASE("exhaustiveness detection") {
    REQUIRE(is_exhaustive(simplex_indicator(2, 1)));
    REQUIRE(is_exhaustive(simplex_indicator(3, 2)));
    REQUIRE(is_exhaustive(box_indicator(v2(1, 1))));
    REQUIRE_FALSE(is_exhaustive(steep_triangle()));
    REQUIRE_FALSE(is_exhaustive(diagonal_segment()));
    REQUIRE_FALSE(is_exhaustive(from_weighted_support({{{0, 0}, Rational(1)}})));

    testutil::Rng rng(777);
    for (int trial = 0; trial < 15; ++trial) {
        const int dim = 2 + static_cast<int>(rng() % 3);
        REQUIRE(is_exhaustive(testutil::random_exhaustive_indicator(rng, dim, 3)));
    }
}

TEST_CASE("relative type against exhaustive weights") {
    const Indicator simplex = simplex_indicator(2, 1);
    const Indicator box = box_indicator(v2(1, 1));

    REQUIRE(relative_type(simplex_indicator(2, 2), simplex) == 2);
    REQUIRE(relative_type(box, simplex) == 2);
    REQUIRE(relative_type(simplex, box) == 1);
    REQUIRE(relative_type(diagonal_segment(), simplex) == 2);
    REQUIRE(relative_type(steep_triangle(), simplex) == 4);

    REQUIRE_THROWS_AS(relative_type(simplex, steep_triangle()),
                      precondition_error);
    REQUIRE_THROWS_AS(relative_type(simplex, diagonal_segment()),
                      precondition_error);
}

TEST_CASE("relative type scales linearly in the first argument") {
    testutil::Rng rng(55005);
    for (int trial = 0; trial < 15; ++trial) {
        const int dim = 2 + static_cast<int>(rng() % 2);
        const Indicator u = testutil::random_indicator(rng, dim, 3);
        const Indicator w = testutil::random_exhaustive_indicator(rng, dim, 2);
        const Rational c = testutil::random_rational(rng, 1, 6, 3);
        const Indicator cu = Indicator(dim, scale(u.theta(), c));
        REQUIRE(relative_type(cu, w) == c * relative_type(u, w));
    }
}

TEST_CASE("relative type is the least feasible containment scaling") {
    testutil::Rng rng(31415);
    for (int trial = 0; trial < 15; ++trial) {
        const int dim = 2 + static_cast<int>(rng() % 2);
        const Indicator u = testutil::random_indicator(rng, dim, 3);
        const Indicator w = testutil::random_exhaustive_indicator(rng, dim, 2);
        const Rational s = relative_type(u, w);

        const Polytope swollen = scale(w.theta(), s == 0 ? Rational(1) : s);
        for (const Vec& v : u.theta().vertices())
            REQUIRE(contains(swollen, v));

        if (s > 0) {
            const Polytope tight = scale(w.theta(), s * Rational(99) / 100);
            bool escaped = false;
            for (const Vec& v : u.theta().vertices())
                if (!contains(tight, v)) { escaped = true; break; }
            REQUIRE(escaped);
        }
    }
}

TEST_CASE("positive-direction types do not depend on the recentring point") {
    testutil::Rng rng(8128);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 2);
        const Polynomial p = testutil::random_polynomial(rng, n, 5, 4);
        const Vec x = testutil::random_point(rng, n, -3, 3, 2);
        const Indicator base =
            newton_at_infinity(p, Vec(static_cast<std::size_t>(n), Rational(0)));
        const Indicator moved = newton_at_infinity(p, x);
        for (int k = 0; k < 20; ++k) {
            const Vec a = testutil::random_point(rng, n, 1, 9, 4);
            REQUIRE(directional_type(base, a) == directional_type(moved, a));
        }
    }
}
