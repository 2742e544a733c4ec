#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "newtonma/degree.hpp"
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

Indicator steep_triangle() {
    return from_weighted_support({{{1, 0}, Rational(2)}, {{1, 1}, Rational(2)}});
}

bool has_atom(const SweptMeasure& sm, const Vec& point, const Rational& mass) {
    for (const SweptAtom& a : sm.atoms)
        if (a.point == point && a.mass == mass) return true;
    return false;
}

}  // namespace

TEST_CASE("swept measure of the simplex, the box, and a steep triangle") {
    const SweptMeasure simplex = swept_measure(simplex_indicator(2, 1));
    REQUIRE(simplex.atoms.size() == 1);
    REQUIRE(has_atom(simplex, v2(1, 1), make_rational(1, 2)));
    REQUIRE(simplex.total == make_rational(1, 2));

    const SweptMeasure box = swept_measure(box_indicator(v2(1, 1)));
    REQUIRE(box.atoms.size() == 2);
    REQUIRE(has_atom(box, v2(1, 0), make_rational(1, 2)));
    REQUIRE(has_atom(box, v2(0, 1), make_rational(1, 2)));
    REQUIRE(box.total == 1);

    const SweptMeasure tri = swept_measure(steep_triangle());
    REQUIRE(tri.atoms.size() == 1);
    REQUIRE(has_atom(tri, Vec{make_rational(1, 2), Rational(0)}, Rational(2)));
    REQUIRE(tri.total == 2);
}

TEST_CASE("swept measure rejects lower-dimensional weights") {
    REQUIRE_THROWS_AS(swept_measure(from_weighted_support({{{1, 1}, Rational(1)}})),
                      precondition_error);
    REQUIRE_THROWS_AS(swept_measure(from_weighted_support({{{0, 0}, Rational(1)}})),
                      precondition_error);
}

TEST_CASE("swept atoms sit on the unit level set and conserve volume") {
    testutil::Rng rng(121212);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const Indicator w = testutil::random_indicator(rng, n, 3);
        if (!w.theta().is_full_dimensional()) continue;
        const SweptMeasure sm = swept_measure(w);
        Rational total(0);
        for (const SweptAtom& a : sm.atoms) {
            REQUIRE(psi(w, a.point) == 1);
            REQUIRE(a.mass > 0);
            total += a.mass;
        }
        REQUIRE(total == sm.total);
        REQUIRE(sm.total == volume(w.theta()));
    }
}

TEST_CASE("generalized degree bound against the simplex weight is the type") {
    const Indicator simplex = simplex_indicator(2, 1);
    REQUIRE(generalized_degree_bound(box_indicator(v2(1, 1)), simplex) == 2);
    REQUIRE(generalized_degree_bound(simplex, simplex) == 1);
    REQUIRE(generalized_degree_bound(steep_triangle(), simplex) == 4);

    testutil::Rng rng(818181);
    for (int trial = 0; trial < 10; ++trial) {
        const Indicator u = testutil::random_indicator(rng, 2, 3);
        REQUIRE(generalized_degree_bound(u, simplex) == sigma(u));
    }
}

TEST_CASE("degree identity: swept measure versus mixed volume") {
    const DegreeIdentity box_case =
        degree_identity_check(box_indicator(v2(1, 1)), simplex_indicator(2, 1));
    REQUIRE(box_case.lhs == 2);
    REQUIRE(box_case.rhs == 2);
    REQUIRE(box_case.equal);

    testutil::Rng rng(272727);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 2);
        const Indicator w = testutil::random_exhaustive_indicator(rng, n, 3);
        const DegreeIdentity self = degree_identity_check(w, w);
        REQUIRE(self.equal);
        REQUIRE(self.lhs == Rational(factorial(n)) * volume(w.theta()));
    }
}

TEST_CASE("degree identity holds on random pairs with exhaustive weights") {
    testutil::Rng rng(515151);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 2);
        Indicator u = testutil::random_indicator(rng, n, 3);
        while (!u.theta().is_full_dimensional())
            u = testutil::random_indicator(rng, n, 3);
        const Indicator w = testutil::random_exhaustive_indicator(rng, n, 3);
        const DegreeIdentity id = degree_identity_check(u, w);
        REQUIRE(id.equal);
    }
}

TEST_CASE("a non-exhaustive weight separates the two degree computations") {
    // the steep triangle has an origin facet with normal (-1, 1); the
    // direction it misses carries mixed volume that the swept atoms cannot
    // see, so the identity fails by exactly that term
    const DegreeIdentity id =
        degree_identity_check(simplex_indicator(2, 1), steep_triangle());
    REQUIRE(id.lhs == 2);
    REQUIRE(id.rhs == 4);
    REQUIRE_FALSE(id.equal);
}

TEST_CASE("relative-type degree bound: frozen values and domination") {
    const Indicator simplex = simplex_indicator(2, 1);
    REQUIRE(degree_sigma_bound(box_indicator(v2(1, 1)), simplex) == 2);
    REQUIRE(degree_sigma_bound(simplex_indicator(2, 2), simplex) == 2);
    REQUIRE(degree_sigma_bound(steep_triangle(), simplex) == 4);
    REQUIRE(generalized_degree_bound(steep_triangle(), simplex) == 4);

    REQUIRE_THROWS_AS(degree_sigma_bound(simplex, steep_triangle()),
                      precondition_error);

    testutil::Rng rng(939393);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 2);
        const Indicator u = testutil::random_indicator(rng, n, 3);
        const Indicator w = testutil::random_exhaustive_indicator(rng, n, 2);
        REQUIRE(generalized_degree_bound(u, w) <= degree_sigma_bound(u, w));
    }
}

TEST_CASE("generalized degree bound is monotone in the measured body") {
    testutil::Rng rng(646464);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 2);
        const Indicator big = testutil::random_indicator(rng, n, 4);
        std::vector<Vec> sub;
        sub.emplace_back(static_cast<std::size_t>(n), Rational(0));
        for (const Vec& v : big.theta().vertices())
            if (rng() % 2) sub.push_back(v);
        const Indicator small =
            Indicator(n, Polytope::convex_hull(n, std::move(sub)));
        const Indicator w = testutil::random_exhaustive_indicator(rng, n, 2);
        REQUIRE(generalized_degree_bound(small, w) <=
                generalized_degree_bound(big, w));
    }
}
