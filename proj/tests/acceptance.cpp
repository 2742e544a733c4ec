/* Acceptance suite: end-to-end identities and tolerances on randomized
   instances, one PASS/FAIL line per criterion.  Exit code is the number
   of failed criteria.  Every random draw is seeded per criterion, so the
   run is reproducible byte for byte. */

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "newtonma/bounds.hpp"
#include "newtonma/degree.hpp"
#include "newtonma/indicator.hpp"
#include "newtonma/oracle.hpp"
#include "newtonma/polynomial.hpp"
#include "newtonma/polytope.hpp"
#include "newtonma/roots.hpp"
#include "newtonma/volume.hpp"
#include "test_util.hpp"

using namespace newtonma;
using testutil::Rng;

namespace {

std::string rstr(const Rational& q) { return q.get_str(); }

Rational nonzero_rational(Rng& rng, long lo, long hi, long den_hi) {
    for (;;) {
        Rational c = testutil::random_rational(rng, lo, hi, den_hi);
        if (c != 0) return c;
    }
}

Indicator full_dim_indicator(Rng& rng, int dim, int extra) {
    for (;;) {
        Indicator ind = testutil::random_indicator(rng, dim, extra);
        if (ind.theta().is_full_dimensional()) return ind;
    }
}

/* Box prod_k [0, sides_k] as a vertex hull. */
Polytope box_polytope(const Vec& sides) {
    const std::size_t n = sides.size();
    std::vector<Vec> corners;
    corners.reserve(std::size_t{1} << n);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Vec c(n, Rational(0));
        for (std::size_t k = 0; k < n; ++k)
            if (mask & (std::size_t{1} << k)) c[k] = sides[k];
        corners.push_back(std::move(c));
    }
    return Polytope::convex_hull(static_cast<int>(n), std::move(corners));
}

/* Permanent by direct expansion over permutations; n <= 4 here, so the
   24-term sum is cheaper than being clever and independent of the
   library's inclusion-exclusion version. */
Rational naive_permanent(const Matrix& m) {
    std::vector<std::size_t> perm(m.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    Rational acc(0);
    do {
        Rational prod(1);
        for (std::size_t j = 0; j < m.size(); ++j) prod *= m[j][perm[j]];
        acc += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

bool triangle_self_mass(std::string& detail) {
    std::vector<Vec> pts = {{Rational(0), Rational(0)},
                            {Rational(2), Rational(0)},
                            {Rational(2), Rational(2)}};
    Polytope tri = Polytope::convex_hull(2, std::move(pts));
    Rational mass = Rational(factorial(2)) * mixed_volume({tri, tri});
    if (mass == 4) return true;
    detail = "2!*MV(triangle, triangle) = " + rstr(mass) + ", expected 4";
    return false;
}

bool monomial_masses(std::string& detail) {
    Polynomial p = parse_polynomial("z1*z2", 2);
    Vec origin(2, Rational(0));
    Vec ones(2, Rational(1));
    Rational at0 =
        Rational(factorial(2)) * volume(newton_at_infinity(p, origin).theta());
    Rational at1 =
        Rational(factorial(2)) * volume(newton_at_infinity(p, ones).theta());
    if (at0 == 0 && at1 == 2) return true;
    detail = "masses " + rstr(at0) + " and " + rstr(at1) + ", expected 0 and 2";
    return false;
}

bool box_permanent_identity(std::string& detail) {
    Rng rng(1003);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 3;
        Matrix sides(static_cast<std::size_t>(n), Vec(static_cast<std::size_t>(n)));
        std::vector<Polytope> boxes;
        for (auto& row : sides) {
            for (auto& s : row) s = testutil::random_rational(rng, 1, 5, 2);
            boxes.push_back(box_polytope(row));
        }
        Rational lhs = Rational(factorial(n)) * mixed_volume(boxes);
        Rational rhs = naive_permanent(sides);
        if (lhs != rhs) {
            detail = "trial " + std::to_string(trial) + " (n=" +
                     std::to_string(n) + "): n!*MV = " + rstr(lhs) +
                     ", permanent = " + rstr(rhs);
            return false;
        }
    }
    return true;
}

bool degree_identity(std::string& detail) {
    Rng rng(1004);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 2;
        Indicator u = full_dim_indicator(rng, n, 2);
        Indicator w = testutil::random_exhaustive_indicator(rng, n, 2);
        DegreeIdentity id = degree_identity_check(u, w);
        if (!id.equal) {
            detail = "trial " + std::to_string(trial) + " (n=" +
                     std::to_string(n) + "): swept " + rstr(id.lhs) +
                     " vs mixed volume " + rstr(id.rhs);
            return false;
        }
    }
    return true;
}

bool bound_chain(std::string& detail) {
    Rng rng(1005);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 2;
        std::vector<Indicator> inds;
        for (int j = 0; j < n; ++j) inds.push_back(full_dim_indicator(rng, n, 2));
        BoundReport r = compute_bounds(inds, n);
        if (r.mixed_volume > *r.permanent || r.mixed_volume > r.bezout) {
            detail = "trial " + std::to_string(trial) + ": MV bound " +
                     rstr(r.mixed_volume) + " vs permanent " +
                     rstr(*r.permanent) + ", bezout " + rstr(r.bezout);
            return false;
        }
        if (!r.directional->degenerate &&
            to_double(r.mixed_volume) > r.directional->value + 1e-6) {
            detail = "trial " + std::to_string(trial) + ": MV bound " +
                     rstr(r.mixed_volume) + " vs directional " +
                     std::to_string(r.directional->value);
            return false;
        }
    }
    return true;
}

bool root_count_bounds(std::string& detail) {
    Rng rng(1006);
    Vec origin(2, Rational(0));
    int accepted = 0;
    for (int attempt = 0; attempt < 1000 && accepted < 50; ++attempt) {
        Polynomial p1 = testutil::random_polynomial(rng, 2, 4, 3);
        Polynomial p2 = testutil::random_polynomial(rng, 2, 4, 3);
        RootCount rc;
        try {
            rc = count_roots_bivariate(p1, p2);
        } catch (const precondition_error&) {
            continue;  // positive-dimensional draw
        }
        if (!rc.certified || rc.affine > 30) continue;
        ++accepted;
        Rational mvb = mixed_volume_bound(
            {newton_at_infinity(p1, origin), newton_at_infinity(p2, origin)}, 2);
        Rational tor = Rational(factorial(2)) *
                       mixed_volume({torus_polytope(p1), torus_polytope(p2)});
        if (Rational(static_cast<long>(rc.affine)) > mvb ||
            Rational(static_cast<long>(rc.torus)) > tor) {
            detail = "sparse draw " + std::to_string(accepted) + ": affine " +
                     std::to_string(rc.affine) + " vs bound " + rstr(mvb) +
                     ", torus " + std::to_string(rc.torus) + " vs " + rstr(tor);
            return false;
        }
    }
    if (accepted < 50) {
        detail = "only " + std::to_string(accepted) +
                 " certified sparse systems in 1000 draws";
        return false;
    }

    for (int trial = 0; trial < 20; ++trial) {
        const int d1 = 1 + trial % 4;
        const int d2 = 1 + (trial / 4) % 4;
        Polynomial p1{2, {}}, p2{2, {}};
        for (int e1 = 0; e1 <= d1; ++e1)
            for (int e2 = 0; e1 + e2 <= d1; ++e2)
                add_term(p1, {e1, e2}, nonzero_rational(rng, -9, 9, 3));
        for (int e1 = 0; e1 <= d2; ++e1)
            for (int e2 = 0; e1 + e2 <= d2; ++e2)
                add_term(p2, {e1, e2}, nonzero_rational(rng, -9, 9, 3));
        RootCount rc = count_roots_bivariate(p1, p2);
        if (rc.affine != static_cast<long long>(d1) * d2) {
            detail = "dense trial " + std::to_string(trial) + ": affine " +
                     std::to_string(rc.affine) + ", expected " +
                     std::to_string(d1 * d2);
            return false;
        }
    }
    return true;
}

bool swept_mean_convergence(std::string& detail) {
    Rng rng(1007);
    Indicator simplex(2, unit_simplex(2));
    const double r = 50.0;
    for (int trial = 0; trial < 10; ++trial) {
        Polynomial p;
        do {
            p = Polynomial{2, {}};
            std::uniform_int_distribution<int> exp_dist(0, 2);
            std::uniform_int_distribution<int> coef_dist(0, 3);
            for (int t = 0; t < 4; ++t) {
                Exponent e = {exp_dist(rng), exp_dist(rng)};
                static const long pool[4] = {-2, -1, 1, 2};
                add_term(p, e, Rational(pool[coef_dist(rng)]));
            }
        } while (p.is_zero() ||
                 sigma(newton_at_infinity(p, Vec(2, Rational(0)))) == 0);

        Rational bound =
            generalized_degree_bound(newton_at_infinity(p, Vec(2, Rational(0))),
                                     simplex);
        SampleEstimate est = swept_mean_estimate(
            p, simplex, r, 100000, static_cast<uint64_t>(trial));
        const double want = to_double(bound);
        const double got = est.value / r;
        const double allow = 0.02 * want + 5.0 * est.std_err / r;
        if (std::fabs(got - want) > allow) {
            detail = "trial " + std::to_string(trial) + ": estimate/r " +
                     std::to_string(got) + " vs bound " + std::to_string(want) +
                     " (allowed " + std::to_string(allow) + ")";
            return false;
        }
    }
    return true;
}

bool oracle_agreement(std::string& detail) {
    Rng rng(1008);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = trial < 150 ? 2 : (trial < 192 ? 3 : 4);
        std::vector<Polytope> ks;
        for (int j = 0; j < n; ++j)
            ks.push_back(testutil::random_polytope(rng, n, n == 2 ? 3 : n == 3 ? 1 : 0));
        Rational prod = mixed_volume(ks);
        Rational orac = mv_inclusion_exclusion(ks);
        if (prod != orac) {
            detail = "trial " + std::to_string(trial) + " (n=" +
                     std::to_string(n) + "): " + rstr(prod) + " vs " +
                     rstr(orac);
            return false;
        }
    }

    int within = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = trial < 60 ? 2 : 3;
        Polytope k = testutil::random_polytope(rng, n, 3);
        SampleEstimate est = mc_volume(k, 100000, 2000 + trial);
        const double exact = to_double(volume(k));
        if (std::fabs(est.value - exact) <= 4.0 * est.std_err + 1e-12) ++within;
    }
    if (within < 95) {
        detail = "only " + std::to_string(within) +
                 "/100 volume estimates within 4 standard errors";
        return false;
    }
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        bool (*run)(std::string&);
    };
    const std::vector<Criterion> criteria = {
        {"triangle self mixed volume equals 4", triangle_self_mass},
        {"monomial indicator masses at two centers", monomial_masses},
        {"box mixed volumes match the permanent", box_permanent_identity},
        {"swept-measure degree agrees with mixed volume", degree_identity},
        {"bound chain orders on random tuples", bound_chain},
        {"bivariate root counts respect polytope bounds", root_count_bounds},
        {"swept mean converges to the degree bound", swept_mean_convergence},
        {"oracles agree with exact volumes", oracle_agreement},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("unexpected exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        std::printf("[%s] %zu. %s (%.2f s)\n", ok ? "PASS" : "FAIL", i + 1,
                    criteria[i].name, secs);
        if (!ok) {
            if (!detail.empty()) std::printf("       %s\n", detail.c_str());
            ++failures;
        }
    }
    std::printf("acceptance: %zu/%zu criteria passed\n",
                criteria.size() - static_cast<std::size_t>(failures),
                criteria.size());
    return failures;
}
