#pragma once

/*
 * Exact rational scalars and small dense vectors.
 *
 * Everything downstream of the parser works over arbitrary-precision
 * rationals; floating point only appears in the explicitly numeric paths
 * (directional-type descent, root finding, Monte Carlo sampling).
 */

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "newtonma/errors.hpp"

namespace newtonma {

using Rational = mpq_class;
using Integer = mpz_class;

using Vec = std::vector<Rational>;     // rational point / direction
using IntVec = std::vector<Integer>;   // primitive facet normals, DD rays

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw input_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/* Accepts "num" or "num/den" with optional leading sign. */
inline Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        throw input_error("malformed rational '" + text + "'");
    }
}

/* Canonical form: "num" when the denominator is 1, else "num/den". */
inline std::string format_rational(const Rational& q) {
    return q.get_str();
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline Rational dot(const Vec& a, const Vec& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rational dot(const IntVec& a, const Vec& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
    return s;
}

inline bool lex_less(const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        const int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return a.size() < b.size();
}

inline bool lex_less(const IntVec& a, const IntVec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        const int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return a.size() < b.size();
}

/* Divides by the positive content so that entries are coprime; direction is
   preserved.  The zero vector is returned unchanged. */
inline void make_primitive(IntVec& v) {
    Integer g = 0;
    for (const auto& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    if (g == 0 || g == 1) return;
    for (auto& x : v) x /= g;
}

/* Clears denominators and divides by the content: the unique primitive
   integer vector pointing the same way. */
inline IntVec primitive_direction(const Vec& v) {
    Integer lcm = 1;
    for (const auto& q : v) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    }
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rational scaled = v[i] * Rational(lcm);
        out[i] = scaled.get_num();
    }
    make_primitive(out);
    return out;
}

}  // namespace newtonma
