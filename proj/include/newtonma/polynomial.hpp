#pragma once

/*
 * Sparse multivariate polynomials over exact rationals.
 *
 * Variables are z1..zn.  A polynomial is a map from exponent vectors to
 * nonzero coefficients; the zero polynomial is the empty map.  Laurent
 * exponents (negative entries) are admitted only when a parse explicitly
 * asks for them, and only the torus-side pipeline consumes such inputs.
 *
 * Term order used for serialization is graded lexicographic, leading term
 * first: higher total degree wins, ties break lexicographically.
 */

#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "newtonma/rational.hpp"

namespace newtonma {

using Exponent = std::vector<int>;

inline long total_degree(const Exponent& e) {
    long s = 0;
    for (int x : e) s += x;
    return s;
}

struct GradedLexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const {
        const long da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        return a > b;  // lexicographic on equal degree
    }
};

using TermMap = std::map<Exponent, Rational, GradedLexGreater>;

struct Polynomial {
    int n_vars = 0;
    TermMap terms;  // invariant: no zero coefficients, keys have n_vars entries

    bool is_zero() const { return terms.empty(); }

    bool is_laurent() const {
        for (const auto& [e, c] : terms)
            for (int x : e)
                if (x < 0) return true;
        return false;
    }
};

inline void add_term(Polynomial& p, const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto it = p.terms.find(e);
    if (it == p.terms.end()) {
        p.terms.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) p.terms.erase(it);
    }
}

namespace detail {

/*
 * Recursive-descent parser for
 *   expression := term (('+'|'-') term)*
 *   term       := [sign] (coeff ['*' factor ('*' factor)*] | factor ('*' factor)*)
 *   coeff      := integer ['/' integer]
 *   factor     := 'z' index ['^' integer]
 * Whitespace is permitted between tokens.  Diagnostics carry the byte
 * position of the offending character.
 */
class PolyParser {
public:
    PolyParser(const std::string& text, int n_vars, bool laurent)
        : text_(text), n_(n_vars), laurent_(laurent) {}

    Polynomial run() {
        Polynomial p;
        p.n_vars = n_;
        skip_ws();
        if (at_end()) fail("empty polynomial");
        int sign = read_sign_opt();
        read_term(p, sign);
        skip_ws();
        while (!at_end()) {
            char c = text_[pos_];
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            ++pos_;
            read_term(p, c == '-' ? -1 : 1);
            skip_ws();
        }
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw input_error("parse error at position " + std::to_string(pos_) +
                          ": " + msg);
    }

    bool at_end() const { return pos_ >= text_.size(); }
    void skip_ws() {
        while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    int read_sign_opt() {
        skip_ws();
        if (!at_end() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            return text_[pos_++] == '-' ? -1 : 1;
        }
        return 1;
    }

    Integer read_integer() {
        skip_ws();
        bool neg = false;
        if (!at_end() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            neg = text_[pos_++] == '-';
        }
        if (at_end() || !isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected integer");
        std::string digits;
        while (!at_end() && isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        Integer v(digits);
        return neg ? Integer(-v) : v;
    }

    /* factor := 'z' index ['^' integer]; caller guarantees peek is 'z'. */
    void read_factor(Exponent& e) {
        ++pos_;  // 'z'
        if (at_end() || !isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected variable index after 'z'");
        std::string digits;
        while (!at_end() && isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        const long idx = std::stol(digits);
        if (idx < 1 || idx > n_) fail("variable z" + digits + " out of range");
        long exp = 1;
        skip_ws();
        if (!at_end() && text_[pos_] == '^') {
            ++pos_;
            Integer raw = read_integer();
            if (!raw.fits_sint_p()) fail("exponent too large");
            exp = raw.get_si();
            if (exp < 0 && !laurent_) fail("negative exponent outside Laurent mode");
        }
        e[static_cast<std::size_t>(idx - 1)] += static_cast<int>(exp);
    }

    void read_term(Polynomial& p, int outer_sign) {
        skip_ws();
        int sign = outer_sign;
        if (!at_end() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            if (text_[pos_] == '-') sign = -sign;
            ++pos_;
            skip_ws();
        }
        Rational coeff = sign;
        bool have_coeff = false, have_factor = false;
        Exponent e(static_cast<std::size_t>(n_), 0);

        if (!at_end() && isdigit(static_cast<unsigned char>(text_[pos_]))) {
            Integer num = read_integer();
            Integer den = 1;
            skip_ws();
            if (!at_end() && text_[pos_] == '/') {
                ++pos_;
                den = read_integer();
                if (den == 0) fail("zero denominator");
            }
            coeff *= make_rational(num, den);
            have_coeff = true;
            skip_ws();
            if (!at_end() && text_[pos_] == '*') {
                ++pos_;
                skip_ws();
                if (at_end() || text_[pos_] != 'z') fail("expected factor after '*'");
            }
        }
        while (!at_end() && text_[pos_] == 'z') {
            read_factor(e);
            have_factor = true;
            skip_ws();
            if (!at_end() && text_[pos_] == '*') {
                ++pos_;
                skip_ws();
                if (at_end() || text_[pos_] != 'z') fail("expected factor after '*'");
            }
        }
        if (!have_coeff && !have_factor) fail("expected term");
        add_term(p, e, coeff);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int n_;
    bool laurent_;
};

}  // namespace detail

inline Polynomial parse_polynomial(const std::string& text, int n_vars,
                                   bool laurent = false) {
    if (n_vars < 1) throw input_error("n_vars must be positive");
    return detail::PolyParser(text, n_vars, laurent).run();
}

/* Graded-lex descending, "num/den" coefficients, '*' between all factors.
   parse(serialize(p)) == p, and serialize is a fixed point on parsed input. */
inline std::string serialize_polynomial(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms) {
        const bool neg = c < 0;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        Rational mag = neg ? Rational(-c) : c;
        std::string factors;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += "z" + std::to_string(k + 1);
            if (e[k] != 1) factors += "^" + std::to_string(e[k]);
        }
        if (factors.empty()) {
            out += format_rational(mag);
        } else {
            if (mag != 1) out += format_rational(mag) + "*";
            out += factors;
        }
    }
    return out;
}

/* Exponent vectors of the nonzero terms.  Empty support is an error: the
   zero polynomial has no Newton data. */
inline std::vector<Exponent> support(const Polynomial& p) {
    if (p.is_zero()) throw precondition_error("support of the zero polynomial");
    std::vector<Exponent> out;
    out.reserve(p.terms.size());
    for (const auto& [e, c] : p.terms) out.push_back(e);
    return out;
}

/*
 * P(z + x) computed one variable at a time.  For each variable the terms
 * are regrouped as univariate coefficient stacks and shifted in place by
 * the synthetic-division scheme (a[j] += c * a[j+1], j descending), which
 * is exact over rationals and quadratic in the degree.
 */
inline Polynomial taylor_shift(const Polynomial& p, const Vec& x) {
    if (static_cast<int>(x.size()) != p.n_vars)
        throw input_error("center dimension mismatch");
    if (p.is_laurent())
        throw precondition_error("Taylor shift of a Laurent polynomial");
    Polynomial cur = p;
    for (int k = 0; k < p.n_vars; ++k) {
        const Rational& c = x[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        // group by the exponents away from variable k
        std::map<Exponent, std::vector<Rational>> groups;
        for (const auto& [e, coef] : cur.terms) {
            Exponent rest = e;
            const int dk = rest[static_cast<std::size_t>(k)];
            rest[static_cast<std::size_t>(k)] = 0;
            auto& stack = groups[rest];
            if (static_cast<int>(stack.size()) <= dk)
                stack.resize(static_cast<std::size_t>(dk) + 1, Rational(0));
            stack[static_cast<std::size_t>(dk)] = coef;
        }
        Polynomial next;
        next.n_vars = cur.n_vars;
        for (auto& [rest, stack] : groups) {
            const int d = static_cast<int>(stack.size()) - 1;
            for (int i = 0; i < d; ++i)
                for (int j = d - 1; j >= i; --j)
                    stack[static_cast<std::size_t>(j)] +=
                        c * stack[static_cast<std::size_t>(j) + 1];
            for (int j = 0; j <= d; ++j) {
                if (stack[static_cast<std::size_t>(j)] == 0) continue;
                Exponent e = rest;
                e[static_cast<std::size_t>(k)] = j;
                add_term(next, e, stack[static_cast<std::size_t>(j)]);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

namespace detail {

template <class T>
T pow_nonneg(const T& base, int e) {
    T acc(1);
    T b = base;
    int k = e;
    while (k > 0) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

/* Horner evaluation, dense in one variable per recursion level.  The term
   map is regrouped by the exponent of variable `var`; missing powers are
   zero coefficients of the dense stack. */
template <class T>
T horner_eval(const TermMap& terms, int n_vars, int var,
              const std::vector<T>& point) {
    if (terms.empty()) return T(0);
    if (var == n_vars) {
        // all exponents exhausted: a single constant term remains
        return T(to_double(terms.begin()->second));
    }
    std::map<int, TermMap> by_power;
    for (const auto& [e, c] : terms)
        by_power[e[static_cast<std::size_t>(var)]][e] = c;
    const int top = by_power.rbegin()->first;
    T acc(0);
    for (int d = top; d >= 0; --d) {
        acc *= point[static_cast<std::size_t>(var)];
        auto it = by_power.find(d);
        if (it != by_power.end())
            acc += horner_eval<T>(it->second, n_vars, var + 1, point);
    }
    return acc;
}

template <>
inline Rational horner_eval<Rational>(const TermMap& terms, int n_vars, int var,
                                      const std::vector<Rational>& point) {
    if (terms.empty()) return Rational(0);
    if (var == n_vars) return terms.begin()->second;
    std::map<int, TermMap> by_power;
    for (const auto& [e, c] : terms)
        by_power[e[static_cast<std::size_t>(var)]][e] = c;
    const int top = by_power.rbegin()->first;
    Rational acc(0);
    for (int d = top; d >= 0; --d) {
        acc *= point[static_cast<std::size_t>(var)];
        auto it = by_power.find(d);
        if (it != by_power.end())
            acc += horner_eval<Rational>(it->second, n_vars, var + 1, point);
    }
    return acc;
}

}  // namespace detail

inline std::complex<double> evaluate(const Polynomial& p,
                                     const std::vector<std::complex<double>>& z) {
    if (static_cast<int>(z.size()) != p.n_vars)
        throw input_error("evaluation point dimension mismatch");
    if (p.is_laurent())
        throw precondition_error("Horner evaluation of a Laurent polynomial");
    return detail::horner_eval<std::complex<double>>(p.terms, p.n_vars, 0, z);
}

inline Rational evaluate(const Polynomial& p, const Vec& z) {
    if (static_cast<int>(z.size()) != p.n_vars)
        throw input_error("evaluation point dimension mismatch");
    if (p.is_laurent())
        throw precondition_error("Horner evaluation of a Laurent polynomial");
    return detail::horner_eval<Rational>(p.terms, p.n_vars, 0, z);
}

}  // namespace newtonma
