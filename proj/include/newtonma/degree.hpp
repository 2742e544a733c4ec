#pragma once

/* Swept-out boundary measure of a polytopal weight and the degree bounds
 * it induces.  A full-dimensional weight body, star-shaped from the
 * origin, decomposes into pyramids over its facets; each facet with
 * positive offset contributes an atom at its normal rescaled onto the
 * level set psi = 1, charged with the pyramid volume.  Facets through the
 * origin have flat pyramids and carry nothing, so the total mass is the
 * body volume however the atoms fall.
 */

#include <cstddef>
#include <utility>
#include <vector>

#include "newtonma/indicator.hpp"
#include "newtonma/volume.hpp"

namespace newtonma {

struct SweptAtom {
    Vec point;      // direction t with psi(weight, t) = 1
    Rational mass;  // volume of the pyramid over the defining facet
};

struct SweptMeasure {
    std::vector<SweptAtom> atoms;
    Rational total = 0;  // sum of masses = volume of the weight body
};

inline SweptMeasure swept_measure(const Indicator& ind_w) {
    if (!ind_w.theta().is_full_dimensional())
        throw precondition_error("swept measure needs a full-dimensional weight");
    const std::size_t n = static_cast<std::size_t>(ind_w.n_vars());
    const std::vector<Vec>& verts = ind_w.theta().vertices();
    SweptMeasure out;
    for (const Facet& f : ind_w.theta().facets()) {
        if (f.offset == 0) continue;
        SweptAtom atom;
        atom.point.resize(n);
        for (std::size_t k = 0; k < n; ++k)
            atom.point[k] = Rational(f.normal[k]) / f.offset;

        std::vector<Vec> pyramid;
        pyramid.reserve(f.vertex_ids.size() + 1);
        pyramid.emplace_back(n, Rational(0));
        for (std::size_t id : f.vertex_ids) pyramid.push_back(verts[id]);
        atom.mass = volume(Polytope::convex_hull(ind_w.n_vars(), std::move(pyramid)));

        out.total += atom.mass;
        out.atoms.push_back(std::move(atom));
    }
    return out;
}

/* n! * integral of psi(ind_u, .) against the swept measure of the weight. */
inline Rational generalized_degree_bound(const Indicator& ind_u,
                                         const Indicator& ind_w) {
    if (ind_u.n_vars() != ind_w.n_vars())
        throw input_error("degree bound dimension mismatch");
    const SweptMeasure sm = swept_measure(ind_w);
    Rational acc(0);
    for (const SweptAtom& atom : sm.atoms)
        acc += psi(ind_u, atom.point) * atom.mass;
    return Rational(factorial(ind_u.n_vars())) * acc;
}

struct DegreeIdentity {
    Rational lhs = 0;  // swept-measure pathway
    Rational rhs = 0;  // mixed-volume pathway
    bool equal = false;
};

/* Pits the swept-measure formula against n! * MV(body_u, body_w, ...,
 * body_w).  The two agree exactly whenever the weight is exhaustive; a
 * weight whose body has an origin facet with a partially positive normal
 * can separate them, which is why the verdict is reported rather than
 * asserted. */
inline DegreeIdentity degree_identity_check(const Indicator& ind_u,
                                            const Indicator& ind_w) {
    if (ind_u.n_vars() != ind_w.n_vars())
        throw input_error("degree identity dimension mismatch");
    if (!ind_u.theta().is_full_dimensional() ||
        !ind_w.theta().is_full_dimensional())
        throw precondition_error("degree identity needs full-dimensional bodies");
    DegreeIdentity out;
    out.lhs = generalized_degree_bound(ind_u, ind_w);
    std::vector<Polytope> bodies(static_cast<std::size_t>(ind_u.n_vars()),
                                 ind_w.theta());
    bodies[0] = ind_u.theta();
    out.rhs = Rational(factorial(ind_u.n_vars())) * mixed_volume(bodies);
    out.equal = out.lhs == out.rhs;
    return out;
}

/* Relative type times the weight's total swept mass (= n! * body volume);
 * an upper bound for the generalized degree bound because psi(ind_u, t) is
 * at most the relative type on the level set psi(weight, t) = 1. */
inline Rational degree_sigma_bound(const Indicator& ind_u,
                                   const Indicator& ind_w) {
    return relative_type(ind_u, ind_w) *
           Rational(factorial(ind_w.n_vars())) * volume(ind_w.theta());
}

}  // namespace newtonma
