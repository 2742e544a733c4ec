#pragma once

/* JSON views of the library types, plus a TSV flattening of the same
 * reports.  Exact rationals appear as [numerator, denominator] string
 * pairs so nothing is rounded; floating-point estimates always travel
 * with their tolerance or standard error.
 */

#include <ostream>
#include <string>

#include <json.hpp>

#include "newtonma/bounds.hpp"
#include "newtonma/degree.hpp"
#include "newtonma/indicator.hpp"
#include "newtonma/oracle.hpp"
#include "newtonma/polytope.hpp"
#include "newtonma/roots.hpp"

namespace newtonma::cli {

using ojson = nlohmann::ordered_json;

inline ojson rational_json(const Rational& q) {
    return ojson::array({q.get_num().get_str(), q.get_den().get_str()});
}

inline ojson vec_json(const Vec& v) {
    ojson out = ojson::array();
    for (const Rational& x : v) out.push_back(rational_json(x));
    return out;
}

inline ojson polytope_json(const Polytope& k, const std::string& kind) {
    ojson out;
    out["kind"] = kind;
    out["n_vars"] = k.dim();
    out["full_dimensional"] = k.is_full_dimensional();
    ojson verts = ojson::array();
    for (const Vec& v : k.vertices()) verts.push_back(vec_json(v));
    out["vertices"] = std::move(verts);
    if (k.is_full_dimensional()) {
        ojson facets = ojson::array();
        for (const Facet& f : k.facets()) {
            ojson fj;
            ojson normal = ojson::array();
            for (const Integer& t : f.normal) normal.push_back(t.get_str());
            fj["normal"] = std::move(normal);
            fj["offset"] = rational_json(f.offset);
            facets.push_back(std::move(fj));
        }
        out["facets"] = std::move(facets);
    }
    return out;
}

inline ojson indicator_json(const Indicator& ind, const std::string& kind) {
    ojson out = polytope_json(ind.theta(), kind);
    out["exhaustive"] = is_exhaustive(ind);
    return out;
}

inline ojson estimate_json(const SampleEstimate& est) {
    ojson out;
    out["value"] = est.value;
    out["stderr"] = est.std_err;
    out["samples"] = est.samples;
    out["seed"] = est.seed;
    return out;
}

inline ojson bound_report_json(const BoundReport& rep) {
    ojson out;
    out["n_vars"] = rep.n_vars;
    out["n_inputs"] = rep.n_inputs;
    out["delta_t"] = rational_json(rep.delta_t);
    out["bezout"] = rational_json(rep.bezout);
    out["mixed_volume"] = rational_json(rep.mixed_volume);
    if (rep.permanent) out["permanent"] = rational_json(*rep.permanent);
    if (rep.kouchnirenko) out["kouchnirenko"] = rational_json(*rep.kouchnirenko);
    if (rep.directional) {
        ojson dir;
        dir["value"] = rep.directional->value;
        dir["tolerance"] = rep.directional->tolerance;
        dir["iterations"] = rep.directional->iterations;
        dir["degenerate"] = rep.directional->degenerate;
        ojson mini = ojson::array();
        for (double m : rep.directional->minimizer) mini.push_back(m);
        dir["minimizer"] = std::move(mini);
        out["directional"] = std::move(dir);
    }
    return out;
}

inline ojson swept_measure_json(const SweptMeasure& sm) {
    ojson out;
    ojson atoms = ojson::array();
    for (const SweptAtom& a : sm.atoms) {
        ojson aj;
        aj["point"] = vec_json(a.point);
        aj["mass"] = rational_json(a.mass);
        atoms.push_back(std::move(aj));
    }
    out["atoms"] = std::move(atoms);
    out["total"] = rational_json(sm.total);
    return out;
}

inline ojson root_count_json(const RootCount& rc, double tol) {
    ojson out;
    out["affine"] = rc.affine;
    out["torus"] = rc.torus;
    out["certified"] = rc.certified;
    out["tolerance"] = tol;
    return out;
}

/* TSV flattening: one row per scalar, object keys joined with dots, array
 * elements indexed — except arrays of scalars, which join into one cell. */
inline void write_tsv(std::ostream& out, const ojson& j, const std::string& prefix) {
    if (j.is_object()) {
        for (const auto& [key, val] : j.items())
            write_tsv(out, val, prefix.empty() ? key : prefix + "." + key);
        return;
    }
    if (j.is_array()) {
        bool scalars = !j.empty();
        for (const auto& v : j)
            if (v.is_structured()) scalars = false;
        if (scalars) {
            out << prefix << '\t';
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out << ',';
                const auto& v = j[i];
                out << (v.is_string() ? v.get<std::string>() : v.dump());
            }
            out << '\n';
            return;
        }
        for (std::size_t i = 0; i < j.size(); ++i)
            write_tsv(out, j[i], prefix + "[" + std::to_string(i) + "]");
        if (j.empty()) out << prefix << "\t[]\n";
        return;
    }
    out << prefix << '\t' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
}

}  // namespace newtonma::cli
