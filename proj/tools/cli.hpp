#pragma once

/* Command-line front end: a system description arrives as flags or as a
 * JSON document, gets dispatched to the library, and leaves as a
 * deterministic JSON or TSV report on standard output.  Exit codes: 0 on
 * success, 2 for input errors, 3 for violated mathematical preconditions
 * (degenerate system, non-exhaustive weight, positive-dimensional zeros).
 */

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "serialize.hpp"

namespace newtonma::cli {

inline constexpr const char* VERSION = "newtonma 0.1.0";

struct WeightSpec {
    enum class Kind { simplex, box, weighted };
    Kind kind = Kind::simplex;
    Vec box_sides;          // kind == box
    WeightedSupport terms;  // kind == weighted
};

struct SystemSpec {
    int n_vars = 0;
    std::vector<std::string> polynomials;
    Vec center;  // empty means the origin
    std::string mode = "affine";
    WeightSpec weight;
    Rational delta_t = Rational(1);
};

inline std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string::npos) return parts;
        start = pos + 1;
    }
}

inline Vec parse_vec(const std::string& text) {
    Vec out;
    for (const std::string& part : split(text, ',')) out.push_back(parse_rational(part));
    return out;
}

/* Weight grammar: "simplex" | "box:a1,a2,..." | "e1,e2:c;e1,e2:c;..."
 * (weighted support pairs, exponents then the weight). */
inline WeightSpec parse_weight_string(const std::string& text) {
    WeightSpec w;
    if (text == "simplex") return w;
    if (text.rfind("box:", 0) == 0) {
        w.kind = WeightSpec::Kind::box;
        w.box_sides = parse_vec(text.substr(4));
        return w;
    }
    w.kind = WeightSpec::Kind::weighted;
    for (const std::string& part : split(text, ';')) {
        const std::size_t colon = part.rfind(':');
        if (colon == std::string::npos)
            throw input_error("malformed weight term '" + part + "'");
        WeightedTerm term;
        for (const std::string& es : split(part.substr(0, colon), ',')) {
            try {
                term.exponent.push_back(std::stoi(es));
            } catch (const std::exception&) {
                throw input_error("malformed exponent '" + es + "'");
            }
        }
        term.weight = parse_rational(part.substr(colon + 1));
        w.terms.push_back(std::move(term));
    }
    return w;
}

inline Rational rational_from_json(const ojson& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_array() && j.size() == 2 && j[0].is_string() && j[1].is_string()) {
        try {
            return make_rational(Integer(j[0].get<std::string>()),
                                 Integer(j[1].get<std::string>()));
        } catch (const std::invalid_argument&) {
            throw input_error("malformed rational pair " + j.dump());
        }
    }
    throw input_error("expected a rational (string, integer, or pair): " + j.dump());
}

inline WeightSpec weight_from_json(const ojson& j) {
    WeightSpec w;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "simplex") return w;
    if (kind == "box") {
        w.kind = WeightSpec::Kind::box;
        for (const auto& side : j.at("sides")) w.box_sides.push_back(rational_from_json(side));
        return w;
    }
    if (kind == "weighted") {
        w.kind = WeightSpec::Kind::weighted;
        for (const auto& tj : j.at("terms")) {
            WeightedTerm term;
            for (const auto& e : tj.at("exponent")) term.exponent.push_back(e.get<int>());
            term.weight = rational_from_json(tj.at("weight"));
            w.terms.push_back(std::move(term));
        }
        return w;
    }
    throw input_error("unknown weight kind '" + kind + "'");
}

inline ojson weight_json(const WeightSpec& w) {
    ojson out;
    switch (w.kind) {
        case WeightSpec::Kind::simplex:
            out["kind"] = "simplex";
            break;
        case WeightSpec::Kind::box:
            out["kind"] = "box";
            out["sides"] = vec_json(w.box_sides);
            break;
        case WeightSpec::Kind::weighted: {
            out["kind"] = "weighted";
            ojson terms = ojson::array();
            for (const WeightedTerm& t : w.terms) {
                ojson tj;
                tj["exponent"] = t.exponent;
                tj["weight"] = rational_json(t.weight);
                terms.push_back(std::move(tj));
            }
            out["terms"] = std::move(terms);
            break;
        }
    }
    return out;
}

inline SystemSpec spec_from_json(const ojson& j) {
    static const std::vector<std::string> known{"n_vars", "polynomials", "center",
                                                "mode",   "weight",      "delta_T"};
    for (const auto& [key, val] : j.items()) {
        (void)val;
        bool ok = false;
        for (const std::string& k : known) ok = ok || k == key;
        if (!ok) throw input_error("unknown system field '" + key + "'");
    }
    SystemSpec s;
    s.n_vars = j.at("n_vars").get<int>();
    for (const auto& p : j.at("polynomials")) s.polynomials.push_back(p.get<std::string>());
    if (j.contains("center"))
        for (const auto& c : j.at("center")) s.center.push_back(rational_from_json(c));
    if (j.contains("mode")) s.mode = j.at("mode").get<std::string>();
    if (j.contains("weight")) s.weight = weight_from_json(j.at("weight"));
    if (j.contains("delta_T")) s.delta_t = rational_from_json(j.at("delta_T"));
    return s;
}

inline ojson spec_json(const SystemSpec& s) {
    ojson out;
    out["n_vars"] = s.n_vars;
    out["polynomials"] = s.polynomials;
    out["center"] = vec_json(s.center);
    out["mode"] = s.mode;
    out["weight"] = weight_json(s.weight);
    out["delta_T"] = rational_json(s.delta_t);
    return out;
}

/* -------- resolved inputs -> library objects -------- */

inline void validate_spec(SystemSpec& s) {
    if (s.n_vars < 1) throw input_error("n_vars must be at least 1");
    if (s.polynomials.empty()) throw input_error("at least one polynomial is required");
    if (s.center.empty()) s.center.assign(static_cast<std::size_t>(s.n_vars), Rational(0));
    if (static_cast<int>(s.center.size()) != s.n_vars)
        throw input_error("center has the wrong dimension");
    if (s.mode != "affine" && s.mode != "torus")
        throw input_error("mode must be 'affine' or 'torus'");
    if (s.delta_t < 0) throw input_error("delta_T must be nonnegative");
}

inline Indicator weight_indicator(const SystemSpec& s) {
    switch (s.weight.kind) {
        case WeightSpec::Kind::simplex:
            return Indicator(s.n_vars, unit_simplex(s.n_vars));
        case WeightSpec::Kind::box:
            if (static_cast<int>(s.weight.box_sides.size()) != s.n_vars)
                throw input_error("box weight has the wrong dimension");
            return Indicator(s.n_vars, box_polytope(s.weight.box_sides));
        case WeightSpec::Kind::weighted:
            break;
    }
    const Indicator ind = from_weighted_support(s.weight.terms);
    if (ind.n_vars() != s.n_vars)
        throw input_error("weighted support has the wrong dimension");
    return ind;
}

inline std::vector<Indicator> affine_indicators(const SystemSpec& s) {
    std::vector<Indicator> out;
    out.reserve(s.polynomials.size());
    for (const std::string& text : s.polynomials)
        out.push_back(newton_at_infinity(parse_polynomial(text, s.n_vars), s.center));
    return out;
}

inline std::vector<Polytope> torus_bodies(const SystemSpec& s) {
    std::vector<Polytope> out;
    out.reserve(s.polynomials.size());
    for (const std::string& text : s.polynomials)
        out.push_back(torus_polytope(parse_polynomial(text, s.n_vars, true)));
    return out;
}

/* -------- subcommand handlers; each returns the report body -------- */

inline ojson handle_newton(const SystemSpec& s) {
    ojson inds = ojson::array();
    if (s.mode == "torus") {
        for (const Polytope& k : torus_bodies(s)) inds.push_back(polytope_json(k, "torus"));
    } else {
        for (const Indicator& ind : affine_indicators(s))
            inds.push_back(indicator_json(ind, "newton"));
    }
    ojson frag;
    frag["indicators"] = std::move(inds);
    return frag;
}

inline ojson handle_mixed_volume(const SystemSpec& s) {
    ojson bodies = ojson::array();
    std::vector<Polytope> ks;
    if (s.mode == "torus") {
        for (Polytope& k : torus_bodies(s)) {
            bodies.push_back(polytope_json(k, "torus"));
            ks.push_back(std::move(k));
        }
    } else {
        for (const Indicator& ind : affine_indicators(s)) {
            bodies.push_back(indicator_json(ind, "newton"));
            ks.push_back(ind.theta());
        }
    }
    if (static_cast<int>(ks.size()) != s.n_vars)
        throw input_error("mixed volume needs exactly n_vars polytopes");
    const Rational mv = mixed_volume(ks);
    ojson frag;
    frag["bodies"] = std::move(bodies);
    frag["mixed_volume"] = rational_json(mv);
    frag["n_factorial_mv"] = rational_json(Rational(factorial(s.n_vars)) * mv);
    return frag;
}

inline ojson handle_bounds(const SystemSpec& s, double tol) {
    if (s.mode != "affine") throw input_error("bounds are defined in affine mode");
    if (static_cast<int>(s.polynomials.size()) > s.n_vars)
        throw input_error("bounds need at most n_vars polynomials");
    const std::vector<Indicator> inds = affine_indicators(s);
    ojson frag;
    ojson ij = ojson::array();
    for (const Indicator& ind : inds) ij.push_back(indicator_json(ind, "newton"));
    frag["indicators"] = std::move(ij);
    frag["bounds"] = bound_report_json(compute_bounds(inds, s.n_vars, s.delta_t, tol));
    return frag;
}

inline ojson handle_degree(const SystemSpec& s) {
    if (s.mode != "affine") throw input_error("degree bounds are defined in affine mode");
    if (s.polynomials.size() != 1)
        throw input_error("degree takes exactly one polynomial");
    const Indicator w = weight_indicator(s);
    if (!is_exhaustive(w)) throw precondition_error("weight is not exhaustive");
    const Indicator u = affine_indicators(s).front();
    ojson frag;
    frag["measured"] = indicator_json(u, "newton");
    frag["weight"] = indicator_json(w, "weight");
    frag["swept_measure"] = swept_measure_json(swept_measure(w));
    frag["degree_bound"] = rational_json(generalized_degree_bound(u, w));
    frag["sigma_bound"] = rational_json(degree_sigma_bound(u, w));
    if (u.theta().is_full_dimensional()) {
        const DegreeIdentity id = degree_identity_check(u, w);
        ojson idj;
        idj["lhs"] = rational_json(id.lhs);
        idj["rhs"] = rational_json(id.rhs);
        idj["equal"] = id.equal;
        frag["identity"] = std::move(idj);
    }
    return frag;
}

inline ojson handle_verify_roots(const SystemSpec& s, double tol) {
    if (s.n_vars != 2 || s.polynomials.size() != 2)
        throw input_error("verify roots takes a bivariate system of two polynomials");
    const Polynomial p1 = parse_polynomial(s.polynomials[0], 2);
    const Polynomial p2 = parse_polynomial(s.polynomials[1], 2);
    ojson frag;
    frag["roots"] = root_count_json(count_roots_bivariate(p1, p2, tol), tol);
    return frag;
}

inline ojson handle_verify_mv(const SystemSpec& s, long long samples, std::uint64_t seed) {
    std::vector<Polytope> ks;
    ojson bodies = ojson::array();
    if (s.mode == "torus") {
        for (Polytope& k : torus_bodies(s)) {
            bodies.push_back(polytope_json(k, "torus"));
            ks.push_back(std::move(k));
        }
    } else {
        for (const Indicator& ind : affine_indicators(s)) {
            bodies.push_back(indicator_json(ind, "newton"));
            ks.push_back(ind.theta());
        }
    }
    if (static_cast<int>(ks.size()) != s.n_vars)
        throw input_error("mixed volume needs exactly n_vars polytopes");
    const Rational exact = mixed_volume(ks);
    const Rational oracle = mv_inclusion_exclusion(ks);
    ojson frag;
    frag["bodies"] = std::move(bodies);
    ojson mvj;
    mvj["production"] = rational_json(exact);
    mvj["oracle"] = rational_json(oracle);
    mvj["equal"] = exact == oracle;
    frag["mv_oracle"] = std::move(mvj);
    ojson vols = ojson::array();
    for (std::size_t i = 0; i < ks.size(); ++i) {
        ojson vj;
        vj["exact"] = rational_json(volume(ks[i]));
        if (ks[i].is_full_dimensional())
            vj["estimate"] = estimate_json(
                mc_volume(ks[i], samples, seed + static_cast<std::uint64_t>(i)));
        vols.push_back(std::move(vj));
    }
    frag["volumes"] = std::move(vols);
    return frag;
}

inline ojson handle_verify_type_grid(const SystemSpec& s, long grid) {
    if (s.polynomials.size() != 1)
        throw input_error("verify type-grid takes exactly one polynomial");
    const Indicator w = weight_indicator(s);
    const Indicator u = affine_indicators(s).front();
    const Rational exact = relative_type(u, w);
    const double probe = relative_type_grid_check(u, w, grid);
    ojson frag;
    ojson tj;
    tj["relative_type"] = rational_json(exact);
    ojson gj;
    gj["value"] = probe;
    gj["grid"] = grid;
    gj["tolerance"] = std::abs(probe) * 2.220446049250313e-16;  // rounding only
    tj["grid_max"] = std::move(gj);
    tj["lower_bound_ok"] = probe <= to_double(exact);
    frag["type_grid"] = std::move(tj);
    return frag;
}

inline ojson handle_verify_swept(const SystemSpec& s, double r, long long samples,
                                 std::uint64_t seed) {
    if (s.polynomials.size() != 1)
        throw input_error("verify swept-mean takes exactly one polynomial");
    const Indicator w = weight_indicator(s);
    if (!is_exhaustive(w)) throw precondition_error("weight is not exhaustive");
    const Polynomial p = parse_polynomial(s.polynomials[0], s.n_vars);
    const Indicator u = newton_at_infinity(p, s.center);
    const SampleEstimate est = swept_mean_estimate(p, w, r, samples, seed);
    ojson frag;
    ojson sj;
    sj["estimate"] = estimate_json(est);
    sj["r"] = r;
    sj["degree_bound"] = rational_json(generalized_degree_bound(u, w));
    ojson rate;
    rate["value"] = est.value / r;
    rate["stderr"] = est.std_err / r;
    sj["rate"] = std::move(rate);
    frag["swept_mean"] = std::move(sj);
    return frag;
}

/* -------- orchestration -------- */

inline std::uint64_t env_seed() {
    const char* raw = std::getenv("NEWTONMA_SEED");
    if (raw == nullptr || *raw == '\0') return 0;
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(raw, &used);
        if (used != std::string(raw).size()) throw std::invalid_argument(raw);
        return v;
    } catch (const std::exception&) {
        throw input_error("NEWTONMA_SEED must be an unsigned integer");
    }
}

struct Flags {
    int n = -1;
    std::vector<std::string> polys;
    std::string center, mode, weight, delta, spec_path;
    std::string format = "json";
    double tol = 1e-8;
    double bound_tol = 1e-9;
    long long samples = 10000;
    long long swept_samples = 100000;
    long grid = 200;
    double r = 50.0;
};

inline SystemSpec resolve_spec(const Flags& f) {
    SystemSpec s;
    if (!f.spec_path.empty()) {
        std::ifstream in(f.spec_path);
        if (!in) throw input_error("cannot read spec file '" + f.spec_path + "'");
        ojson doc;
        try {
            in >> doc;
        } catch (const nlohmann::json::exception& e) {
            throw input_error(std::string("malformed spec file: ") + e.what());
        }
        s = spec_from_json(doc);
    }
    if (f.n >= 0) s.n_vars = f.n;
    if (!f.polys.empty()) s.polynomials = f.polys;
    if (!f.center.empty()) s.center = parse_vec(f.center);
    if (!f.mode.empty()) s.mode = f.mode;
    if (!f.weight.empty()) s.weight = parse_weight_string(f.weight);
    if (!f.delta.empty()) s.delta_t = parse_rational(f.delta);
    validate_spec(s);
    return s;
}

inline int run(int argc, const char* const* argv, std::ostream& out) {
    CLI::App app{"Newton polyhedra at infinity: indicators, mass bounds, root counts"};
    app.set_version_flag("--version", VERSION);
    app.require_subcommand(1);

    Flags f;
    std::string command;
    const auto add_system_flags = [&f](CLI::App* sub) {
        sub->add_option("--n", f.n, "number of variables");
        sub->add_option("--poly", f.polys, "polynomial in z1..zn (repeatable)");
        sub->add_option("--center", f.center, "expansion point, comma-separated rationals");
        sub->add_option("--spec", f.spec_path, "JSON file with the whole system");
        sub->add_option("--format", f.format, "output format")
            ->check(CLI::IsMember({"json", "tsv"}));
    };
    const auto add_mode_flag = [&f](CLI::App* sub) {
        sub->add_option("--mode", f.mode, "affine (indicators) or torus (support hulls)")
            ->check(CLI::IsMember({"affine", "torus"}));
    };
    const auto add_weight_flag = [&f](CLI::App* sub) {
        sub->add_option("--weight", f.weight,
                        "comparison weight: simplex | box:a1,.. | e,..:c;..");
    };

    CLI::App* newton = app.add_subcommand("newton", "indicator extraction");
    add_system_flags(newton);
    add_mode_flag(newton);
    newton->callback([&command] { command = "newton"; });

    CLI::App* mv = app.add_subcommand("mixed-volume", "mixed volume of the system bodies");
    add_system_flags(mv);
    add_mode_flag(mv);
    mv->callback([&command] { command = "mixed-volume"; });

    CLI::App* bounds = app.add_subcommand("bounds", "all mass bounds for the system");
    add_system_flags(bounds);
    bounds->add_option("--delta-t", f.delta, "mass of the comparison current (rational)");
    bounds->add_option("--tol", f.bound_tol, "directional bound tolerance");
    bounds->callback([&command] { command = "bounds"; });

    CLI::App* degree = app.add_subcommand("degree",
                                          "swept measure and generalized degree bounds");
    add_system_flags(degree);
    add_weight_flag(degree);
    degree->callback([&command] { command = "degree"; });

    CLI::App* verify = app.add_subcommand("verify", "independent numeric cross-checks");
    verify->require_subcommand(1);
    CLI::App* vroots = verify->add_subcommand("roots", "bivariate root counts");
    add_system_flags(vroots);
    vroots->add_option("--tol", f.tol, "root clustering tolerance");
    vroots->callback([&command] { command = "verify-roots"; });
    CLI::App* vmv = verify->add_subcommand("mv-oracle",
                                           "mixed volume against the naive oracle");
    add_system_flags(vmv);
    add_mode_flag(vmv);
    vmv->add_option("--samples", f.samples, "Monte Carlo samples per body");
    vmv->callback([&command] { command = "verify-mv"; });
    CLI::App* vgrid = verify->add_subcommand("type-grid",
                                             "relative type against a direction grid");
    add_system_flags(vgrid);
    add_weight_flag(vgrid);
    vgrid->add_option("--grid", f.grid, "number of grid directions");
    vgrid->callback([&command] { command = "verify-type-grid"; });
    CLI::App* vswept = verify->add_subcommand("swept-mean",
                                              "swept torus mean of log|P|");
    add_system_flags(vswept);
    add_weight_flag(vswept);
    vswept->add_option("--r", f.r, "radius scale");
    vswept->add_option("--samples", f.swept_samples, "samples per atom");
    vswept->callback([&command] { command = "verify-swept-mean"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, std::cerr);
        return code == 0 ? 0 : 2;
    }

    try {
        const std::uint64_t seed = env_seed();
        const SystemSpec s = resolve_spec(f);
        ojson rep;
        rep["version"] = VERSION;
        rep["command"] = command;
        rep["seed"] = seed;
        rep["inputs"] = spec_json(s);
        ojson frag;
        if (command == "newton") frag = handle_newton(s);
        else if (command == "mixed-volume") frag = handle_mixed_volume(s);
        else if (command == "bounds") frag = handle_bounds(s, f.bound_tol);
        else if (command == "degree") frag = handle_degree(s);
        else if (command == "verify-roots") frag = handle_verify_roots(s, f.tol);
        else if (command == "verify-mv") frag = handle_verify_mv(s, f.samples, seed);
        else if (command == "verify-type-grid") frag = handle_verify_type_grid(s, f.grid);
        else if (command == "verify-swept-mean")
            frag = handle_verify_swept(s, f.r, f.swept_samples, seed);
        for (auto& [key, val] : frag.items()) rep[key] = std::move(val);
        if (f.format == "tsv") write_tsv(out, rep, "");
        else out << rep.dump(2) << '\n';
        return 0;
    } catch (const input_error& e) {
        std::cerr << "newtonma: " << e.what() << '\n';
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "newtonma: " << e.what() << '\n';
        return 3;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "newtonma: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace newtonma::cli
