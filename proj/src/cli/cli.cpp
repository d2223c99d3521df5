#include "sph/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "sph/catalog.hpp"
#include "sph/engine.hpp"
#include "sph/oracle.hpp"
#include "sph/spherical.hpp"

namespace sph {

namespace {

Json header(const std::string& command) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["command"] = command;
    return j;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

// A path to a JSON document (catalog entry or bare datum) or a catalog key.
CatalogEntry load_input(const std::string& arg) {
    if (std::filesystem::is_regular_file(arg)) {
        Json j = read_json_file(arg);
        if (j.is_object() && j.contains("key")) return parse_entry(j);
        CatalogEntry e;
        e.datum = parse_datum(j);
        e.key = e.datum.name.empty() ? arg : e.datum.name;
        return e;
    }
    auto keys = list_entries();
    if (std::find(keys.begin(), keys.end(), arg) != keys.end()) return load_entry(arg);
    throw input_error("'" + arg + "' is neither a readable file nor a catalog key");
}

std::optional<Rational> parse_q(const std::string& s) {
    if (s == "sym") return std::nullopt;
    Rational q = parse_rational(s);
    if (q <= 0) throw input_error("q must be positive");
    return q;
}

std::string default_q() {
    const char* env = std::getenv("SPH_Q_DEFAULT");
    return env && *env ? env : "sym";
}

std::string join_labels(const IMat& pts) {
    std::string out;
    for (const auto& p : pts) out += (out.empty() ? "" : " ") + to_string(p);
    return out;
}

std::string tsv_header(size_t rank, const std::string& tail) {
    std::string h;
    for (size_t i = 0; i < rank; ++i) h += "l" + std::to_string(i + 1) + "\t";
    return h + tail;
}

std::string tab_join(const IVec& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "\t" : "") + std::to_string(v[i]);
    return s;
}

std::string index_set(const std::vector<size_t>& xs) {
    std::string s = "{";
    for (size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s + "}";
}

void require_parabolic(const CatalogEntry& e) {
    if (e.engine.kind != "borel" && e.engine.kind != "pp")
        throw Error(ErrorKind::HypothesisNotMet, "'" + e.key + "' is not of the form U_P\\G (engine case borel or pp)");
}

ParabolicDatum parabolic_of(const CatalogEntry& e) {
    require_parabolic(e);
    return ParabolicDatum(build_root_datum(e.engine.group), e.engine.levi);
}

int cmd_describe(const CatalogEntry& e, bool json, std::ostream& out) {
    const SphericalDatum& d = e.datum;
    IMat sample = enumerate_orbits(d, 2, false);
    if (sample.size() > 8) sample.resize(8);
    Integer mult = arithmetic_multiplicity(d);
    bool wave = is_wavefront(d);
    size_t aut = aut_lineality(d).rank;
    if (json) {
        Json j = header("describe");
        j["datum"] = e.key;
        j["rank"] = d.rank();
        j["arithmetic_multiplicity"] = mult.get_str();
        j["wavefront"] = wave;
        j["aut_lineality_rank"] = aut;
        j["lambda_plus_sample"] = sample;
        emit(out, j);
        return kExitOk;
    }
    out << "datum\t" << e.key << "\n"
        << "rank\t" << d.rank() << "\n"
        << "arithmetic_multiplicity\t" << mult.get_str() << "\n"
        << "wavefront\t" << (wave ? "true" : "false") << "\n"
        << "aut_lineality_rank\t" << aut << "\n"
        << "lambda_plus_sample\t" << join_labels(sample) << "\n";
    return kExitOk;
}

int cmd_check(const CatalogEntry& e, const std::string& which, bool json, std::ostream& out) {
    const SphericalDatum& d = e.datum;
    bool pass = false;
    std::vector<std::string> lines;  // witness or certificate
    if (which == "colored-cone") {
        if (!d.colored_cone) throw input_error("'" + e.key + "' has no colored_cone");
        Verdict v = validate_colored_cone(d, *d.colored_cone);
        pass = v.ok;
        lines.push_back(v.ok ? "colored cone " + d.colored_cone->to_string() : v.diagnostic);
    } else if (which == "affine") {
        ColoredCone cc = d.colored_cone ? *d.colored_cone : ColoredCone(Cone::zero(d.rank()), {});
        AffineVerdict a = is_affine(d, cc);
        pass = a.affine;
        lines.push_back(a.affine ? "witness " + to_string(a.witness) : "no character separates V from the colors outside F");
    } else if (which == "wavefront") {
        pass = is_wavefront(d);
        lines.push_back(pass ? "V equals the antidominant image" : "V is larger than the antidominant image");
    } else if (which == "induced") {
        auto p = parabolic_induction(d);
        pass = p.has_value();
        lines.push_back(p ? "Delta_P " + index_set(*p) : "not parabolically induced");
    } else if (which == "negligible") {
        NegligibleReport r = negligible_orbit_check(d);
        pass = r.holds;
        for (const auto& [theta, w] : r.certificate)
            lines.push_back("Theta " + index_set(theta) + " -> " + (w ? "alpha_" + std::to_string(*w) : "none"));
        if (r.certificate.empty()) lines.push_back("no proper subsets of Delta_X");
    } else {
        throw input_error("unknown check '" + which + "' (colored-cone, affine, wavefront, induced, negligible)");
    }
    if (json) {
        Json j = header("check");
        j["datum"] = e.key;
        j["check"] = which;
        j["pass"] = pass;
        j["details"] = lines;
        emit(out, j);
    } else {
        out << which << "\t" << (pass ? "pass" : "fail") << "\n";
        for (const auto& l : lines) out << "  " << l << "\n";
    }
    return pass ? kExitOk : kExitFalse;
}

int cmd_orbits(const CatalogEntry& e, int height, bool integral, bool json, std::ostream& out) {
    IMat rows = enumerate_orbits(e.datum, height, integral);
    if (json) {
        Json j = header("orbits");
        j["datum"] = e.key;
        j["height"] = height;
        j["integral"] = integral;
        j["rows"] = rows;
        emit(out, j);
        return kExitOk;
    }
    out << tsv_header(e.datum.rank(), "height") << "\n";
    for (const auto& r : rows) {
        long long h = 0;
        for (auto x : r) h += std::llabs(x);
        out << tab_join(r) << "\t" << h << "\n";
    }
    return kExitOk;
}

int cmd_basicfn(const CatalogEntry& e, std::string which, int height, const std::string& qs, int kappa, bool all,
                bool json, std::ostream& out) {
    if (height < 0) throw input_error("height must be nonnegative");
    std::optional<Rational> q = parse_q(qs);
    if (which.empty()) which = e.engine.kind == "none" ? "borel" : e.engine.kind;
    if (which == "graded") {
        auto pieces = basic_function_graded(parabolic_of(e), height);
        if (json) {
            Json j = header("basicfn");
            j["datum"] = e.key;
            j["case"] = "graded";
            Json rows = Json::array();
            for (const auto& [deg, dec] : pieces)
                for (const auto& [hw, m] : dec) rows.push_back({{"degree", deg}, {"highest_weight", hw}, {"multiplicity", m}});
            j["pieces"] = rows;
            emit(out, j);
        } else {
            out << "degree\thighest_weight\tmultiplicity\n";
            for (const auto& [deg, dec] : pieces)
                for (const auto& [hw, m] : dec) out << deg << "\t" << to_string(hw) << "\t" << m << "\n";
        }
        return kExitOk;
    }
    BasicFunctionTable t;
    if (which == "borel" || which == "pp") require_parabolic(e);
    if (which == "borel") t = basic_function_borel(e.datum, e.engine, height);
    else if (which == "pp") t = basic_function_pp(e.datum, e.engine, height, kappa);
    else if (which == "smooth") t = basic_function_smooth(e.datum, height);
    else throw input_error("unknown case '" + which + "' (borel, pp, smooth, graded)");
    t.datum = e.key;
    if (!all) {
        // off the colored cone the basic function vanishes; keep the integral strata
        IMat keep = enumerate_orbits(e.datum, height, true);
        std::erase_if(t.values, [&](const auto& kv) { return std::find(keep.begin(), keep.end(), kv.first) == keep.end(); });
    }
    if (json) emit(out, render_table_json(t, q));
    else out << render_tsv(t, q);
    return kExitOk;
}

std::optional<QVec> parse_point(const std::string& s, size_t k) {
    if (s.empty()) return std::nullopt;
    QVec p(k);
    std::vector<bool> seen(k, false);
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw input_error("point entries look like z1=2");
        std::string key = item.substr(0, eq);
        if (!key.empty() && key[0] == 'z') key = key.substr(1);
        size_t idx = 0;
        try {
            idx = std::stoul(key);
        } catch (const std::exception&) {
            throw input_error("bad point coordinate '" + item.substr(0, eq) + "'");
        }
        if (idx < 1 || idx > k) throw input_error("point coordinate " + key + " out of range 1.." + std::to_string(k));
        p[idx - 1] = parse_rational(item.substr(eq + 1));
        seen[idx - 1] = true;
    }
    for (size_t i = 0; i < k; ++i)
        if (!seen[i]) throw input_error("point is missing z" + std::to_string(i + 1));
    return p;
}

int cmd_lf(const CatalogEntry& e, const std::string& rep, const std::string& point, int degree, int kappa, bool json,
           std::ostream& out) {
    ParabolicDatum p = parabolic_of(e);
    auto pt = parse_point(point, p.abelian_rank());
    LFactor lf;
    if (rep == "u_P") lf = local_lfactor(dual_radical(p), pt, kappa);
    else if (rep == "u_P_f") lf = local_lfactor(f_fixed(dual_radical(p)), p.abelian_rank(), pt, kappa);
    else throw input_error("unknown representation '" + rep + "' (u_P, u_P_f)");
    std::vector<std::string> names;
    for (size_t i = 0; i < lf.nvars; ++i) names.push_back("z" + std::to_string(i + 1));
    if (json) {
        Json j = header("lf");
        j["datum"] = e.key;
        j["rep"] = rep;
        j["kappa"] = kappa;
        Json mons = Json::array();
        for (const auto& m : lf.monomials)
            mons.push_back({{"z", m.z}, {"coeff", to_string(m.coeff)}, {"q_exp", to_string(m.q_exp)}});
        j["monomials"] = mons;
        Json coeffs = Json::array();
        for (int k = 0; k <= degree; ++k) coeffs.push_back(sympoly_to_string(lf.coefficient(k), names));
        j["coefficients"] = coeffs;
        emit(out, j);
        return kExitOk;
    }
    out << "L\t" << lf.to_string(names) << "\n";
    for (int k = 0; k <= degree; ++k) out << "T^" << k << "\t" << sympoly_to_string(lf.coefficient(k), names) << "\n";
    return kExitOk;
}

int cmd_catalog(const std::string& action, const std::string& key, bool json, std::ostream& out) {
    if (action == "list") {
        if (json) {
            Json j = header("catalog list");
            Json rows = Json::array();
            for (const auto& k : list_entries()) rows.push_back({{"key", k}, {"hash", content_hash(load_entry(k))}});
            j["entries"] = rows;
            emit(out, j);
        } else {
            for (const auto& k : list_entries()) out << k << "\t" << content_hash(load_entry(k)) << "\n";
        }
        return kExitOk;
    }
    if (key.empty()) throw input_error("catalog " + action + " needs a key");
    CatalogEntry e = load_entry(key);
    if (action == "show") {
        emit(out, render_entry(e));
        return kExitOk;
    }
    // test
    std::vector<FlagCheck> checks = check_entry_flags(e);
    if (!e.identification.is_null()) {
        CatalogEntry target = load_entry(e.identification.at("target").get<std::string>());
        IdentificationCheck id = check_identification(e, target);
        checks.push_back({"identification", id.ok(),
                          std::string("cone ") + (id.cone ? "ok" : "differs") + ", colors " +
                              (id.colors ? "ok" : "differ") + ", valuation cone " + (id.valuation_cone ? "ok" : "differs")});
    }
    bool all = std::all_of(checks.begin(), checks.end(), [](const FlagCheck& c) { return c.pass; });
    if (json) {
        Json j = header("catalog test");
        j["key"] = key;
        j["pass"] = all;
        Json rows = Json::array();
        for (const auto& c : checks) rows.push_back({{"flag", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        j["checks"] = rows;
        emit(out, j);
    } else {
        for (const auto& c : checks) out << c.name << "\t" << (c.pass ? "pass" : "FAIL") << "\t" << c.detail << "\n";
    }
    return all ? kExitOk : kExitFalse;
}

std::vector<unsigned> parse_q_list(const std::string& s) {
    std::vector<unsigned> qs;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            long v = std::stol(item);
            if (v < 2) throw input_error("q must be at least 2");
            qs.push_back(static_cast<unsigned>(v));
        } catch (const std::invalid_argument&) {
            throw input_error("bad q '" + item + "'");
        }
    }
    if (qs.empty()) throw input_error("empty q list");
    return qs;
}

int cmd_oracle(const std::string& action, const std::string& name, const std::string& qs, int height, int samples,
               std::uint64_t seed, bool json, std::ostream& out) {
    if (action == "list") {
        for (const auto& n : oracle::check_names()) out << n << "\n";
        return kExitOk;
    }
    if (name.empty()) throw input_error("oracle run needs a check name");
    oracle::CheckOptions o;
    o.qs = parse_q_list(qs);
    o.height = height;
    o.samples = samples;
    o.seed = seed;
    oracle::Report r = oracle::run_check(name, o);
    if (json) {
        Json j = header("oracle run");
        j["check"] = name;
        j["pass"] = r.pass;
        j["notes"] = r.notes;
        Json rows = Json::array();
        for (const auto& m : r.mismatches)
            rows.push_back({{"q", m.q}, {"label", m.label}, {"expected", m.expected}, {"got", m.got}});
        j["mismatches"] = rows;
        emit(out, j);
    } else {
        out << "check\t" << name << "\t" << (r.pass ? "pass" : "FAIL") << "\n";
        for (const auto& n : r.notes) out << "# " << n << "\n";
        if (!r.mismatches.empty()) out << oracle::mismatch_tsv(r);
    }
    return r.pass ? kExitOk : kExitFalse;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spherical varieties: combinatorial invariants and unramified local data"};
    app.name("sph");
    app.require_subcommand(1);

    std::string file, which, kase, qs = default_q(), rep = "u_P", point, action, key, name, oracle_qs = "2,3";
    int height = 4, degree = 3, kappa = kKappa, samples = 4;
    std::uint64_t seed = 1;
    bool json = false, integral = false, all_strata = false;

    auto add_json = [&](CLI::App* s) { s->add_flag("--json", json, "machine-readable output"); };

    auto* describe = app.add_subcommand("describe", "rank, multiplicity, wavefront, automorphism rank, sample of Lambda_X^+");
    describe->add_option("file", file, "JSON document or catalog key")->required();
    add_json(describe);

    auto* check = app.add_subcommand("check", "run one combinatorial check");
    check->add_option("file", file, "JSON document or catalog key")->required();
    check->add_option("which", which, "colored-cone, affine, wavefront, induced or negligible")->required();
    add_json(check);

    auto* orbits = app.add_subcommand("orbits", "tabulate Lambda_X^+ up to a height");
    orbits->add_option("file", file, "JSON document or catalog key")->required();
    orbits->add_option("--height", height, "l1 height bound");
    orbits->add_flag("--integral", integral, "only strata in the colored cone");
    add_json(orbits);

    auto* basicfn = app.add_subcommand("basicfn", "tabulate the basic function");
    basicfn->add_option("file", file, "JSON document or catalog key")->required();
    basicfn->add_option("--case", kase, "borel, pp, smooth or graded (default: the entry's engine case)");
    basicfn->add_option("--height", height, "l1 height bound, or top degree for graded");
    basicfn->add_option("--q", qs, "sym or a positive rational (default $SPH_Q_DEFAULT, else sym)");
    basicfn->add_option("--kappa", kappa, "sign in the shifted Satake parameter");
    basicfn->add_flag("--all", all_strata, "include the strata of Lambda_X^+ outside the colored cone");
    add_json(basicfn);

    auto* lf = app.add_subcommand("lf", "local L-factor of the dual radical");
    lf->add_option("file", file, "JSON document or catalog key")->required();
    lf->add_option("--rep", rep, "u_P or u_P_f");
    lf->add_option("--point", point, "z1=v1,z2=v2,... in Lambda_{G,P} coordinates");
    lf->add_option("--degree", degree, "print coefficients of T^0..T^degree");
    lf->add_option("--kappa", kappa, "sign in the shifted Satake parameter");
    add_json(lf);

    auto* catalog = app.add_subcommand("catalog", "list, show or test catalog entries");
    catalog->add_option("action", action, "list, show or test")->required()->check(CLI::IsMember({"list", "show", "test"}));
    catalog->add_option("key", key, "catalog key");
    add_json(catalog);

    auto* oracle = app.add_subcommand("oracle", "brute-force oracle suites");
    oracle->add_option("action", action, "run or list")->required()->check(CLI::IsMember({"run", "list"}));
    oracle->add_option("name", name, "check name");
    oracle->add_option("--q", oracle_qs, "comma-separated primes");
    oracle->add_option("--height", height, "height bound");
    oracle->add_option("--samples", samples, "random translates per stratum");
    oracle->add_option("--seed", seed, "seed for the random translates");
    add_json(oracle);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (describe->parsed()) return cmd_describe(load_input(file), json, out);
        if (check->parsed()) return cmd_check(load_input(file), which, json, out);
        if (orbits->parsed()) return cmd_orbits(load_input(file), height, integral, json, out);
        if (basicfn->parsed()) return cmd_basicfn(load_input(file), kase, height, qs, kappa, all_strata, json, out);
        if (lf->parsed()) return cmd_lf(load_input(file), rep, point, degree, kappa, json, out);
        if (catalog->parsed()) return cmd_catalog(action, key, json, out);
        if (oracle->parsed()) return cmd_oracle(action, name, oracle_qs, height, samples, seed, json, out);
    } catch (const Error& e) {
        static const char* kinds[] = {"input",     "not quasi-affine", "hypothesis not met", "not a character",
                                      "not an sl2 character", "precision", "unsupported rank"};
        err << "error (" << kinds[static_cast<int>(e.kind)] << "): " << e.what() << "\n";
        return kExitInput;
    } catch (const Json::exception& e) {
        err << "error (input): " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}

}  // namespace sph
