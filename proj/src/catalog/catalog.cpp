#include "sph/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <set>

namespace sph {

#ifndef SPH_CATALOG_DIR
#define SPH_CATALOG_DIR "src/catalog/data"
#endif

std::string catalog_dir() {
    const char* env = std::getenv("SPH_CATALOG_DIR");
    return env && *env ? std::string(env) : std::string(SPH_CATALOG_DIR);
}

std::vector<std::string> list_entries() {
    namespace fs = std::filesystem;
    std::vector<std::string> keys;
    fs::path dir(catalog_dir());
    if (!fs::is_directory(dir)) throw input_error("catalog directory '" + dir.string() + "' not found");
    for (const auto& f : fs::directory_iterator(dir))
        if (f.path().extension() == ".json") keys.push_back(f.path().stem().string());
    std::sort(keys.begin(), keys.end());
    return keys;
}

CatalogEntry load_entry(const std::string& key) {
    auto keys = list_entries();
    if (!std::binary_search(keys.begin(), keys.end(), key)) throw input_error("unknown catalog key '" + key + "'");
    CatalogEntry e = parse_entry(read_json_file(catalog_dir() + "/" + key + ".json"));
    if (e.key != key) throw input_error("catalog file '" + key + ".json' declares key '" + e.key + "'");
    return e;
}

std::string content_hash(const CatalogEntry& e) {
    std::string text = render_entry(e).dump();
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", h);
    return buf;
}

bool has_flag(const CatalogEntry& e, const std::string& name) { return e.flags.is_object() && e.flags.contains(name); }

bool flag_bool(const CatalogEntry& e, const std::string& name, bool fallback) {
    if (!has_flag(e, name)) return fallback;
    const Json& v = e.flags[name];
    if (!v.is_boolean()) throw input_error("flag '" + name + "' of '" + e.key + "' is not a boolean");
    return v.get<bool>();
}

namespace {

std::string factor_problem(const Json& f, const std::string& where) {
    if (!f.is_object()) return where + ": expected an object";
    if (!f.contains("rep") || !f["rep"].is_string() || f["rep"].get<std::string>().empty())
        return where + ": missing representation name";
    if (!f.contains("argument") || !f["argument"].is_object()) return where + ": missing argument";
    const Json& a = f["argument"];
    try {
        if (a.contains("const")) {
            if (!a["const"].is_string()) return where + ": argument constant must be a string";
            parse_rational(a["const"].get<std::string>());
        }
        if (a.contains("vars")) {
            if (!a["vars"].is_object()) return where + ": argument vars must be an object";
            for (auto it = a["vars"].begin(); it != a["vars"].end(); ++it) {
                if (!it.value().is_string()) return where + ": coefficient of " + it.key() + " must be a string";
                parse_rational(it.value().get<std::string>());
            }
        }
    } catch (const Error& e) {
        return where + ": " + e.what();
    }
    return "";
}

}  // namespace

std::string lvalue_problem(const Json& lv) {
    if (lv.is_null()) return "";
    if (!lv.is_object()) return "expected_lvalue must be an object";
    if (!lv.contains("numerator") || !lv["numerator"].is_array() || lv["numerator"].empty())
        return "expected_lvalue needs a nonempty numerator";
    for (const char* part : {"numerator", "denominator"}) {
        if (!lv.contains(part)) continue;
        if (!lv[part].is_array()) return std::string(part) + " must be an array";
        for (size_t i = 0; i < lv[part].size(); ++i) {
            std::string p = factor_problem(lv[part][i], std::string(part) + "[" + std::to_string(i) + "]");
            if (!p.empty()) return p;
        }
    }
    if (lv.contains("conjecture") && !lv["conjecture"].is_boolean()) return "conjecture must be a boolean";
    return "";
}

}  // namespace sph

namespace sph {

namespace {

std::string show(const std::optional<std::vector<size_t>>& v) {
    if (!v) return "not induced";
    std::string s = "[";
    for (size_t i = 0; i < v->size(); ++i) s += (i ? "," : "") + std::to_string((*v)[i]);
    return s + "]";
}

ColoredCone colored_from_json(const Json& j, size_t r) {
    IMat g;
    for (const auto& row : j.at("generators")) g.push_back(row.get<IVec>());
    return ColoredCone(Cone(r, g), j.at("colors").get<std::vector<std::string>>());
}

}  // namespace

std::vector<FlagCheck> check_entry_flags(const CatalogEntry& e) {
    const SphericalDatum& d = e.datum;
    std::vector<FlagCheck> out;
    auto record = [&](const std::string& name, bool pass, const std::string& detail) {
        out.push_back({name, pass, detail});
    };

    {
        bool contained = d.valuation_cone.contains(antidominant_image(d));
        record("antidominant image in V", contained, contained ? "contained" : "not contained");
    }
    {
        bool ok = true;
        for (const auto& g : d.spherical_roots)
            for (const auto& v : d.valuation_cone.generators())
                if (dot(to_q(g), v) > 0) ok = false;
        record("spherical roots nonpositive on V", ok, ok ? "ok" : "a root pairs positively");
    }
    if (has_flag(e, "wavefront_expected")) {
        bool got = is_wavefront(d);
        record("wavefront", got == flag_bool(e, "wavefront_expected"), got ? "wavefront" : "not wavefront");
    }
    if (d.colored_cone) {
        Verdict v = validate_colored_cone(d, *d.colored_cone);
        record("colored cone valid", v.ok, v.diagnostic);
        if (v.ok && has_flag(e, "affine_expected")) {
            AffineVerdict a = is_affine(d, *d.colored_cone);
            record("affine", a.affine == flag_bool(e, "affine_expected"),
                   a.affine ? "witness " + to_string(a.witness) : "no separating character");
        }
    }
    if (has_flag(e, "affine_closure")) {
        try {
            ColoredCone cc = affine_closure_data(d);
            ColoredCone want = colored_from_json(e.flags["affine_closure"], d.rank());
            bool valid = validate_colored_cone(d, cc).ok && is_affine(d, cc).affine;
            record("affine closure", cc == want && valid, cc.to_string());
        } catch (const Error& err) {
            record("affine closure", false, err.what());
        }
    }
    auto induced = parabolic_induction(d);
    if (flag_bool(e, "reductive_stabilizer"))
        record("reductive stabilizer not induced", !induced, show(induced));
    if (has_flag(e, "induced")) {
        const Json& f = e.flags["induced"];
        std::optional<std::vector<size_t>> want;
        if (!f.is_null()) want = f.get<std::vector<size_t>>();
        record("parabolic induction", induced == want, show(induced));
    }
    if (has_flag(e, "negligible")) {
        const Json& f = e.flags["negligible"];
        std::string got;
        try {
            got = negligible_orbit_check(d).holds ? "true" : "false";
        } catch (const Error& err) {
            if (err.kind != ErrorKind::HypothesisNotMet) throw;
            got = "hypothesis-not-met";
        }
        std::string want = f.is_boolean() ? (f.get<bool>() ? "true" : "false") : f.get<std::string>();
        record("negligible orbits", got == want, got);
    }
    if (has_flag(e, "used_in_prop_equal") && flag_bool(e, "used_in_prop_equal") && is_wavefront(d)) {
        bool holds = false;
        try {
            holds = negligible_orbit_check(d).holds;
        } catch (const Error&) {
        }
        record("negligible orbits (wavefront fixture)", holds, holds ? "holds" : "fails");
    }
    if (has_flag(e, "arithmetic_multiplicity")) {
        Integer m = arithmetic_multiplicity(d);
        record("arithmetic multiplicity", m == Integer(e.flags["arithmetic_multiplicity"].get<long>()), m.get_str());
    }
    if (has_flag(e, "aut_rank")) {
        size_t k = aut_lineality(d).rank;
        record("aut lineality rank", k == e.flags["aut_rank"].get<size_t>(), std::to_string(k));
    }
    if (has_flag(e, "geometric_multiplicity")) {
        auto g = geometric_multiplicity(d);
        record("geometric multiplicity", g && *g == e.flags["geometric_multiplicity"].get<size_t>(),
               g ? std::to_string(*g) : "no little Weyl group");
    }
    {
        std::string p = lvalue_problem(e.expected_lvalue);
        record("expected L-value well formed", p.empty(), p.empty() ? "ok" : p);
    }
    return out;
}

IdentificationCheck check_identification(const CatalogEntry& src, const CatalogEntry& target) {
    const Json& id = src.identification;
    if (!id.is_object() || !id.contains("lattice") || !id.contains("colors"))
        throw input_error("entry '" + src.key + "' has no identification record");
    QMat rows;
    for (const auto& row : id["lattice"]) rows.push_back(to_q(row.get<IVec>()));
    if (rows.size() != target.datum.rank())
        throw input_error("identification lattice map has the wrong number of rows");
    ColoredCone a = affine_closure_data(src.datum);
    ColoredCone b = affine_closure_data(target.datum);
    IdentificationCheck out;
    out.cone = a.cone.image(rows) == b.cone;
    std::vector<std::string> mapped;
    for (const auto& l : a.colors)
        if (id["colors"].contains(l)) mapped.push_back(id["colors"][l].get<std::string>());
    std::sort(mapped.begin(), mapped.end());
    out.colors = mapped == b.colors;
    out.valuation_cone = src.datum.valuation_cone.image(rows) == target.datum.valuation_cone;
    return out;
}

}  // namespace sph
