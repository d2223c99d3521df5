#include "sph/io.hpp"

#include <fstream>
#include <sstream>

namespace sph {

namespace {

[[noreturn]] void field_error(const std::string& path, const std::string& what) {
    throw input_error("field '" + path + "': " + what);
}

const Json& member(const Json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) field_error(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) field_error(path.empty() ? key : path + "." + key, "missing");
    return *it;
}

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

long long as_int(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) field_error(path, "expected an integer");
    return j.get<long long>();
}

IVec as_ivec(const Json& j, const std::string& path) {
    if (!j.is_array()) field_error(path, "expected an array of integers");
    IVec v;
    for (size_t i = 0; i < j.size(); ++i) v.push_back(as_int(j[i], path + "[" + std::to_string(i) + "]"));
    return v;
}

IMat as_imat(const Json& j, const std::string& path) {
    if (!j.is_array()) field_error(path, "expected an array of integer arrays");
    IMat m;
    for (size_t i = 0; i < j.size(); ++i) m.push_back(as_ivec(j[i], path + "[" + std::to_string(i) + "]"));
    return m;
}

std::string as_string(const Json& j, const std::string& path) {
    if (!j.is_string()) field_error(path, "expected a string");
    return j.get<std::string>();
}

std::vector<size_t> as_indices(const Json& j, const std::string& path) {
    std::vector<size_t> out;
    for (long long x : as_ivec(j, path)) {
        if (x < 0) field_error(path, "indices must be nonnegative");
        out.push_back(static_cast<size_t>(x));
    }
    return out;
}

Json ivec_json(const IVec& v) {
    Json a = Json::array();
    for (auto x : v) a.push_back(x);
    return a;
}

Json imat_json(const IMat& m) {
    Json a = Json::array();
    for (const auto& r : m) a.push_back(ivec_json(r));
    return a;
}

IMat cone_generators(const Cone& c) {
    IMat out;
    for (const auto& g : c.generators()) out.push_back(to_i(g));
    return out;
}

Cone parse_cone(const Json& j, size_t dim, const std::string& path) {
    IMat g = as_imat(member(j, "generators", path), join(path, "generators"));
    for (size_t i = 0; i < g.size(); ++i)
        if (g[i].size() != dim)
            field_error(join(path, "generators") + "[" + std::to_string(i) + "]",
                        "expected length " + std::to_string(dim));
    return Cone(dim, g);
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        size_t line = 1, col = 1;
        for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw input_error(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), path);
}

RootDatum parse_group(const Json& j, const std::string& path) {
    if (j.is_string()) return build_root_datum(j.get<std::string>());
    if (!j.is_object()) field_error(path, "expected a label or an object");
    if (j.contains("custom")) {
        const Json& c = j["custom"];
        std::string p = join(path, "custom");
        std::string name = c.contains("name") ? as_string(c["name"], join(p, "name")) : "custom";
        long long rank = as_int(member(c, "rank", p), join(p, "rank"));
        if (rank < 0) field_error(join(p, "rank"), "must be nonnegative");
        return RootDatum(name, static_cast<size_t>(rank), as_imat(member(c, "simple_roots", p), join(p, "simple_roots")),
                         as_imat(member(c, "simple_coroots", p), join(p, "simple_coroots")));
    }
    if (j.contains("factors")) {
        const Json& f = j["factors"];
        if (!f.is_array() || f.empty()) field_error(join(path, "factors"), "expected a nonempty array of labels");
        std::string label;
        for (size_t i = 0; i < f.size(); ++i)
            label += (i ? "x" : "") + as_string(f[i], join(path, "factors") + "[" + std::to_string(i) + "]");
        return build_root_datum(label);
    }
    if (j.contains("type")) {
        // {type: A, rank: 2, isogeny: SL} and friends
        std::string type = as_string(j["type"], join(path, "type"));
        long long rank = as_int(member(j, "rank", path), join(path, "rank"));
        std::string iso = j.contains("isogeny") ? as_string(j["isogeny"], join(path, "isogeny")) : "";
        if (type == "A" && !iso.empty()) return build_root_datum(iso + std::to_string(rank + 1));
        return build_root_datum(type + std::to_string(rank));
    }
    field_error(path, "expected one of 'factors', 'type' or 'custom'");
}

Json render_group(const RootDatum& rd) {
    try {
        if (build_root_datum(rd.name()) == rd) {
            Json f = Json::array();
            size_t start = 0;
            while (true) {
                size_t x = rd.name().find('x', start);
                f.push_back(rd.name().substr(start, x - start));
                if (x == std::string::npos) break;
                start = x + 1;
            }
            return Json{{"factors", f}};
        }
    } catch (const Error&) {
    }
    return Json{{"custom",
                 {{"name", rd.name()},
                  {"rank", rd.rank()},
                  {"simple_roots", imat_json(rd.simple_roots())},
                  {"simple_coroots", imat_json(rd.simple_coroots())}}}};
}

SphericalDatum parse_datum(const Json& j) {
    if (!j.is_object()) throw input_error("document must be a JSON object");
    if (j.contains("schema") && (!j["schema"].is_number_integer() || j["schema"].get<int>() != kSchemaVersion))
        field_error("schema", "unsupported schema version (expected " + std::to_string(kSchemaVersion) + ")");
    SphericalDatum d;
    d.name = j.contains("name") ? as_string(j["name"], "name") : (j.contains("key") ? as_string(j["key"], "key") : "");
    d.group = parse_group(member(j, "group", ""));
    IMat lm = as_imat(member(j, "lattice_map", ""), "lattice_map");
    if (lm.size() != d.group.rank())
        field_error("lattice_map", "expected " + std::to_string(d.group.rank()) + " rows (the group lattice rank)");
    size_t r = lm.empty() ? 0 : lm[0].size();
    for (size_t i = 0; i < lm.size(); ++i)
        if (lm[i].size() != r) field_error("lattice_map[" + std::to_string(i) + "]", "ragged matrix");
    d.lattice_map = LatticeMap(lm, r);
    d.valuation_cone = parse_cone(member(j, "valuation_cone", ""), r, "valuation_cone");

    const Json& cols = member(j, "colors", "");
    if (!cols.is_array()) field_error("colors", "expected an array");
    for (size_t i = 0; i < cols.size(); ++i) {
        std::string p = "colors[" + std::to_string(i) + "]";
        Color c{as_string(member(cols[i], "label", p), join(p, "label")), as_ivec(member(cols[i], "rho", p), join(p, "rho"))};
        if (c.rho.size() != r) field_error(join(p, "rho"), "expected length " + std::to_string(r));
        d.colors.push_back(c);
    }
    d.levi_roots = j.contains("levi_roots") ? as_indices(j["levi_roots"], "levi_roots") : std::vector<size_t>{};
    d.spherical_roots = j.contains("spherical_roots") ? as_imat(j["spherical_roots"], "spherical_roots") : IMat{};
    if (j.contains("spherical_roots_normalized")) {
        if (!j["spherical_roots_normalized"].is_boolean()) field_error("spherical_roots_normalized", "expected a boolean");
        d.spherical_roots_normalized = j["spherical_roots_normalized"].get<bool>();
    }
    if (j.contains("little_weyl")) {
        const Json& w = j["little_weyl"];
        if (!w.is_array()) field_error("little_weyl", "expected an array of matrices");
        for (size_t i = 0; i < w.size(); ++i) d.little_weyl.push_back(as_imat(w[i], "little_weyl[" + std::to_string(i) + "]"));
    }
    if (j.contains("colored_cone") && !j["colored_cone"].is_null()) {
        const Json& cc = j["colored_cone"];
        Cone c = parse_cone(cc, r, "colored_cone");
        std::vector<std::string> f;
        if (cc.contains("colors")) {
            const Json& fl = cc["colors"];
            if (!fl.is_array()) field_error("colored_cone.colors", "expected an array of labels");
            for (size_t i = 0; i < fl.size(); ++i) f.push_back(as_string(fl[i], "colored_cone.colors[" + std::to_string(i) + "]"));
        }
        d.colored_cone = ColoredCone(c, f);
    }
    check_datum(d);
    return d;
}

Json render_datum(const SphericalDatum& d) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["name"] = d.name;
    j["group"] = render_group(d.group);
    j["lattice_map"] = imat_json(d.lattice_map.rows());
    j["valuation_cone"] = {{"generators", imat_json(cone_generators(d.valuation_cone))}};
    Json cols = Json::array();
    for (const auto& c : d.colors) cols.push_back({{"label", c.label}, {"rho", ivec_json(c.rho)}});
    j["colors"] = cols;
    Json levi = Json::array();
    for (auto i : d.levi_roots) levi.push_back(i);
    j["levi_roots"] = levi;
    j["spherical_roots"] = imat_json(d.spherical_roots);
    j["spherical_roots_normalized"] = d.spherical_roots_normalized;
    if (!d.little_weyl.empty()) {
        Json w = Json::array();
        for (const auto& g : d.little_weyl) w.push_back(imat_json(g));
        j["little_weyl"] = w;
    }
    if (d.colored_cone) {
        Json f = Json::array();
        for (const auto& l : d.colored_cone->colors) f.push_back(l);
        j["colored_cone"] = {{"generators", imat_json(cone_generators(d.colored_cone->cone))}, {"colors", f}};
    }
    return j;
}

CatalogEntry parse_entry(const Json& j) {
    CatalogEntry e;
    e.key = as_string(member(j, "key", ""), "key");
    e.provenance = j.contains("provenance") ? as_string(j["provenance"], "provenance") : "";
    e.datum = parse_datum(j);
    if (j.contains("engine")) {
        const Json& g = j["engine"];
        e.engine.kind = as_string(member(g, "case", "engine"), "engine.case");
        static const std::vector<std::string> kinds{"borel", "pp", "smooth", "none"};
        if (std::find(kinds.begin(), kinds.end(), e.engine.kind) == kinds.end())
            field_error("engine.case", "expected borel, pp, smooth or none");
        if (e.engine.kind == "borel" || e.engine.kind == "pp") {
            e.engine.group = as_string(member(g, "group", "engine"), "engine.group");
            e.engine.to_group = as_imat(member(g, "to_group", "engine"), "engine.to_group");
            if (g.contains("levi")) e.engine.levi = as_indices(g["levi"], "engine.levi");
        }
    }
    if (j.contains("flags")) e.flags = j["flags"];
    if (j.contains("expected_lvalue")) e.expected_lvalue = j["expected_lvalue"];
    if (j.contains("identification")) e.identification = j["identification"];
    return e;
}

Json render_entry(const CatalogEntry& e) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["key"] = e.key;
    j["provenance"] = e.provenance;
    Json d = render_datum(e.datum);
    for (auto it = d.begin(); it != d.end(); ++it)
        if (it.key() != "schema") j[it.key()] = it.value();
    Json g{{"case", e.engine.kind}};
    if (e.engine.kind == "borel" || e.engine.kind == "pp") {
        g["group"] = e.engine.group;
        Json levi = Json::array();
        for (auto i : e.engine.levi) levi.push_back(i);
        g["levi"] = levi;
        g["to_group"] = imat_json(e.engine.to_group);
    }
    j["engine"] = g;
    j["flags"] = e.flags;
    if (!e.expected_lvalue.is_null()) j["expected_lvalue"] = e.expected_lvalue;
    if (!e.identification.is_null()) j["identification"] = e.identification;
    return j;
}

bool same_entry(const CatalogEntry& a, const CatalogEntry& b) {
    const SphericalDatum &x = a.datum, &y = b.datum;
    bool same_colored = x.colored_cone.has_value() == y.colored_cone.has_value() &&
                        (!x.colored_cone || *x.colored_cone == *y.colored_cone);
    return a.key == b.key && a.provenance == b.provenance && x.name == y.name && x.group == y.group &&
           x.lattice_map == y.lattice_map && x.valuation_cone == y.valuation_cone && x.colors == y.colors &&
           x.levi_roots == y.levi_roots && x.spherical_roots == y.spherical_roots &&
           x.spherical_roots_normalized == y.spherical_roots_normalized && x.little_weyl == y.little_weyl &&
           same_colored && a.engine == b.engine && a.flags == b.flags && a.expected_lvalue == b.expected_lvalue &&
           a.identification == b.identification;
}

SphericalDatum load_datum_file(const std::string& path) { return parse_datum(read_json_file(path)); }

}  // namespace sph
