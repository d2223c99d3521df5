// One pass/fail line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include "brute.hpp"
#include "sph/catalog.hpp"
#include "sph/engine.hpp"
#include "sph/oracle.hpp"

using namespace sph;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

BasicFunctionTable pp_at_borel(const CatalogEntry& e, int height, int kappa = kKappa) {
    EngineSpec pp = e.engine;
    pp.kind = "pp";
    return basic_function_pp(e.datum, pp, height, kappa);
}

Outcome smooth_normalization() {
    Outcome o;
    CatalogEntry e = load_entry("a2-sl2");
    const Cone& c = e.datum.colored_cone->cone;
    int strata = 0;
    for (const auto& t : {basic_function_borel(e.datum, e.engine, 10), pp_at_borel(e, 10)})
        for (const auto& [l, v] : t.values) {
            if (!c.contains(to_q(l))) continue;
            ++strata;
            if (v != QLaurent(1)) o.fail(t.case_tag + " at " + to_string(l) + " is " + v.to_string());
        }
    if (o.pass) o.detail = std::to_string(strata) + " integral strata equal 1";
    return o;
}

Outcome table_normalization() {
    Outcome o;
    int tables = 0;
    for (const auto& key : list_entries()) {
        CatalogEntry e = load_entry(key);
        if (e.engine.kind == "none") continue;
        ++tables;
        BasicFunctionTable t = basic_function(e, 6);
        if (t.at(IVec(e.datum.rank(), 0)) != QLaurent(1)) o.fail(key + ": value at 0 is not 1");
        const Cone& c = e.datum.colored_cone->cone;
        for (const auto& [l, v] : t.values)
            if (v != QLaurent() && !(e.datum.valuation_cone.contains(to_q(l)) && c.contains(to_q(l))))
                o.fail(key + ": nonzero at " + to_string(l) + " outside the support");
    }
    if (o.pass) o.detail = std::to_string(tables) + " tables";
    return o;
}

Outcome borel_pp_agreement() {
    Outcome o;
    for (const char* key : {"a2-sl2", "u-sl3"}) {
        CatalogEntry e = load_entry(key);
        if (basic_function_borel(e.datum, e.engine, 6).values != pp_at_borel(e, 6).values)
            o.fail(std::string(key) + ": routes differ");
    }
    if (o.pass) o.detail = "SL2 and SL3 at height 6";
    return o;
}

Outcome from_reports(const std::vector<oracle::Report>& rs) {
    Outcome o;
    for (const auto& r : rs) {
        if (!r.pass) o.fail(r.name + ": " + std::to_string(r.mismatches.size()) + " mismatches");
    }
    if (o.pass) o.detail = std::to_string(rs.size()) + " reports, 0 mismatches";
    return o;
}

Outcome satake_gl2() {
    oracle::CheckOptions opt;
    opt.height = 4;
    return from_reports({oracle::satake_check(oracle::Space::UGL2, "degree1", opt),
                         oracle::satake_check(oracle::Space::UGL2, "central", opt)});
}

Outcome godement_jacquet() {
    oracle::CheckOptions opt;
    opt.height = 4;
    return from_reports({oracle::godement_jacquet_check(opt)});
}

Outcome kappa_pin() {
    oracle::CheckOptions opt;
    opt.height = 2;
    oracle::KappaPin pin = oracle::pin_kappa(opt);
    Outcome o;
    std::string rows;
    for (const auto& r : pin.rows)
        rows += std::string(rows.empty() ? "" : ", ") + "kappa " + std::to_string(r.kappa) + (r.pass() ? " passes" : " fails");
    if (!pin.pinned) o.fail(rows + " (need exactly one)");
    else if (*pin.pinned != kKappa) o.fail(rows + "; pinned kappa differs from the built-in sign");
    else o.detail = rows + " at height " + std::to_string(pin.height_used);
    return o;
}

Outcome combinatorial_flags() {
    Outcome o;
    auto keys = list_entries();
    if (keys.size() < 10) o.fail("only " + std::to_string(keys.size()) + " fixtures");
    size_t checks = 0;
    for (const auto& key : keys)
        for (const auto& c : check_entry_flags(load_entry(key))) {
            ++checks;
            if (!c.pass) o.fail(key + ": " + c.name + " (" + c.detail + ")");
        }
    if (o.pass) o.detail = std::to_string(keys.size()) + " fixtures, " + std::to_string(checks) + " flags";
    return o;
}

Outcome geometry_kernel() {
    Outcome o;
    std::mt19937 rng(20261016);
    std::uniform_int_distribution<int> coord(-3, 3), dimd(1, 4), cnt(0, 6), small(-2, 2), cnt4(0, 4);
    for (int trial = 0; trial < 50; ++trial) {
        size_t n = dimd(rng);
        std::vector<QVec> gens(cnt(rng));
        for (auto& g : gens)
            for (size_t j = 0; j < n; ++j) g.push_back(coord(rng));
        Cone c(n, gens);
        if (c.dual().dual() != c) o.fail("dual of dual differs for " + c.to_string());
    }
    for (size_t n = 1; n <= 3; ++n)
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<QVec> gens(cnt4(rng));
            for (auto& g : gens)
                for (size_t j = 0; j < n; ++j) g.push_back(small(rng));
            Cone c(n, gens);
            for (int h = 0; h <= 5; ++h)
                if (lattice_points(c, h) != brute::grid_scan(gens, n, h)) o.fail("lattice points differ on " + c.to_string());
        }
    std::uniform_int_distribution<int> coef(-3, 3), cst(-4, 4), relp(0, 4), dim3(1, 3), cnt25(2, 5);
    const Rel rels[] = {Rel::Ge, Rel::Gt, Rel::Eq, Rel::Lt, Rel::Le};
    for (int trial = 0; trial < 20; ++trial) {
        size_t n = dim3(rng);
        LinearSystem sys(n);
        int k = cnt25(rng);
        for (int i = 0; i < k; ++i) {
            QVec a;
            for (size_t j = 0; j < n; ++j) a.push_back(coef(rng));
            sys.add(a, rels[relp(rng)], Rational(cst(rng)));
        }
        auto w = feasible(sys);
        if (w.has_value() != brute::vertex_oracle(sys)) o.fail("feasibility differs on system " + std::to_string(trial));
        if (w && !sys.satisfied_by(*w)) o.fail("bad witness on system " + std::to_string(trial));
    }
    if (o.pass) o.detail = "50 dual pairs, 24 cones x 6 heights, 20 systems";
    return o;
}

Outcome representation_ring() {
    Outcome o;
    std::mt19937 rng(19);
    std::uniform_int_distribution<int> coord(-2, 2), dimd(1, 4);
    for (int trial = 0; trial < 25; ++trial) {
        IMat ws(dimd(rng));
        for (auto& w : ws) w = {coord(rng), coord(rng)};
        WeightChar chi = WeightChar::from_weights(2, ws);
        for (int i = 0; i <= 5; ++i) {
            if (sym_power(chi, i) != brute::monomial_power(chi, i, false)) o.fail("Sym^" + std::to_string(i) + " differs");
            if (ext_power(chi, i) != brute::monomial_power(chi, i, true)) o.fail("Ext^" + std::to_string(i) + " differs");
        }
    }
    int weights = 0;
    for (const char* label : {"SL3", "Sp4"}) {
        RootDatum rd = build_root_datum(label);
        for (long long a = 0; a <= 3; ++a)
            for (long long b = 0; a + b <= 3; ++b) {
                ++weights;
                if (irrep_char(rd, {a, b}) != brute::kostant_character(rd, {a, b}))
                    o.fail(std::string(label) + " " + to_string(IVec{a, b}) + " differs");
            }
    }
    if (o.pass) o.detail = "25 characters to degree 5, " + std::to_string(weights) + " highest weights";
    return o;
}

Outcome growth() {
    Outcome o;
    int tables = 0;
    for (const auto& key : list_entries()) {
        CatalogEntry e = load_entry(key);
        if (e.engine.kind == "none") continue;
        ++tables;
        BasicFunctionTable t = basic_function(e, 6);
        if (!growth_certificate(t, e.datum.rank()).chi) o.fail(key + ": no growth certificate");
        for (int q : {2, 3})
            if (!distance_exponent(e.datum, t, q, 5)) o.fail(key + ": no exponent <= 5 at q=" + std::to_string(q));
    }
    if (o.pass) o.detail = std::to_string(tables) + " tables at q=2,3";
    return o;
}

Outcome triple_product() {
    Outcome o;
    CatalogEntry src = load_entry("triple-product");
    CatalogEntry target = load_entry(src.identification.at("target").get<std::string>());
    IdentificationCheck id = check_identification(src, target);
    if (!id.cone) o.fail("cones differ");
    if (!id.colors) o.fail("colors differ");
    if (!id.valuation_cone) o.fail("valuation cones differ");
    if (o.pass) o.detail = "matches " + target.key;
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "smooth normalization", 1, smooth_normalization},
        {2, "normalization and support of catalog tables", 10, table_normalization},
        {3, "Borel/PP agreement", 10, borel_pp_agreement},
        {4, "Satake compatibility on U\\GL2", 60, satake_gl2},
        {5, "Godement-Jacquet local identity", 120, godement_jacquet},
        {6, "sign pinning", 300, kappa_pin},
        {7, "combinatorial flags", 5, combinatorial_flags},
        {8, "geometry kernel", 30, geometry_kernel},
        {9, "representation ring", 30, representation_ring},
        {10, "growth certificates", 30, growth},
        {11, "triple-product colored cone", 1, triple_product},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("threw: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.budget_s) o.fail("took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_s) + " s");
        if (!o.pass) ++failed;
        std::printf("criterion %2d: %s  %s (%.2f s): %s\n", c.id, o.pass ? "PASS" : "FAIL", c.name, secs,
                    o.detail.c_str());
    }
    return failed ? 1 : 0;
}
