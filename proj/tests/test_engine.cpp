#include <set>

#include "doctest.h"
#include "sph/catalog.hpp"
#include "sph/engine.hpp"

using namespace sph;

namespace {

CatalogEntry entry(const std::string& key) { return load_entry(key); }

// Sum over weights (theta | m) of z^theta q^{kappa m / 2}
SymPoly evaluate(const WeightChar& c, size_t k, int kappa) {
    SymPoly out;
    for (const auto& [w, mult] : c.terms()) {
        IVec z(w.begin(), w.begin() + static_cast<long>(k));
        RLaurent& slot = out[z];
        slot += RLaurent::monomial(Rational(static_cast<long>(mult)), kappa * w[k]);
        if (slot == RLaurent()) out.erase(z);
    }
    return out;
}

size_t constituents(const std::vector<std::pair<IVec, long long>>& d) {
    size_t n = 0;
    for (const auto& [l, m] : d) n += static_cast<size_t>(m);
    return n;
}

}  // namespace

TEST_CASE("dual radical") {
    DualRadicalRep sl2 = dual_radical(ParabolicDatum(build_root_datum("SL2"), {}));
    REQUIRE(sl2.weights.size() == 1);
    CHECK(sl2.weights[0].coroot == IVec{1});
    CHECK(sl2.weights[0].theta == IVec{1});
    CHECK(sl2.weights[0].grade == 0);

    DualRadicalRep gl3 = dual_radical(ParabolicDatum(build_root_datum("GL3"), {0}));
    REQUIRE(gl3.weights.size() == 2);
    CHECK(gl3.weights[0].coroot == IVec{0, 1, -1});
    CHECK(gl3.weights[0].grade == -1);
    CHECK(gl3.weights[1].coroot == IVec{1, 0, -1});
    CHECK(gl3.weights[1].grade == 1);
    CHECK(gl3.weights[0].theta == gl3.weights[1].theta);

    DualRadicalRep gl4 = dual_radical(ParabolicDatum(build_root_datum("GL4"), {0, 2}));
    REQUIRE(gl4.weights.size() == 4);
    std::multiset<long long> grades;
    for (const auto& w : gl4.weights) {
        grades.insert(w.grade);
        CHECK(w.theta == gl4.weights[0].theta);
    }
    // std x std of GL2 x GL2 restricts to V3 + V1 under the principal sl2
    CHECK(grades == std::multiset<long long>{-2, 0, 0, 2});

    CHECK_THROWS_AS(dual_radical(ParabolicDatum(build_root_datum("SL2"), {0})), Error);
}

TEST_CASE("f-fixed part") {
    CHECK(f_fixed(dual_radical(ParabolicDatum(build_root_datum("SL2"), {}))) == FFixedRep{{{1}, 0, 1}});
    CHECK(f_fixed(dual_radical(ParabolicDatum(build_root_datum("GL3"), {0}))) == FFixedRep{{{1, -1}, -1, 1}});
    FFixedRep gl4 = f_fixed(dual_radical(ParabolicDatum(build_root_datum("GL4"), {0, 2})));
    REQUIRE(gl4.size() == 2);
    CHECK(gl4[0].theta == gl4[1].theta);
    CHECK(gl4[0].grade == -2);
    CHECK(gl4[0].multiplicity == 1);
    CHECK(gl4[1].grade == 0);
    CHECK(gl4[1].multiplicity == 1);

    DualRadicalRep bad = dual_radical(ParabolicDatum(build_root_datum("GL3"), {0}));
    bad.weights.pop_back();
    try {
        f_fixed(bad);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.kind == ErrorKind::NotSl2Character);
    }
}

TEST_CASE("f-fixed multiplicity counts irreducible constituents") {
    struct Case {
        const char* group;
        std::vector<size_t> levi;
    };
    auto f_total = [](const ParabolicDatum& p) {
        long long total = 0;
        for (const auto& e : f_fixed(dual_radical(p))) total += e.multiplicity;
        return static_cast<size_t>(total);
    };
    auto m_constituents = [](const ParabolicDatum& p) {
        WeightChar u = WeightChar::from_weights(p.parent().rank(), p.radical_coroots());
        return constituents(decompose(p.levi().dual(), u));
    };
    // the count of principal-sl2 strings, per theta, is what f-fixed measures
    auto sl2_strings = [](const ParabolicDatum& p) {
        std::map<IVec, IMat> by_theta;
        for (const auto& w : dual_radical(p).weights) by_theta[w.theta].push_back({w.grade});
        size_t n = 0;
        for (const auto& [theta, g] : by_theta)
            n += constituents(decompose(build_root_datum("SL2"), WeightChar::from_weights(1, g)));
        return n;
    };
    for (const auto& c : {Case{"GL3", {0}}, Case{"Sp4", {0}}, Case{"GSp6", {0, 1}}, Case{"GL4", {1}},
                          Case{"SL3", {}}, Case{"GL4", {0, 2}}, Case{"GL5", {0, 2}}, Case{"G2", {1}}}) {
        CAPTURE(c.group);
        ParabolicDatum p(build_root_datum(c.group), c.levi);
        CHECK(f_total(p) == sl2_strings(p));
    }
    for (const auto& c : {Case{"GL3", {0}}, Case{"Sp4", {0}}, Case{"GSp6", {0, 1}}, Case{"GL4", {1}},
                          Case{"SL3", {}}}) {
        CAPTURE(c.group);
        ParabolicDatum p(build_root_datum(c.group), c.levi);
        CHECK(f_total(p) == m_constituents(p));
    }
    // GL4 (2,2): one irreducible of the dual Levi, two principal strings
    ParabolicDatum gl4(build_root_datum("GL4"), {0, 2});
    CHECK(m_constituents(gl4) == 1);
    CHECK(f_total(gl4) == 2);
}

TEST_CASE("Kostant counts by parts") {
    RootDatum sl3 = build_root_datum("SL3");
    auto k = kostant_parts(sl3, {1, 1});
    CHECK(k == std::map<long, Integer>{{1, 1}, {2, 1}});
    CHECK(kostant_parts(sl3, {0, 0}) == std::map<long, Integer>{{0, 1}});
    CHECK(kostant_parts(sl3, {-1, 0}).empty());
    CHECK(kostant_parts(sl3, {2, 1}) == std::map<long, Integer>{{2, 1}, {3, 1}});
}

TEST_CASE("Borel basic function") {
    CatalogEntry a2 = entry("a2-sl2");
    BasicFunctionTable t = basic_function_borel(a2.datum, a2.engine, 10);
    for (const auto& [l, v] : t.values) {
        CAPTURE(l[0]);
        CHECK(v == (l[0] >= 0 ? QLaurent(1) : QLaurent()));
    }
    CHECK(t.at({0}) == QLaurent(1));

    CatalogEntry u = entry("u-sl3");
    BasicFunctionTable s = basic_function_borel(u.datum, u.engine, 4);
    CHECK(s.at({1, 1}).to_string() == "q + 1");
    CHECK(s.at({0, 0}) == QLaurent(1));
    CHECK(s.at({3, 0}) == QLaurent(1));
    CHECK(s.at({-1, 1}) == QLaurent());
    CHECK(s.at({2, 1}).to_string() == "q + 1");
    CHECK(s.at({2, 2}).to_string() == "q^2 + q + 1");
}

TEST_CASE("parabolic basic function") {
    CatalogEntry a2 = entry("a2-sl2");
    EngineSpec pp = a2.engine;
    pp.kind = "pp";
    BasicFunctionTable b = basic_function_borel(a2.datum, a2.engine, 10);
    BasicFunctionTable p = basic_function_pp(a2.datum, pp, 10);
    CHECK(b.values == p.values);

    CatalogEntry gl3 = entry("pp-gl3-21");
    BasicFunctionTable t = basic_function_pp(gl3.datum, gl3.engine, 6);
    for (const auto& [l, v] : t.values) {
        bool on_ray = l[0] >= 0 && l[0] == -l[1];
        CHECK(v == (on_ray ? QLaurent(1) : QLaurent()));
    }
    BasicFunctionTable neg = basic_function_pp(gl3.datum, gl3.engine, 6, -1);
    CHECK(neg.at({2, -2}) == QLaurent::q_power(2));
    CHECK_THROWS_AS(basic_function_pp(gl3.datum, gl3.engine, 6, 0), Error);

    CatalogEntry gsp = entry("gsp6-siegel-pp");
    BasicFunctionTable g = basic_function_pp(gsp.datum, gsp.engine, 6);
    CHECK(g.at({0, 0}) == QLaurent(1));
    CHECK(g.at({1, 0}) == QLaurent(1));
    CHECK(g.at({2, 0}).to_string() == "q^2 + 1");
    CHECK(g.at({4, 0}).to_string() == "q^4 + q^2 + 1");
    CHECK(g.at({5, 0}).to_string() == "q^4 + q^2 + 1");
    CHECK(g.at({0, 1}) == QLaurent());
}

TEST_CASE("Borel and PP routes agree at P = B") {
    for (const char* key : {"a2-sl2", "u-sl3"}) {
        CAPTURE(key);
        CatalogEntry e = entry(key);
        EngineSpec pp = e.engine;
        pp.kind = "pp";
        CHECK(basic_function_borel(e.datum, e.engine, 6).values == basic_function_pp(e.datum, pp, 6).values);
        CHECK(basic_function_borel(e.datum, e.engine, 6).values == basic_function_pp(e.datum, pp, 6, -1).values);
    }
}

TEST_CASE("graded Sym data") {
    auto sl2 = basic_function_graded(ParabolicDatum(build_root_datum("SL2"), {}), 3);
    REQUIRE(sl2.size() == 4);
    for (int i = 0; i <= 3; ++i) {
        CHECK(sl2[static_cast<size_t>(i)].first == i);
        CHECK(sl2[static_cast<size_t>(i)].second == std::vector<std::pair<IVec, long long>>{{{i}, 1}});
    }
    ParabolicDatum gl3(build_root_datum("GL3"), {0});
    auto g = basic_function_graded(gl3, 2);
    REQUIRE(g.size() == 3);
    REQUIRE(g[1].second.size() == 1);
    REQUIRE(g[2].second.size() == 1);
    IVec doubled = g[1].second[0].first;
    for (auto& x : doubled) x *= 2;
    CHECK(g[2].second[0].first == doubled);
    CHECK(g[2].second[0].second == 1);
    auto zero = basic_function_graded(gl3, 0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].second == std::vector<std::pair<IVec, long long>>{{{0, 0, 0}, 1}});
    CHECK_THROWS_AS(basic_function_graded(gl3, -1), Error);
}

TEST_CASE("local L-factors") {
    DualRadicalRep sl2 = dual_radical(ParabolicDatum(build_root_datum("SL2"), {}));
    LFactor f = local_lfactor(sl2, QVec{Rational(3)});
    REQUIRE(f.monomials.size() == 1);
    CHECK(f.coefficient(2) == SymPoly{{IVec{}, RLaurent(Rational(9))}});
    LFactor sym = local_lfactor(sl2, std::nullopt);
    CHECK(sympoly_to_string(sym.coefficient(3), {"a"}) == "a^3");
    CHECK(sym.to_string({"a"}) == "(1 - (a)*T)^-1");

    LFactor empty;
    CHECK(empty.coefficient(0) == SymPoly{{IVec{}, RLaurent(1)}});
    CHECK(empty.coefficient(1).empty());
    CHECK(empty.to_string({}) == "1");

    // Mat2: L(pi, s - 1/2) for the standard representation
    CatalogEntry gj = entry("godement-jacquet-2");
    const Json& factor = gj.expected_lvalue["numerator"][0];
    CHECK(factor["rep"] == "std");
    LFactor mat = std_lfactor(2, parse_rational(factor["argument"]["const"].get<std::string>()));
    CHECK(sympoly_to_string(mat.coefficient(1), {"a1", "a2"}) == "(q^(1/2))*a1 + (q^(1/2))*a2");
    CHECK(mat.coefficient(2).at({1, 1}) == RLaurent::q_power(1));

    CHECK_THROWS_AS(local_lfactor(sl2, QVec{Rational(0)}), Error);
    CHECK_THROWS_AS(local_lfactor(sl2, QVec{Rational(1), Rational(2)}), Error);
}

TEST_CASE("property: L-factor expansion matches Sym characters") {
    struct Case {
        const char* group;
        std::vector<size_t> levi;
    };
    for (const auto& c : {Case{"GL3", {0}}, Case{"GL4", {0, 2}}, Case{"GSp6", {0, 1}}, Case{"SL3", {}}}) {
        CAPTURE(c.group);
        ParabolicDatum p(build_root_datum(c.group), c.levi);
        size_t k = p.abelian_rank();
        for (int kappa : {1, -1}) {
            FFixedRep uf = f_fixed(dual_radical(p));
            LFactor f = local_lfactor(uf, k, std::nullopt, kappa);
            IMat ws;
            for (const auto& e : uf)
                for (long long j = 0; j < e.multiplicity; ++j) {
                    IVec w = e.theta;
                    w.push_back(e.grade);
                    ws.push_back(w);
                }
            WeightChar chi = WeightChar::from_weights(k + 1, ws);
            for (int d = 0; d <= 5; ++d) CHECK(f.coefficient(d) == evaluate(sym_power(chi, d), k, kappa));

            // the full radical with its grades, same identity
            DualRadicalRep r = dual_radical(p);
            LFactor full = local_lfactor(r, std::nullopt, kappa);
            IMat rw;
            for (const auto& w : r.weights) {
                IVec x = w.theta;
                x.push_back(w.grade);
                rw.push_back(x);
            }
            WeightChar rchi = WeightChar::from_weights(k + 1, rw);
            for (int d = 0; d <= 4; ++d) CHECK(full.coefficient(d) == evaluate(sym_power(rchi, d), k, kappa));
        }
    }
}

TEST_CASE("growth certificates") {
    CatalogEntry a2 = entry("a2-sl2");
    GrowthCertificate g = growth_certificate(basic_function(a2, 6), 1);
    REQUIRE(g.chi);
    CHECK_FALSE(g.inconclusive);

    CatalogEntry u = entry("u-sl3");
    BasicFunctionTable t = basic_function(u, 6);
    GrowthCertificate h = growth_certificate(t, 2);
    REQUIRE(h.chi);
    for (const auto& [l, v] : t.values)
        if (v != QLaurent()) CHECK(v.degree() <= dot(*h.chi, to_q(l)));

    BasicFunctionTable bad;
    bad.values = {{{1, 0}, QLaurent::q_power(1)}, {{-1, 0}, QLaurent::q_power(1)}};
    GrowthCertificate none = growth_certificate(bad, 2);
    CHECK_FALSE(none.chi);
    CHECK(none.inconclusive);
}

TEST_CASE("toric distance") {
    SphericalDatum a1 = entry("a1-gl1").datum;
    CHECK(toric_distance(a1, {3}, 2) == Rational(1, 8));
    CHECK(toric_distance(a1, {0}, 3) == 1);
    SphericalDatum a2 = entry("a2-sl2").datum;
    CHECK(toric_distance(a2, {4}, 3) == Rational(1, 81));
    SphericalDatum kvs = entry("kvs-1-15").datum;
    CHECK(toric_distance(kvs, {2, 1, 3, 5}, 2) == Rational(1, 2));
    SphericalDatum gj = entry("godement-jacquet-2").datum;
    // C = cone((1,-1),(0,1)); the dual monoid is generated by (1,0) and (1,1)
    CHECK(toric_distance(gj, {1, 0}, 2) == Rational(1, 2));
    CHECK(toric_distance(gj, {1, -1}, 2) == 1);
    CHECK(toric_distance(entry("pgl2-group").datum, {0}, 2) == 1);
    CHECK_THROWS_AS(toric_distance(a1, {-1}, 2), Error);

    SphericalDatum big = entry("triple-product").datum;
    IMat orthant;
    for (size_t i = 0; i < 5; ++i) {
        IVec e(5, 0);
        e[i] = 1;
        orthant.push_back(e);
    }
    big.colored_cone = ColoredCone(Cone(5, orthant), {});
    try {
        toric_distance(big, {1, 1, 1, 1, 1}, 2);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.kind == ErrorKind::UnsupportedRank);
    }
}

TEST_CASE("property: every catalog table is normalized, supported, and bounded") {
    for (const auto& key : list_entries()) {
        CatalogEntry e = entry(key);
        if (e.engine.kind == "none") continue;
        CAPTURE(key);
        BasicFunctionTable t = basic_function(e, 6);
        const Cone& c = e.datum.colored_cone->cone;
        CHECK(t.at(IVec(e.datum.rank(), 0)) == QLaurent(1));
        for (const auto& [l, v] : t.values) {
            CHECK(e.datum.valuation_cone.contains(to_q(l)));
            if (!c.contains(to_q(l))) CHECK(v == QLaurent());
            if (flag_bool(e, "smooth_expected") && c.contains(to_q(l))) CHECK(v == QLaurent(1));
        }
        CHECK(growth_certificate(t, e.datum.rank()).chi.has_value());
        for (int q : {2, 3}) {
            auto n = distance_exponent(e.datum, t, q, 5);
            CHECK(n.has_value());
        }
    }
}

TEST_CASE("table rendering") {
    BasicFunctionTable t = basic_function(entry("a1-gl1"), 2);
    CHECK(render_tsv(t, Rational(2)) == "l1\tvalue\tq=2\n-2\t0\t0\n-1\t0\t0\n0\t1\t1\n1\t1\t1\n2\t1\t1\n");
    Json j = render_table_json(basic_function(entry("u-sl3"), 2), Rational(3));
    CHECK(j["schema"] == 1);
    CHECK(j["case"] == "UP-Borel");
    bool found = false;
    for (const auto& row : j["values"])
        if (row["lambda"] == Json::array({1, 1})) {
            found = true;
            CHECK(row["value"] == "q + 1");
            CHECK(row["at_q"] == "4");
        }
    CHECK(found);
}
