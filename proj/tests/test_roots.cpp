#include <random>

#include "brute.hpp"
#include "doctest.h"
#include "sph/laurent.hpp"
#include "sph/weights.hpp"

using namespace sph;

TEST_CASE("builders") {
    RootDatum sl2 = build_root_datum("SL2");
    CHECK(sl2.rank() == 1);
    CHECK(sl2.simple_roots() == IMat{{2}});
    CHECK(sl2.simple_coroots() == IMat{{1}});
    CHECK(sl2.cartan() == IMat{{2}});

    RootDatum gl2 = build_root_datum("GL2");
    CHECK(gl2.rank() == 2);
    CHECK(gl2.simple_roots() == IMat{{1, -1}});
    CHECK(gl2.simple_coroots() == IMat{{1, -1}});
    CHECK(gl2.rho() == QVec{Rational(1, 2), Rational(-1, 2)});

    CHECK(build_root_datum("A1xA1").weyl_order() == 4);
    CHECK(build_root_datum("SL3").weyl_order() == 6);
    CHECK(build_root_datum("B2").weyl_order() == 8);
    CHECK(build_root_datum("C3").weyl_order() == 48);
    CHECK(build_root_datum("B3").weyl_order() == 48);
    CHECK(build_root_datum("D4").weyl_order() == 192);
    CHECK(build_root_datum("G2").weyl_order() == 12);
    CHECK(build_root_datum("SL4").weyl_order() == 24);
    CHECK(build_root_datum("PGL3").weyl_order() == 6);
    CHECK(build_root_datum("GSp4").weyl_order() == 8);
    CHECK(build_root_datum("GSp6").positive_roots().size() == 9);
    CHECK(build_root_datum("G2").positive_roots().size() == 6);
    CHECK(build_root_datum("T2").semisimple_rank() == 0);

    RootDatum p = build_root_datum("GL1xSL2");
    CHECK(p.rank() == 2);
    CHECK(p.simple_roots() == IMat{{0, 2}});

    CHECK_THROWS_AS(build_root_datum("E8"), Error);
    CHECK_THROWS_AS(build_root_datum("SL1"), Error);
    CHECK_THROWS_AS(build_root_datum("GSp5"), Error);
    CHECK_THROWS_AS(RootDatum("bad", 1, {{1}}, {{1}}), Error);
}

TEST_CASE("positive roots pair correctly with coroots") {
    for (const char* label : {"SL3", "B2", "C2", "G2", "GSp6", "PGL3", "D4", "B3"}) {
        RootDatum rd = build_root_datum(label);
        const auto& r = rd.positive_roots();
        const auto& c = rd.positive_coroots();
        for (size_t k = 0; k < r.size(); ++k) {
            CHECK(dot(r[k], c[k]) == 2);
            // s_beta on weights is an involution permuting roots
            for (size_t i = 0; i < rd.semisimple_rank(); ++i) {
                IVec s = rd.reflect(i, r[k]);
                if (s == r[k] || dot(s, rd.simple_coroots()[i]) == -2) continue;
                CHECK(std::find(r.begin(), r.end(), s) != r.end());
            }
        }
    }
}

TEST_CASE("weyl orbits") {
    RootDatum sl2 = build_root_datum("SL2");
    CHECK(weyl_orbit(sl2, {1}) == std::vector<IVec>{{-1}, {1}});
    RootDatum gl2 = build_root_datum("GL2");
    CHECK(weyl_orbit(gl2, {1, 0}) == std::vector<IVec>{{0, 1}, {1, 0}});
    RootDatum c2 = build_root_datum("C2");
    CHECK(weyl_orbit(c2, {1, 0}).size() == 4);
}

TEST_CASE("freudenthal examples") {
    RootDatum sl2 = build_root_datum("SL2");
    CHECK(freudenthal_multiplicity(sl2, {2}, {0}) == 1);
    RootDatum sl3 = build_root_datum("SL3");
    CHECK(freudenthal_multiplicity(sl3, {1, 1}, {0, 0}) == 2);
    CHECK(freudenthal_multiplicity(sl3, {2, 1}, {2, 1}) == 1);
    CHECK_THROWS_AS(freudenthal_multiplicity(sl3, {-1, 1}, {0, 0}), Error);
}

TEST_CASE("irrep characters") {
    RootDatum sl2 = build_root_datum("SL2");
    CHECK(irrep_char(sl2, {1}) == WeightChar::from_weights(1, {{1}, {-1}}));
    CHECK(irrep_char(sl2, {2}) == WeightChar::from_weights(1, {{2}, {0}, {-2}}));
    RootDatum sl3 = build_root_datum("SL3");
    WeightChar adj = irrep_char(sl3, {1, 1});
    CHECK(adj.dim() == 8);
    CHECK(adj[{0, 0}] == 2);
    CHECK(adj.is_weyl_invariant(sl3));
    CHECK(weyl_dimension(sl3, {1, 1}) == 8);
    CHECK(weyl_dimension(build_root_datum("G2"), {1, 0}) == 7);
    CHECK(irrep_char(build_root_datum("G2"), {0, 1}).dim() == 14);
}

TEST_CASE("symmetric and exterior powers") {
    WeightChar std2 = WeightChar::from_weights(1, {{1}, {-1}});
    CHECK(sym_power(std2, 2) == WeightChar::from_weights(1, {{2}, {0}, {-2}}));
    CHECK(sym_power(std2, 0) == WeightChar::unit(1));
    CHECK(ext_power(std2, 2) == WeightChar::from_weights(1, {{0}}));
    CHECK(ext_power(std2, 3).is_zero());
    // SL3 dual radical of the Borel in coroot coordinates
    WeightChar u = WeightChar::from_weights(2, {{1, 0}, {0, 1}, {1, 1}});
    WeightChar s2 = sym_power(u, 2);
    CHECK(s2.dim() == 6);
    CHECK(s2 == WeightChar::from_weights(2, {{2, 0}, {0, 2}, {2, 2}, {1, 1}, {2, 1}, {1, 2}}));
    CHECK_THROWS_AS(sym_power(u, -1), Error);
}

TEST_CASE("decompose") {
    RootDatum sl3 = build_root_datum("SL3");
    auto d = decompose(sl3, irrep_char(sl3, {2, 1}));
    CHECK(d == std::vector<std::pair<IVec, long long>>{{{2, 1}, 1}});
    RootDatum sl2 = build_root_datum("SL2");
    WeightChar std2 = irrep_char(sl2, {1});
    auto cg = decompose(sl2, std2 * std2);
    CHECK(cg == std::vector<std::pair<IVec, long long>>{{{2}, 1}, {{0}, 1}});
    // GL3, P = (2,1): the dual radical is one standard GL2 x GL1 representation
    ParabolicDatum p(build_root_datum("GL3"), {0});
    WeightChar u = WeightChar::from_weights(3, p.radical_coroots());
    auto du = decompose(p.levi().dual(), u);
    REQUIRE(du.size() == 1);
    CHECK(du[0].second == 1);
    CHECK(weyl_dimension(p.levi().dual(), du[0].first) == 2);
    // SL3 V(0,3): lexicographic leading terms would pick a non-maximal weight
    auto v03 = decompose(sl3, irrep_char(sl3, {0, 3}));
    CHECK(v03 == std::vector<std::pair<IVec, long long>>{{{0, 3}, 1}});
    WeightChar bad = WeightChar::from_weights(1, {{2}, {-2}});
    CHECK_THROWS_AS(decompose(sl2, bad), Error);
}

TEST_CASE("parabolic data") {
    RootDatum gl3 = build_root_datum("GL3");
    ParabolicDatum p(gl3, {0});
    CHECK(p.radical_coroots() == IMat{{0, 1, -1}, {1, 0, -1}});
    CHECK(p.abelian_characters() == IMat{{1, 1, 0}, {0, 0, 1}});
    CHECK(p.project({1, 0, -1}) == IVec{1, -1});
    CHECK(p.positive_generators() == IMat{{1, -1}});
    CHECK(p.rho_m() == QVec{Rational(1, 2), Rational(-1, 2), 0});
    CHECK(p.rho_p_pairing({1, -1}) == Rational(3, 2));
    ParabolicDatum b(gl3, {});
    CHECK(b.radical_roots().size() == 3);
    CHECK(b.rho_p() == gl3.rho());
}

TEST_CASE("laurent polynomials") {
    QLaurent q = QLaurent::q_power(1);
    QLaurent v = q + QLaurent(1);
    CHECK(v.to_string() == "q + 1");
    CHECK(QLaurent::q_power(-2).to_string() == "q^-2");
    CHECK(QLaurent::q_power(Rational(3, 2)).to_string() == "q^(3/2)");
    CHECK((QLaurent(2) * QLaurent::q_power(2) - q).to_string() == "2q^2 - q");
    CHECK((-QLaurent::q_power(Rational(-1, 2))).to_string() == "-q^(-1/2)");
    CHECK(QLaurent().to_string() == "0");
    CHECK(v.eval(2) == QuadVal::rational(3, 2));
    QuadVal h = QLaurent::q_power(Rational(1, 2)).eval(2);
    CHECK(h.b == 1);
    CHECK((h * h) == QuadVal::rational(2, 2));
    CHECK(QLaurent::q_power(Rational(1, 2)).eval(4) == QuadVal::rational(2, 4));
    CHECK(QuadVal{1, -1, 2}.sign() < 0);
    CHECK(QuadVal{2, -1, 3}.sign() > 0);
    CHECK(v * v == QLaurent::q_power(2) + QLaurent(2) * q + QLaurent(1));
}

TEST_CASE("property: Newton powers match monomial expansion") {
    std::mt19937 rng(19);
    std::uniform_int_distribution<int> coord(-2, 2), dimd(1, 4);
    for (int trial = 0; trial < 25; ++trial) {
        int d = dimd(rng);
        IMat ws;
        for (int k = 0; k < d; ++k) ws.push_back({coord(rng), coord(rng)});
        WeightChar chi = WeightChar::from_weights(2, ws);
        for (int i = 0; i <= 5; ++i) {
            CHECK(sym_power(chi, i) == brute::monomial_power(chi, i, false));
            CHECK(ext_power(chi, i) == brute::monomial_power(chi, i, true));
        }
    }
}

TEST_CASE("property: sum of (-1)^i Lambda^i Sym^(j-i) vanishes") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> coord(-2, 2), dimd(1, 3);
    for (int trial = 0; trial < 15; ++trial) {
        int d = dimd(rng);
        IMat ws;
        for (int k = 0; k < d; ++k) ws.push_back({coord(rng)});
        WeightChar chi = WeightChar::from_weights(1, ws);
        for (int j = 1; j <= 4; ++j) {
            WeightChar acc(1);
            for (int i = 0; i <= j; ++i)
                acc = acc + (ext_power(chi, i) * sym_power(chi, j - i)).scaled(i % 2 ? -1 : 1);
            CHECK(acc.is_zero());
        }
    }
}

TEST_CASE("property: irrep dimension equals Weyl dimension") {
    for (const char* label : {"SL3", "B2", "C2", "G2", "A1xA1", "GL2", "SL2"}) {
        RootDatum rd = build_root_datum(label);
        size_t n = rd.rank();
        for (long long a = 0; a <= 4; ++a)
            for (long long b = 0; b + a <= 4; ++b) {
                IVec lambda = n == 1 ? IVec{a} : IVec{a, b};
                if (n == 1 && b > 0) continue;
                if (!rd.is_dominant(lambda)) continue;
                WeightChar c = irrep_char(rd, lambda);
                CHECK(Integer(static_cast<long>(c.dim())) == weyl_dimension(rd, lambda));
                CHECK(c.is_weyl_invariant(rd));
            }
    }
}

TEST_CASE("property: Freudenthal matches the Kostant multiplicity formula") {
    for (const char* label : {"SL3", "Sp4"}) {
        RootDatum rd = build_root_datum(label);
        for (long long a = 0; a <= 3; ++a)
            for (long long b = 0; a + b <= 3; ++b)
                CHECK(irrep_char(rd, {a, b}) == brute::kostant_character(rd, {a, b}));
    }
}

TEST_CASE("property: decompose inverts sums of irreducibles") {
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> coord(0, 2), mult(0, 3);
    for (const char* label : {"SL3", "B2", "GL2"}) {
        RootDatum rd = build_root_datum(label);
        for (int trial = 0; trial < 6; ++trial) {
            std::map<IVec, long long> want;
            WeightChar sum(rd.rank());
            for (int k = 0; k < 3; ++k) {
                IVec lambda = {coord(rng), coord(rng)};
                if (std::string(label) == "GL2") lambda = {lambda[0] + lambda[1], lambda[1]};
                long long m = mult(rng);
                if (m == 0) continue;
                want[lambda] += m;
                sum = sum + irrep_char(rd, lambda).scaled(m);
            }
            std::map<IVec, long long> got;
            for (const auto& [l, m] : decompose(rd, sum)) got[l] += m;
            CHECK(got == want);
        }
    }
}

TEST_CASE("property: rho = rho_M + rho_P") {
    for (const char* label : {"GL3", "GL4", "Sp4", "GSp6", "SL3", "G2"}) {
        RootDatum rd = build_root_datum(label);
        size_t r = rd.semisimple_rank();
        for (unsigned mask = 0; mask < (1u << r); ++mask) {
            std::vector<size_t> levi;
            for (size_t i = 0; i < r; ++i)
                if (mask & (1u << i)) levi.push_back(i);
            ParabolicDatum p(rd, levi);
            CHECK(add(p.rho_m(), p.rho_p()) == rd.rho());
            for (const auto& c : p.levi().simple_coroots()) CHECK(dot(to_q(c), p.rho_p()) == 0);
        }
    }
}
