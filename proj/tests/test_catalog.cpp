#include <set>

#include "doctest.h"
#include "sph/catalog.hpp"

using namespace sph;

TEST_CASE("catalog lists the fixtures") {
    auto keys = list_entries();
    CHECK(keys.size() >= 10);
    for (const char* k : {"a1-gl1", "a2-sl2", "hecke-gl2", "godement-jacquet-2", "rankin-selberg", "bump-friedberg",
                          "triple-product", "tensor-n", "kvs-1-15", "kvs-2-3", "kvs-2-5", "pgl2-group",
                          "gsp6-siegel-pp", "pp-gl3-21", "u-sl3", "a2minus0-sl2"})
        CHECK(std::find(keys.begin(), keys.end(), k) != keys.end());
    CHECK_THROWS_AS(load_entry("no-such-key"), Error);
}

TEST_CASE("json round trip and content hashes") {
    std::set<std::string> hashes;
    for (const auto& key : list_entries()) {
        CAPTURE(key);
        CatalogEntry e = load_entry(key);
        CatalogEntry back = parse_entry(render_entry(e));
        CHECK(same_entry(e, back));
        CHECK(render_entry(back) == render_entry(e));
        CHECK(content_hash(e) == content_hash(load_entry(key)));
        hashes.insert(content_hash(e));
    }
    CHECK(hashes.size() == list_entries().size());
}

TEST_CASE("every flagged expectation holds") {
    for (const auto& key : list_entries()) {
        CatalogEntry e = load_entry(key);
        for (const auto& f : check_entry_flags(e)) {
            CAPTURE(key);
            CAPTURE(f.name);
            CAPTURE(f.detail);
            CHECK(f.pass);
        }
    }
}

TEST_CASE("triple product closure matches the Siegel parabolic closure") {
    CatalogEntry x = load_entry("triple-product");
    CatalogEntry y = load_entry("gsp6-siegel-pp");
    IdentificationCheck id = check_identification(x, y);
    CHECK(id.cone);
    CHECK(id.colors);
    CHECK(id.valuation_cone);
    CHECK_THROWS_AS(check_identification(y, x), Error);
}

TEST_CASE("expected L-value records") {
    CHECK(lvalue_problem(Json()) == "");
    CHECK(lvalue_problem(load_entry("hecke-gl2").expected_lvalue) == "");
    CHECK(lvalue_problem(Json::parse(R"({"numerator": []})")) != "");
    CHECK(lvalue_problem(Json::parse(R"({"numerator": [{"rep": "std", "argument": {"const": "1/0"}}]})")) != "");
    CHECK(lvalue_problem(Json::parse(R"({"numerator": [{"rep": "", "argument": {}}]})")) != "");
    CatalogEntry t = load_entry("tensor-n");
    CHECK(t.flags["conjecture_from_n"] == 4);
    CHECK(t.expected_lvalue["conjecture"] == false);
}

TEST_CASE("malformed documents name the problem") {
    try {
        parse_json_text("{\n  \"key\": 1,\n  oops\n}", "doc.json");
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("doc.json:3:") == 0);
    }
    Json j = render_entry(load_entry("a2-sl2"));
    j["colors"][0]["rho"] = Json::array({1, 2});
    try {
        parse_entry(j);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("colors[0].rho") != std::string::npos);
    }
    j = render_entry(load_entry("a2-sl2"));
    j["schema"] = 7;
    CHECK_THROWS_AS(parse_entry(j), Error);
    j = render_entry(load_entry("a2-sl2"));
    j["valuation_cone"]["generators"] = Json::array({Json::array({-1})});
    // the antidominant image is the whole line, so V = half-line is rejected
    CHECK_THROWS_AS(parse_entry(j), Error);
}
