#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "sph/catalog.hpp"
#include "sph/cli.hpp"

using namespace sph;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Compares stdout against tests/golden/<name>. Set SPH_UPDATE_GOLDEN=1 to rewrite.
void golden(const std::string& name, const std::vector<std::string>& args, int code) {
    CAPTURE(name);
    Run r = run(args);
    CHECK(r.code == code);
    auto path = std::filesystem::path(SPH_GOLDEN_DIR) / name;
    if (std::getenv("SPH_UPDATE_GOLDEN")) {
        std::ofstream(path) << r.out;
        return;
    }
    REQUIRE(std::filesystem::exists(path));
    CHECK(r.out == slurp(path));
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string l; std::getline(ss, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST_CASE("wavefront check on the plane") {
    Run r = run({"check", "a2-sl2", "wavefront"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.rfind("wavefront\tpass", 0) == 0);
}

TEST_CASE("smooth basic function is identically one") {
    Run r = run({"basicfn", "a2-sl2", "--case", "borel", "--height", "6", "--q", "sym"});
    REQUIRE(r.code == kExitOk);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 8);
    CHECK(ls[0] == "l1\tvalue");
    for (size_t i = 1; i < ls.size(); ++i) CHECK(ls[i] == std::to_string(i - 1) + "\t1");
}

TEST_CASE("integral orbits of the line") {
    Run r = run({"orbits", "a1-gl1", "--height", "3", "--integral"});
    REQUIRE(r.code == kExitOk);
    CHECK(lines(r.out).size() == 5);  // header and four rows
}

TEST_CASE("golden outputs") {
    golden("describe_u_sl3.json", {"describe", "u-sl3", "--json"}, kExitOk);
    golden("describe_triple_product.txt", {"describe", "triple-product"}, kExitOk);
    golden("check_triple_product_colored_cone.json", {"check", "triple-product", "colored-cone", "--json"}, kExitOk);
    golden("check_triple_product_negligible.txt", {"check", "triple-product", "negligible"}, kExitOk);
    golden("check_triple_product_induced.txt", {"check", "triple-product", "induced"}, kExitFalse);
    golden("check_u_sl3_affine.json", {"check", "u-sl3", "affine", "--json"}, kExitOk);
    golden("orbits_u_sl3.json", {"orbits", "u-sl3", "--height", "2", "--json"}, kExitOk);
    golden("basicfn_a2_sl2_pp.json", {"basicfn", "a2-sl2", "--case", "pp", "--height", "3", "--json"}, kExitOk);
    golden("basicfn_pp_gl3_21.tsv", {"basicfn", "pp-gl3-21", "--height", "4", "--q", "3"}, kExitOk);
    golden("basicfn_pp_gl3_21_all.json", {"basicfn", "pp-gl3-21", "--height", "2", "--all", "--json"}, kExitOk);
    golden("basicfn_u_sl3_graded.tsv", {"basicfn", "u-sl3", "--case", "graded", "--height", "2"}, kExitOk);
    golden("lf_pp_gl3_21.txt", {"lf", "pp-gl3-21", "--degree", "2"}, kExitOk);
    golden("lf_gsp6_point.json", {"lf", "gsp6-siegel-pp", "--rep", "u_P_f", "--point", "z1=2,z2=1", "--json"}, kExitOk);
    golden("catalog_list.tsv", {"catalog", "list"}, kExitOk);
    golden("catalog_show_a2_sl2.json", {"catalog", "show", "a2-sl2"}, kExitOk);
    golden("catalog_test_triple_product.json", {"catalog", "test", "triple-product", "--json"}, kExitOk);
    golden("oracle_satake_gl2.json", {"oracle", "run", "satake-gl2", "--height", "2", "--json"}, kExitOk);
}

TEST_CASE("json outputs carry the schema version") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"describe", "a2-sl2", "--json"},
             {"check", "a2-sl2", "wavefront", "--json"},
             {"orbits", "a1-gl1", "--json"},
             {"basicfn", "a2-sl2", "--json"},
             {"lf", "pp-gl3-21", "--json"},
             {"catalog", "list", "--json"},
             {"catalog", "show", "a1-gl1", "--json"},
             {"catalog", "test", "a1-gl1", "--json"},
             {"oracle", "run", "orbits", "--height", "2", "--json"}}) {
        CAPTURE(args[0]);
        Run r = run(args);
        REQUIRE(r.code == kExitOk);
        Json j = parse_json_text(r.out, "stdout");
        CHECK(j.at("schema") == kSchemaVersion);
    }
}

TEST_CASE("json round trip through a file") {
    Run shown = run({"catalog", "show", "kvs-2-3"});
    REQUIRE(shown.code == kExitOk);
    CatalogEntry e = parse_entry(parse_json_text(shown.out, "stdout"));
    CHECK(same_entry(e, load_entry("kvs-2-3")));

    auto path = std::filesystem::temp_directory_path() / "sph_cli_roundtrip.json";
    std::ofstream(path) << shown.out;
    Run by_file = run({"describe", path.string(), "--json"});
    Run by_key = run({"describe", "kvs-2-3", "--json"});
    CHECK(by_file.code == kExitOk);
    CHECK(by_file.out == by_key.out);

    // a bare datum without catalog fields
    std::ofstream(path) << render_datum(load_entry("a2-sl2").datum).dump();
    Run bare = run({"check", path.string(), "wavefront"});
    CHECK(bare.code == kExitOk);
    std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
    CHECK(run({"check", "triple-product", "induced"}).code == kExitFalse);
    CHECK(run({"check", "no-such-key", "wavefront"}).code == kExitInput);
    CHECK(run({"check", "a2-sl2", "bogus"}).code == kExitInput);
    CHECK(run({"orbits", "a1-gl1", "--height", "x"}).code == kExitInput);
    CHECK(run({}).code == kExitInput);
    CHECK(run({"--help"}).code == kExitOk);
    CHECK(run({"oracle", "run", "no-such-check"}).code == kExitInput);
    CHECK(run({"lf", "pp-gl3-21", "--point", "z1=1"}).code == kExitInput);

    Run hyp = run({"basicfn", "hecke-gl2", "--case", "borel"});
    CHECK(hyp.code == kExitInput);
    CHECK(hyp.err.rfind("error (hypothesis not met)", 0) == 0);
}

TEST_CASE("default specialization from the environment") {
    Run sym = run({"basicfn", "pp-gl3-21", "--height", "2"});
    ::setenv("SPH_Q_DEFAULT", "2", 1);
    Run two = run({"basicfn", "pp-gl3-21", "--height", "2"});
    ::unsetenv("SPH_Q_DEFAULT");
    CHECK(lines(sym.out)[0] == "l1\tl2\tvalue");
    CHECK(lines(two.out)[0] == "l1\tl2\tvalue\tq=2");
    CHECK(run({"basicfn", "pp-gl3-21", "--height", "2"}).out == sym.out);
}

TEST_CASE("output is deterministic") {
    std::vector<std::string> args{"oracle", "run", "satake-gl2", "--height", "2", "--seed", "7"};
    CHECK(run(args).out == run(args).out);
}
