#pragma once

#include <json.hpp>

#include "sph/spherical.hpp"

namespace sph {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

// How the basic function of a catalog entry is evaluated.
//   borel:  closure of U_B\G; to_group maps Lambda_X into the cocharacters of G
//   pp:     closure of [P,P]\G; to_group maps Lambda_X into Lambda_{G,P}
//   smooth: smooth closure, the basic function is the indicator of C(X)
//   none:   no table
struct EngineSpec {
    std::string kind = "none";
    std::string group;
    std::vector<size_t> levi;
    IMat to_group;
    bool operator==(const EngineSpec& o) const {
        return kind == o.kind && group == o.group && levi == o.levi && to_group == o.to_group;
    }
};

struct CatalogEntry {
    std::string key;
    std::string provenance;
    SphericalDatum datum;
    EngineSpec engine;
    Json flags = Json::object();
    Json expected_lvalue = Json();
    Json identification = Json();
};

// Text -> JSON with line/column in the error message.
Json parse_json_text(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);

RootDatum parse_group(const Json& j, const std::string& path = "group");
Json render_group(const RootDatum& rd);

// Throws input errors naming the offending field.
SphericalDatum parse_datum(const Json& j);
Json render_datum(const SphericalDatum& d);

CatalogEntry parse_entry(const Json& j);
Json render_entry(const CatalogEntry& e);
bool same_entry(const CatalogEntry& a, const CatalogEntry& b);

SphericalDatum load_datum_file(const std::string& path);

}  // namespace sph
