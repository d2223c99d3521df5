#pragma once

#include "sph/io.hpp"

namespace sph {

// Fixture directory: $SPH_CATALOG_DIR if set, else the build-time default.
std::string catalog_dir();
std::vector<std::string> list_entries();
CatalogEntry load_entry(const std::string& key);
// FNV-1a of the canonical rendering, as 16 hex digits.
std::string content_hash(const CatalogEntry& e);

// Flags are optional; these read them with defaults.
bool flag_bool(const CatalogEntry& e, const std::string& name, bool fallback = false);
bool has_flag(const CatalogEntry& e, const std::string& name);

// Structural check of an expected_lvalue record. Returns an empty string when
// well formed, else the first problem.
std::string lvalue_problem(const Json& lv);

}  // namespace sph

namespace sph {

// One executed expectation from an entry's flags.
struct FlagCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Runs every combinatorial flag of the entry against spherical-core.
// Table-valued flags (smooth_expected) are checked by the engine.
std::vector<FlagCheck> check_entry_flags(const CatalogEntry& e);

// Compares the affine-closure data of src, pushed through its
// identification record, with that of target.
struct IdentificationCheck {
    bool cone = false;
    bool colors = false;
    bool valuation_cone = false;
    bool ok() const { return cone && colors && valuation_cone; }
};
IdentificationCheck check_identification(const CatalogEntry& src, const CatalogEntry& target);

}  // namespace sph
