#pragma once

#include <optional>

#include "sph/cone.hpp"
#include "sph/lattice.hpp"
#include "sph/roots.hpp"

namespace sph {

struct Color {
    std::string label;
    IVec rho;  // rho(D) in Lambda_X
    bool operator==(const Color& o) const { return label == o.label && rho == o.rho; }
};

// Simple embedding datum: the cone C(X) together with the color subset F(X),
// kept as sorted labels.
struct ColoredCone {
    Cone cone;
    std::vector<std::string> colors;

    ColoredCone() = default;
    ColoredCone(Cone c, std::vector<std::string> f);
    bool operator==(const ColoredCone& o) const { return cone == o.cone && colors == o.colors; }
    std::string to_string() const;
};

// Combinatorial record of a spherical variety. Characters X(X) are Z^r
// (rank r); Lambda_X and the valuation cone live in the dual Q^r, paired by
// the dot product. lattice_map sends X(X) into the character lattice of the
// ambient group's torus.
struct SphericalDatum {
    std::string name;
    RootDatum group;
    LatticeMap lattice_map;
    Cone valuation_cone;
    std::vector<Color> colors;
    std::vector<size_t> levi_roots;  // Delta(X), indices of simple roots
    IMat spherical_roots;            // Delta_X in X(X)
    // Only the lines of the spherical roots are meaningful when false.
    bool spherical_roots_normalized = false;
    std::vector<IMat> little_weyl;   // generators of W_X acting on Q^r (rows)
    std::optional<ColoredCone> colored_cone;

    size_t rank() const { return lattice_map.source_rank(); }
    const Color& color(const std::string& label) const;
    std::vector<QVec> color_images(const std::vector<std::string>& labels) const;
    std::vector<QVec> all_color_images() const;
};

// Structural sanity of a datum; throws an input error naming the first
// problem (lengths, injectivity, spherical roots against V, antidominant
// image inside V, little Weyl group domain check on sampled points).
void check_datum(const SphericalDatum& d);

struct Verdict {
    bool ok = false;
    std::string diagnostic;
};

Verdict validate_colored_cone(const SphericalDatum& d, const ColoredCone& cc);

struct AffineVerdict {
    bool affine = false;
    IVec witness;  // primitive integral chi when affine
};
AffineVerdict is_affine(const SphericalDatum& d, const ColoredCone& cc);

ColoredCone affine_closure_data(const SphericalDatum& d);

// Image of the antidominant chamber under the dual of lattice_map.
Cone antidominant_image(const SphericalDatum& d);
bool is_wavefront(const SphericalDatum& d);

Integer arithmetic_multiplicity(const SphericalDatum& d);

IMat enumerate_orbits(const SphericalDatum& d, int height, bool integral_only);

// Smallest set of simple roots whose span contains the weights (given in the
// character lattice of rd).
std::vector<size_t> support(const RootDatum& rd, const IMat& weights);

// Minimal Delta_P containing Delta(X) and the support of Delta_X when proper.
std::optional<std::vector<size_t>> parabolic_induction(const SphericalDatum& d);

struct NegligibleReport {
    bool holds = false;
    // each proper subset Theta of Delta_X (indices) with a witnessing simple
    // root, or nothing where the check fails
    std::vector<std::pair<std::vector<size_t>, std::optional<size_t>>> certificate;
};
NegligibleReport negligible_orbit_check(const SphericalDatum& d);

struct AutLineality {
    size_t rank = 0;
    std::optional<Cone> x_positive_cone;
};
AutLineality aut_lineality(const SphericalDatum& d);

// Size of the generic fiber of X(X)/W_X -> X(A)/W; needs little_weyl.
std::optional<size_t> geometric_multiplicity(const SphericalDatum& d);

}  // namespace sph
