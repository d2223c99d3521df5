#pragma once

#include "sph/io.hpp"
#include "sph/laurent.hpp"
#include "sph/weights.hpp"

namespace sph {

// Sign in the evaluation q^{kappa <rho_M, beta>} of the shifted Satake
// parameter. Pinned by the acceptance run: only +1 passes the GL3 (2,1)
// coset comparison together with the smooth and Borel/PP checks.
constexpr int kKappa = 1;

struct RadicalWeight {
    IVec coroot;     // alpha-check, cocharacter coordinates of G
    IVec theta;      // image in Lambda_{G,P}
    long long grade; // <2 rho_M, alpha-check>
};

struct DualRadicalRep {
    ParabolicDatum parabolic;
    std::vector<RadicalWeight> weights;
};

// Throws an input error when the Levi is all of G.
DualRadicalRep dual_radical(const ParabolicDatum& p);

struct FFixedEntry {
    IVec theta;
    long long grade;  // m <= 0
    long long multiplicity;
    bool operator==(const FFixedEntry& o) const {
        return theta == o.theta && grade == o.grade && multiplicity == o.multiplicity;
    }
};
using FFixedRep = std::vector<FFixedEntry>;

// Lowest weights of the principal sl2 strings per theta; throws
// NotSl2Character when some grading is not symmetric.
FFixedRep f_fixed(const DualRadicalRep& r);

struct BasicFunctionTable {
    std::string datum;
    std::string case_tag;  // UP-Borel, PP-general or smooth
    int height = 0;
    long truncation = 0;
    int kappa = kKappa;
    // every point of Lambda_X^+ up to the height, in lattice_points order
    std::vector<std::pair<IVec, QLaurent>> values;

    QLaurent at(const IVec& lambda) const;
};

// Kostant count by number of parts: coefficient of t^i is the number of
// multisets of i positive coroots of rd summing to mu.
std::map<long, Integer> kostant_parts(const RootDatum& rd, const IVec& mu);

BasicFunctionTable basic_function_borel(const SphericalDatum& d, const EngineSpec& spec, int height);
BasicFunctionTable basic_function_pp(const SphericalDatum& d, const EngineSpec& spec, int height, int kappa = kKappa);
BasicFunctionTable basic_function_smooth(const SphericalDatum& d, int height);
// Dispatch on the entry's engine case; throws an input error for "none".
BasicFunctionTable basic_function(const CatalogEntry& e, int height, int kappa = kKappa);

// Degree i part of Sym(u_P) decomposed into irreducibles of the dual Levi,
// for i = 0..D.
using GradedPiece = std::pair<int, std::vector<std::pair<IVec, long long>>>;
std::vector<GradedPiece> basic_function_graded(const ParabolicDatum& p, int D);

// Laurent polynomial in q, rational coefficients, keyed by the exponent of
// the symbolic variables z.
using SymPoly = std::map<IVec, RLaurent>;
std::string sympoly_to_string(const SymPoly& p, const std::vector<std::string>& names);

// coeff * z^z * q^{q_exp}
struct LMonomial {
    IVec z;
    Rational coeff = 1;
    Rational q_exp = 0;
};

// prod over monomials of (1 - m T)^{-1}, T = q^{-s}
struct LFactor {
    size_t nvars = 0;
    std::vector<LMonomial> monomials;

    // coefficient of T^k: the complete homogeneous polynomial h_k
    SymPoly coefficient(int k) const;
    std::string to_string(const std::vector<std::string>& names) const;
};

// With a point, z is replaced by omega(theta) = prod point_j^{theta_j};
// without one, z stays symbolic in Lambda_{G,P} coordinates.
LFactor local_lfactor(const FFixedRep& r, size_t abelian_rank, const std::optional<QVec>& point, int kappa = kKappa);
LFactor local_lfactor(const DualRadicalRep& r, const std::optional<QVec>& point, int kappa = kKappa);
// L(pi, s + shift) for the standard representation of GL_n: monomials a_j q^{-shift}
LFactor std_lfactor(size_t n, const Rational& shift);

// Sat(1_{K mu(t) K}) for a minuscule or central coweight mu of G: the sum of
// z^{w mu} over the Weyl orbit, times q^{<rho, mu>}. Throws an input error
// for any other mu.
SymPoly satake_minuscule(const RootDatum& rd, const IVec& mu);

// Functions on the strata of U_P\G or [P,P]\G, keyed by orbit labels in
// Lambda_{G,P}.
using StratumFunction = std::map<IVec, RLaurent>;

// Torus side of the module action: z^beta becomes
// q^{kappa <rho_M, beta>} w^{theta} with theta the image of beta in
// Lambda_{G,P}, and w^theta sends 1_lambda to q^{<rho_P, theta>} 1_{lambda + theta}.
StratumFunction torus_side_action(const ParabolicDatum& p, const SymPoly& sat, const StratumFunction& f,
                                  int kappa = kKappa);

struct GrowthCertificate {
    std::optional<QVec> chi;
    // an empty answer at finite height does not prove anything
    bool inconclusive = false;
};
GrowthCertificate growth_certificate(const BasicFunctionTable& t, size_t rank);

// q^{-min_i <chi_i, lambda>} over the Hilbert basis chi_i of the dual of
// C(X) (taken in the saturated span of C(X)); 1 when C(X) = {0}.
// Throws UnsupportedRank above dimension 4.
Rational toric_distance(const SphericalDatum& d, const IVec& lambda, const Rational& q);

// Smallest n <= max_n with |Phi(lambda)| <= d(lambda)^{-n} on every stratum
// of the table in C(X), at the given q.
std::optional<int> distance_exponent(const SphericalDatum& d, const BasicFunctionTable& t, const Rational& q, int max_n);

std::string render_tsv(const BasicFunctionTable& t, const std::optional<Rational>& q);
Json render_table_json(const BasicFunctionTable& t, const std::optional<Rational>& q);

}  // namespace sph
