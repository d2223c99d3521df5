#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sph/engine.hpp"

namespace sph::oracle {

// x = sum_{k=lo}^{hi-1} c_k t^k + O(t^hi) over F_p, p prime. Models
// F = F_p((t)) at finite precision.
class TruncSeries {
public:
    TruncSeries() = default;
    // 0 + O(t^hi)
    static TruncSeries zero(unsigned p, long hi);
    // c t^v + O(t^{v+N})
    static TruncSeries monomial(unsigned p, long N, long long c, long v);
    // sum_i c_i t^{v+i} + O(t^{v+N}); missing coefficients are 0
    static TruncSeries from_coeffs(unsigned p, long N, long v, const std::vector<long long>& c);

    unsigned p() const { return p_; }
    long lo() const { return lo_; }
    long hi() const { return hi_; }
    // coefficient of t^k; 0 below lo, throws Precision at or above hi
    unsigned coeff(long k) const;
    // every known coefficient vanishes
    bool known_zero() const;
    // throws Precision when known_zero()
    long valuation() const;

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries operator-() const;
    // throws Precision when known_zero()
    TruncSeries inverse() const;
    // equal on the common precision
    bool congruent(const TruncSeries& o) const;
    std::string to_string() const;

private:
    unsigned p_ = 2;
    long lo_ = 0, hi_ = 0;
    std::vector<unsigned> c_;  // c_[k - lo_]

    long effective_valuation() const;  // hi when known_zero()
    void check_compatible(const TruncSeries& o) const;
};

using SMat = std::vector<std::vector<TruncSeries>>;

SMat mat_mul(const SMat& a, const SMat& b);
// Square matrices of size <= 3.
TruncSeries det(const SMat& a);
// Smith exponents e_1 <= ... <= e_n from minimal valuations of minors, n <= 3;
// UnsupportedRank above.
IVec elementary_divisors(const SMat& a);
// Uniform element of GL_n(F_p[t]/t^N), lifted with precision N.
SMat random_unit_matrix(size_t n, unsigned p, long N, std::mt19937_64& rng);

// Valuations stay within [-H-2, H+2] for labels of height <= H plus one
// minuscule step, and products of such entries lose at most H+2 digits.
inline long precision_for_height(int height) { return 2L * height + 4; }

enum class Space {
    A2,     // row vectors under GL2; label min valuation
    Mat2,   // GL2 x GL2; label Smith exponents a <= b
    UGL2,   // U\GL2 as (bottom row, det); label in Z^2
    PPGL3,  // [P,P]\GL3, P of type (2,1), as (bottom row, det); label in Lambda_{G,P}
};
Space parse_space(const std::string& s);
std::string space_name(Space s);
size_t group_degree(Space s);
size_t label_rank(Space s);

struct LatticePoint {
    Space space = Space::A2;
    SMat rows;                        // Mat2: the matrix; otherwise the single row
    std::optional<TruncSeries> det;   // UGL2 and PPGL3
};

// Labels are orbit labels: the negative of the Iwasawa label for UGL2 and
// PPGL3, min valuation for A2, sorted Smith exponents for Mat2.
LatticePoint representative(Space s, const IVec& label, unsigned p, long N);
IVec orbit_invariant(const LatticePoint& x);
// Right action of g in GL_n(F).
LatticePoint act(const LatticePoint& x, const SMat& g);
// Random K-translate (K x K for Mat2).
LatticePoint random_translate(const LatticePoint& x, std::mt19937_64& rng);
// Membership in the O-points of the affine closure: A^2, Mat2, A^2 x GL1 and
// A^3 x GL1 respectively.
bool is_integral(const LatticePoint& x);
// All labels of l1-height <= H (dominant ones only for Mat2).
std::vector<IVec> labels_up_to(Space s, int height);

// Right cosets gK of K t^mu K in Hermite normal form: upper triangular,
// diagonal t^{a_i}, entry (i, j) a polynomial of degree < a_i. mu may have
// negative entries; n <= 3.
std::vector<SMat> hnf_cosets(size_t n, unsigned p, const IVec& mu);
// Dominant (descending) representative of mu.
IVec dominant_gl(const IVec& mu);

// Finite combination of 1_{K t^mu K} in the Hecke algebra of GL_n, keyed by
// dominant mu.
struct HeckeElement {
    size_t n = 2;
    std::map<IVec, Rational> coeff;
};
// unit, degree1 (1,0..0), wedge2 (1,1,0), central (1..1); unknown -> input error
HeckeElement hecke_operator(const std::string& name, size_t n);
std::vector<std::string> hecke_operator_names(size_t n);
// Structure constants of a * b by counting products of coset representatives.
HeckeElement hecke_product(unsigned p, const HeckeElement& a, const HeckeElement& b);

using OracleFunction = std::map<IVec, Rational>;
// (h * f)(x) = sum over cosets g_i of h of f(x g_i), at a random K-translate
// of the representative of each target label.
OracleFunction hecke_convolve(Space s, unsigned p, const HeckeElement& h, const OracleFunction& f,
                              const std::vector<IVec>& targets, long N, std::mt19937_64& rng);
// Satake transform sum_i q^{-<rho, diag_i>} z^{diag_i} over the cosets.
std::map<IVec, QuadVal> coset_satake(unsigned p, const HeckeElement& h);

// Interpolation through the first degree+1 samples, checked on the rest.
std::optional<std::vector<Rational>> fit_polynomial(const std::vector<std::pair<Rational, Rational>>& samples,
                                                    size_t degree);

struct Mismatch {
    unsigned q = 0;
    IVec label;
    std::string expected, got;
};

struct Report {
    std::string name;
    bool pass = true;
    std::vector<Mismatch> mismatches;
    std::vector<std::string> notes;
};

struct CheckOptions {
    std::vector<unsigned> qs{2, 3};
    int height = 4;
    std::uint64_t seed = 1;
    int samples = 4;  // random translates per stratum
};

// Hecke action on U\GL2 (n = 2) or [P,P]\GL3 (n = 3) against the engine's
// torus-side action, per operator and per source stratum.
Report satake_check(Space s, const std::string& op, const CheckOptions& o, int kappa = kKappa);
// Phi * |det|^s on Mat2 strata against the coefficients of L(std, s - 1/2).
Report godement_jacquet_check(const CheckOptions& o);
// Engine table of pp-gl3-21 at the given kappa against the O-points of
// A^3 x GL1.
Report gl3_basic_function_check(const CheckOptions& o, int kappa);
Report orbit_invariance_check(Space s, const CheckOptions& o);
Report associativity_check(const CheckOptions& o);
// Convolution values at every q fit one polynomial of degree <= <2 rho, mu>.
Report interpolation_check(const CheckOptions& o);

struct KappaPin {
    struct Row {
        int kappa;
        bool smooth, borel_pp, gl3;
        bool pass() const { return smooth && borel_pp && gl3; }
    };
    std::vector<Row> rows;
    int height_used = 0;
    std::optional<int> pinned;  // set when exactly one kappa passes
};
// Runs the smooth normalization, Borel/PP agreement and the GL3 oracle for
// both signs; escalates the GL3 height by one if both pass.
KappaPin pin_kappa(const CheckOptions& o);

std::vector<std::string> check_names();
// Unknown name -> input error.
Report run_check(const std::string& name, const CheckOptions& o);
// "q\tlabel\texpected\tgot" lines after a header.
std::string mismatch_tsv(const Report& r);

}  // namespace sph::oracle
