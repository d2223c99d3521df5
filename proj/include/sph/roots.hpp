#pragma once

#include <string>

#include "sph/rational.hpp"

namespace sph {

// Split reductive root datum on a concrete lattice Z^n. Weights (characters)
// and coweights (cocharacters) are both integer vectors of length n, paired by
// the standard dot product.
class RootDatum {
public:
    RootDatum() = default;
    // Throws an input error unless <a_i, a_i^> = 2 and the Cartan matrix is of
    // finite type.
    RootDatum(std::string name, size_t rank, IMat simple_roots, IMat simple_coroots);

    const std::string& name() const { return name_; }
    size_t rank() const { return n_; }
    size_t semisimple_rank() const { return roots_.size(); }
    const IMat& simple_roots() const { return roots_; }
    const IMat& simple_coroots() const { return coroots_; }
    // cartan()[i][j] = <a_i, a_j^>
    const IMat& cartan() const { return cartan_; }

    // Positive roots and their coroots, in matching order; each is listed with
    // its coefficients in the simple roots.
    const IMat& positive_roots() const { return pos_roots_; }
    const IMat& positive_coroots() const { return pos_coroots_; }
    const IMat& root_coefficients() const { return root_coef_; }

    const QVec& rho() const { return rho_; }
    const QVec& rho_check() const { return rho_check_; }

    long long pair(const IVec& weight, const IVec& coweight) const { return dot(weight, coweight); }
    IVec reflect(size_t i, const IVec& weight) const;
    IVec reflect_coweight(size_t i, const IVec& coweight) const;
    // Reflection s_i acting on weights, as an n x n integer matrix (rows).
    IMat reflection_matrix(size_t i) const;

    bool is_dominant(const IVec& weight) const;
    IVec dominant_rep(const IVec& weight) const;
    IVec dominant_coweight_rep(const IVec& coweight) const;
    // <weight, 2 rho^>, the grading used to order weights
    long long height(const IVec& weight) const;
    size_t weyl_order() const;

    // Same lattice, simple roots restricted to the given indices.
    RootDatum levi(const std::vector<size_t>& simple) const;
    // Roots and coroots exchanged.
    RootDatum dual() const;

    bool operator==(const RootDatum& o) const {
        return n_ == o.n_ && roots_ == o.roots_ && coroots_ == o.coroots_;
    }

private:
    std::string name_;
    size_t n_ = 0;
    IMat roots_, coroots_, cartan_;
    IMat pos_roots_, pos_coroots_, root_coef_;
    QVec rho_, rho_check_;
};

// Labels: GL<n>, SL<n>, PGL<n>, Sp<2n>, GSp<2n>, A<n>, B<n>, C<n>, D<n>, G2,
// T<n> (split torus), and products joined with 'x', e.g. "GL1xSL2".
RootDatum build_root_datum(const std::string& label);
RootDatum product(const RootDatum& a, const RootDatum& b);

std::vector<IVec> weyl_orbit(const RootDatum& rd, const IVec& weight);
std::vector<IVec> weyl_orbit_coweights(const RootDatum& rd, const IVec& coweight);

// Standard parabolic with Levi simple roots levi_simple (indices into the
// simple roots).
class ParabolicDatum {
public:
    ParabolicDatum(const RootDatum& parent, std::vector<size_t> levi_simple);

    const RootDatum& parent() const { return parent_; }
    const RootDatum& levi() const { return levi_; }
    const std::vector<size_t>& levi_simple() const { return levi_simple_; }
    std::vector<size_t> radical_simple() const;

    const QVec& rho_m() const { return levi_.rho(); }
    const QVec& rho_p() const { return rho_p_; }

    // Positive roots of G not in M, and their coroots.
    const IMat& radical_roots() const { return rad_roots_; }
    const IMat& radical_coroots() const { return rad_coroots_; }

    // Basis chi_1..chi_k of the characters of M^ab (characters vanishing on
    // the coroots of M). The projection of a coweight to Lambda_{G,P} is
    // (<chi_j, v>)_j.
    const IMat& abelian_characters() const { return ab_chars_; }
    size_t abelian_rank() const { return ab_chars_.size(); }
    IVec project(const IVec& coweight) const;
    // Images of the coroots of Delta \ Delta_M: generators of Lambda^pos.
    IMat positive_generators() const;
    // 2 rho_P written in the basis abelian_characters(), so that
    // <rho_P, lift(theta)> = (1/2) sum_j c_j theta_j.
    const QVec& two_rho_p_coords() const { return two_rho_p_coords_; }
    Rational rho_p_pairing(const IVec& theta) const;

private:
    RootDatum parent_, levi_;
    std::vector<size_t> levi_simple_;
    QVec rho_p_;
    IMat rad_roots_, rad_coroots_, ab_chars_;
    QVec two_rho_p_coords_;
};

}  // namespace sph
