#pragma once

#include <map>

#include "sph/roots.hpp"

namespace sph {

// Finitely supported integer-valued function on Z^n (a virtual character).
class WeightChar {
public:
    explicit WeightChar(size_t n = 0) : n_(n) {}
    static WeightChar unit(size_t n) {
        WeightChar c(n);
        c.add(IVec(n, 0), 1);
        return c;
    }
    // one copy of each listed weight (repeats add up)
    static WeightChar from_weights(size_t n, const IMat& weights);

    size_t lattice_rank() const { return n_; }
    const std::map<IVec, long long>& terms() const { return m_; }
    long long operator[](const IVec& w) const {
        auto it = m_.find(w);
        return it == m_.end() ? 0 : it->second;
    }
    void add(const IVec& w, long long mult);
    bool is_zero() const { return m_.empty(); }
    long long dim() const;

    WeightChar operator+(const WeightChar& o) const;
    WeightChar operator-(const WeightChar& o) const;
    WeightChar operator*(const WeightChar& o) const;  // tensor product
    WeightChar scaled(long long k) const;
    bool operator==(const WeightChar& o) const { return n_ == o.n_ && m_ == o.m_; }

    // psi^k: w -> k w
    WeightChar adams(long long k) const;
    // image under the linear map with the given rows (target rank = rows.size())
    WeightChar mapped(const IMat& rows) const;
    bool is_weyl_invariant(const RootDatum& rd) const;

    std::string to_string() const;

private:
    size_t n_;
    std::map<IVec, long long> m_;
};

// Newton identities on Adams operations: i h_i = sum_k p_k h_{i-k} and
// i e_i = sum_k (-1)^{k-1} p_k e_{i-k}.
WeightChar sym_power(const WeightChar& chi, int i);
WeightChar ext_power(const WeightChar& chi, int i);
// h_0 .. h_d in one pass
std::vector<WeightChar> sym_powers(const WeightChar& chi, int d);

// Freudenthal's recursion; lambda must be dominant.
long long freudenthal_multiplicity(const RootDatum& rd, const IVec& lambda, const IVec& mu);
WeightChar irrep_char(const RootDatum& rd, const IVec& lambda);
Integer weyl_dimension(const RootDatum& rd, const IVec& lambda);

// Greedy leading-term subtraction of irreducible characters. The leading term
// is the dominant support point of largest height <mu, 2 rho^>, ties broken
// lexicographically.
std::vector<std::pair<IVec, long long>> decompose(const RootDatum& rd, const WeightChar& chi);

}  // namespace sph
