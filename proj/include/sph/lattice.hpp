#pragma once

#include "sph/rational.hpp"

namespace sph {

// Integer matrix m x n viewed as a homomorphism Z^n -> Z^m (columns are the
// images of the source basis).
class LatticeMap {
public:
    LatticeMap() = default;
    LatticeMap(IMat rows, size_t source_rank);

    size_t source_rank() const { return n_; }
    size_t target_rank() const { return rows_.size(); }
    const IMat& rows() const { return rows_; }
    IVec column(size_t j) const;

    IVec apply(const IVec& v) const;
    QVec apply(const QVec& v) const;
    // transpose: Z^m -> Z^n, the dual map on cocharacters
    QVec apply_dual(const QVec& u) const;
    QMat dual_rows() const;

    size_t rank() const;
    bool injective() const { return rank() == n_; }
    std::vector<Integer> elementary_divisors() const;
    // order of the torsion subgroup of Z^m / image
    Integer torsion_order() const;
    // saturated bases
    IMat kernel_basis() const;
    IMat image_saturation_basis() const;

    LatticeMap compose(const LatticeMap& before) const;  // this o before

    bool operator==(const LatticeMap& o) const { return n_ == o.n_ && rows_ == o.rows_; }

private:
    IMat rows_;
    size_t n_ = 0;
};

}  // namespace sph
