#include "sph/lattice.hpp"

#include "sph/linalg.hpp"

namespace sph {

LatticeMap::LatticeMap(IMat rows, size_t source_rank) : rows_(std::move(rows)), n_(source_rank) {
    for (const auto& r : rows_)
        if (r.size() != n_) throw input_error("lattice map rows must have length equal to the source rank");
}

IVec LatticeMap::column(size_t j) const {
    IVec c;
    for (const auto& r : rows_) c.push_back(r[j]);
    return c;
}

IVec LatticeMap::apply(const IVec& v) const {
    if (v.size() != n_) throw input_error("lattice map applied to a vector of wrong length");
    IVec out;
    for (const auto& r : rows_) out.push_back(dot(r, v));
    return out;
}

QVec LatticeMap::apply(const QVec& v) const {
    if (v.size() != n_) throw input_error("lattice map applied to a vector of wrong length");
    QVec out;
    for (const auto& r : rows_) out.push_back(dot(to_q(r), v));
    return out;
}

QVec LatticeMap::apply_dual(const QVec& u) const {
    if (u.size() != rows_.size()) throw input_error("dual lattice map applied to a vector of wrong length");
    QVec out(n_, Rational(0));
    for (size_t i = 0; i < rows_.size(); ++i)
        for (size_t j = 0; j < n_; ++j) out[j] += Rational(Integer(static_cast<long>(rows_[i][j]))) * u[i];
    return out;
}

QMat LatticeMap::dual_rows() const {
    QMat d(n_, QVec(rows_.size()));
    for (size_t i = 0; i < rows_.size(); ++i)
        for (size_t j = 0; j < n_; ++j) d[j][i] = Rational(Integer(static_cast<long>(rows_[i][j])));
    return d;
}

size_t LatticeMap::rank() const { return sph::rank(to_q(rows_), n_); }

std::vector<Integer> LatticeMap::elementary_divisors() const { return smith_form(rows_, n_).diagonal; }

Integer LatticeMap::torsion_order() const {
    if (!injective()) throw input_error("lattice map is not injective (degenerate datum)");
    Integer t = 1;
    for (const auto& d : elementary_divisors()) t *= d;
    return t;
}

IMat LatticeMap::kernel_basis() const { return integer_kernel(rows_, n_); }

IMat LatticeMap::image_saturation_basis() const {
    // saturation of the image = integer kernel of the equations cutting out its span
    QMat cols;
    for (size_t j = 0; j < n_; ++j) cols.push_back(to_q(column(j)));
    QMat perp = nullspace(cols, rows_.size());
    IMat perp_i;
    for (const auto& p : perp) perp_i.push_back(to_i(p));
    return integer_kernel(perp_i, rows_.size());
}

LatticeMap LatticeMap::compose(const LatticeMap& before) const {
    if (before.target_rank() != n_) throw input_error("lattice map composition: rank mismatch");
    IMat out(rows_.size(), IVec(before.n_, 0));
    for (size_t i = 0; i < rows_.size(); ++i)
        for (size_t j = 0; j < before.n_; ++j)
            for (size_t k = 0; k < n_; ++k) out[i][j] += rows_[i][k] * before.rows_[k][j];
    return LatticeMap(out, before.n_);
}

}  // namespace sph
