#pragma once

#include <optional>

#include "sph/rational.hpp"

namespace sph {

// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(QMat& m, size_t ncols);
size_t rank(const QMat& rows, size_t ncols);
// Basis of {x : row . x = 0 for every row}, one vector per free column.
QMat nullspace(const QMat& rows, size_t ncols);
// Some x with sum_j x_j cols[j] = target, if it exists.
std::optional<QVec> solve_combination(const QMat& cols, const QVec& target);
// Component of v orthogonal to span(basis) under the standard form.
QVec orthogonal_part(const QVec& v, const QMat& basis);
// Canonical basis of a rational subspace: rref rows, primitive, positive pivot.
QMat canonical_basis(const QMat& vectors, size_t ncols);

// Integer kernel basis of an integer matrix (rows x ncols); the basis spans the
// saturated lattice ker(m) over Z.
IMat integer_kernel(const IMat& rows, size_t ncols);
// Row Hermite normal form of the lattice spanned by the given vectors: echelon,
// positive pivots, entries above each pivot reduced into [0, pivot).
IMat hermite_basis(const IMat& vectors, size_t ncols);

struct SmithForm {
    std::vector<Integer> diagonal;  // nonzero elementary divisors, d_i | d_{i+1}
    size_t rows = 0, cols = 0;
};
SmithForm smith_form(const IMat& m, size_t ncols);

}  // namespace sph
