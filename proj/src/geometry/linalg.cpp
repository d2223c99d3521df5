#include "sph/linalg.hpp"

#include <algorithm>

namespace sph {

std::vector<size_t> rref(QMat& m, size_t ncols) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < m.size(); ++c) {
        size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        Rational inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (size_t j = 0; j < ncols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    return pivots;
}

size_t rank(const QMat& rows, size_t ncols) {
    QMat m(rows);
    return rref(m, ncols).size();
}

QMat nullspace(const QMat& rows, size_t ncols) {
    QMat m(rows);
    auto piv = rref(m, ncols);
    std::vector<bool> is_piv(ncols, false);
    for (auto c : piv) is_piv[c] = true;
    QMat basis;
    for (size_t f = 0; f < ncols; ++f) {
        if (is_piv[f]) continue;
        QVec v(ncols, Rational(0));
        v[f] = 1;
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][f];
        basis.push_back(primitive(v));
    }
    return basis;
}

std::optional<QVec> solve_combination(const QMat& cols, const QVec& target) {
    size_t n = target.size(), k = cols.size();
    // augmented system: rows are coordinates, columns are the given vectors
    QMat aug(n, QVec(k + 1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < k; ++j) aug[i][j] = cols[j][i];
        aug[i][k] = target[i];
    }
    auto piv = rref(aug, k + 1);
    if (!piv.empty() && piv.back() == k) return std::nullopt;
    QVec x(k, Rational(0));
    for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug[i][k];
    return x;
}

QVec orthogonal_part(const QVec& v, const QMat& basis) {
    if (basis.empty()) return v;
    size_t k = basis.size();
    // Gram system G c = B v
    QMat g(k, QVec(k + 1));
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) g[i][j] = dot(basis[i], basis[j]);
        g[i][k] = dot(basis[i], v);
    }
    auto piv = rref(g, k + 1);
    QVec out(v);
    for (size_t i = 0; i < piv.size(); ++i) {
        for (size_t t = 0; t < out.size(); ++t) out[t] -= g[i][k] * basis[piv[i]][t];
    }
    return out;
}

QMat canonical_basis(const QMat& vectors, size_t ncols) {
    QMat m(vectors);
    rref(m, ncols);
    for (auto& row : m) row = primitive(row);
    return m;
}

namespace {

using ZMat = std::vector<std::vector<Integer>>;

ZMat to_z(const IMat& m, size_t ncols) {
    ZMat z(m.size(), std::vector<Integer>(ncols));
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != ncols) throw input_error("ragged integer matrix");
        for (size_t j = 0; j < ncols; ++j) z[i][j] = static_cast<long>(m[i][j]);
    }
    return z;
}

}  // namespace

IMat integer_kernel(const IMat& rows, size_t ncols) {
    size_t m = rows.size();
    // stack A over the identity and run column reduction
    ZMat a = to_z(rows, ncols);
    for (size_t i = 0; i < ncols; ++i) {
        std::vector<Integer> e(ncols, Integer(0));
        e[i] = 1;
        a.push_back(e);
    }
    auto col_sub = [&](size_t dst, size_t src, const Integer& f) {
        for (auto& row : a) row[dst] -= f * row[src];
    };
    auto col_swap = [&](size_t x, size_t y) {
        for (auto& row : a) std::swap(row[x], row[y]);
    };
    size_t p = 0;
    for (size_t i = 0; i < m && p < ncols; ++i) {
        while (true) {
            size_t best = ncols;
            for (size_t c = p; c < ncols; ++c) {
                if (a[i][c] == 0) continue;
                if (best == ncols || abs(a[i][c]) < abs(a[i][best])) best = c;
            }
            if (best == ncols) break;
            col_swap(p, best);
            bool done = true;
            for (size_t c = p + 1; c < ncols; ++c) {
                if (a[i][c] == 0) continue;
                Integer f;
                mpz_fdiv_q(f.get_mpz_t(), a[i][c].get_mpz_t(), a[i][p].get_mpz_t());
                col_sub(c, p, f);
                if (a[i][c] != 0) done = false;
            }
            if (done) {
                ++p;
                break;
            }
        }
    }
    IMat basis;
    for (size_t c = p; c < ncols; ++c) {
        IVec v(ncols);
        for (size_t r = 0; r < ncols; ++r) v[r] = to_ll(a[m + r][c]);
        basis.push_back(v);
    }
    return hermite_basis(basis, ncols);
}

IMat hermite_basis(const IMat& vectors, size_t ncols) {
    ZMat a = to_z(vectors, ncols);
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < a.size(); ++c) {
        // Euclid down column c among rows r..end
        while (true) {
            size_t best = a.size();
            for (size_t i = r; i < a.size(); ++i)
                if (a[i][c] != 0 && (best == a.size() || abs(a[i][c]) < abs(a[best][c]))) best = i;
            if (best == a.size()) break;
            std::swap(a[r], a[best]);
            bool done = true;
            for (size_t i = r + 1; i < a.size(); ++i) {
                if (a[i][c] == 0) continue;
                Integer f;
                mpz_fdiv_q(f.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
                for (size_t j = 0; j < ncols; ++j) a[i][j] -= f * a[r][j];
                if (a[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (a[r][c] == 0) continue;
        if (a[r][c] < 0)
            for (auto& x : a[r]) x = -x;
        for (size_t i = 0; i < r; ++i) {
            Integer f;
            mpz_fdiv_q(f.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
            for (size_t j = 0; j < ncols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    IMat out;
    for (size_t i = 0; i < r; ++i) {
        IVec v(ncols);
        for (size_t j = 0; j < ncols; ++j) v[j] = to_ll(a[i][j]);
        out.push_back(v);
    }
    return out;
}

SmithForm smith_form(const IMat& mat, size_t ncols) {
    ZMat a = to_z(mat, ncols);
    size_t m = a.size(), n = ncols;
    SmithForm out;
    out.rows = m;
    out.cols = n;
    size_t t = 0;
    while (t < m && t < n) {
        // pivot: smallest nonzero absolute value in the remaining block
        size_t pr = m, pc = n;
        for (size_t i = t; i < m; ++i)
            for (size_t j = t; j < n; ++j)
                if (a[i][j] != 0 && (pr == m || abs(a[i][j]) < abs(a[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
        if (pr == m) break;
        std::swap(a[t], a[pr]);
        for (auto& row : a) std::swap(row[t], row[pc]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = t + 1; i < m; ++i) {
                if (a[i][t] == 0) continue;
                Integer f;
                mpz_fdiv_q(f.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                for (size_t j = t; j < n; ++j) a[i][j] -= f * a[t][j];
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (size_t j = t + 1; j < n; ++j) {
                if (a[t][j] == 0) continue;
                Integer f;
                mpz_fdiv_q(f.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                for (size_t i = t; i < m; ++i) a[i][j] -= f * a[i][t];
                if (a[t][j] != 0) {
                    for (auto& row : a) std::swap(row[t], row[j]);
                    clean = false;
                }
            }
            if (!clean) continue;
            // divisibility: every remaining entry must be a multiple of the pivot
            for (size_t i = t + 1; i < m && clean; ++i)
                for (size_t j = t + 1; j < n; ++j) {
                    if (a[i][j] % a[t][t] != 0) {
                        for (size_t c = t; c < n; ++c) a[t][c] += a[i][c];
                        clean = false;
                        break;
                    }
                }
        }
        out.diagonal.push_back(abs(a[t][t]));
        ++t;
    }
    return out;
}

}  // namespace sph
