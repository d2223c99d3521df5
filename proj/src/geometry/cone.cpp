#include "sph/cone.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "sph/linalg.hpp"

namespace sph {

namespace {

void check_dims(size_t n, const std::vector<QVec>& vs) {
    for (const auto& v : vs)
        if (v.size() != n) throw input_error("dimension mismatch among cone generators");
}

// rays modulo a subspace: orthogonal representative, primitive, deduplicated
std::vector<QVec> canonical_rays(const std::vector<QVec>& rays, const QMat& lin) {
    std::set<QVec> seen;
    for (const auto& r : rays) {
        QVec v = primitive(orthogonal_part(r, lin));
        if (!is_zero(v)) seen.insert(v);
    }
    return {seen.begin(), seen.end()};
}

}  // namespace

VRep double_description(size_t n, const std::vector<QVec>& ineqs) {
    check_dims(n, ineqs);
    VRep cur;
    for (size_t i = 0; i < n; ++i) {
        QVec e(n, Rational(0));
        e[i] = 1;
        cur.lineality.push_back(e);
    }
    std::vector<QVec> done;
    for (const auto& a : ineqs) {
        if (is_zero(a)) continue;
        size_t piv = cur.lineality.size();
        for (size_t i = 0; i < cur.lineality.size(); ++i)
            if (dot(a, cur.lineality[i]) != 0) {
                piv = i;
                break;
            }
        if (piv < cur.lineality.size()) {
            QVec l0 = cur.lineality[piv];
            Rational s0 = dot(a, l0);
            if (s0 < 0) {
                l0 = neg(l0);
                s0 = -s0;
            }
            std::vector<QVec> lin, rays;
            for (size_t i = 0; i < cur.lineality.size(); ++i) {
                if (i == piv) continue;
                const auto& l = cur.lineality[i];
                lin.push_back(primitive(sub(l, scale(l0, dot(a, l) / s0))));
            }
            for (const auto& r : cur.rays) rays.push_back(primitive(sub(r, scale(l0, dot(a, r) / s0))));
            rays.push_back(primitive(l0));
            cur.lineality = std::move(lin);
            cur.rays = std::move(rays);
        } else {
            std::vector<Rational> s;
            s.reserve(cur.rays.size());
            for (const auto& r : cur.rays) s.push_back(dot(a, r));
            // zero sets against already processed constraints
            std::vector<std::vector<char>> z(cur.rays.size(), std::vector<char>(done.size()));
            for (size_t i = 0; i < cur.rays.size(); ++i)
                for (size_t j = 0; j < done.size(); ++j) z[i][j] = dot(done[j], cur.rays[i]) == 0;
            std::vector<QVec> next;
            for (size_t i = 0; i < cur.rays.size(); ++i)
                if (s[i] >= 0) next.push_back(cur.rays[i]);
            for (size_t p = 0; p < cur.rays.size(); ++p) {
                if (s[p] <= 0) continue;
                for (size_t m = 0; m < cur.rays.size(); ++m) {
                    if (s[m] >= 0) continue;
                    std::vector<char> common(done.size());
                    for (size_t j = 0; j < done.size(); ++j) common[j] = z[p][j] && z[m][j];
                    bool adjacent = true;
                    for (size_t r = 0; r < cur.rays.size() && adjacent; ++r) {
                        if (r == p || r == m) continue;
                        bool covers = true;
                        for (size_t j = 0; j < done.size(); ++j)
                            if (common[j] && !z[r][j]) {
                                covers = false;
                                break;
                            }
                        if (covers) adjacent = false;
                    }
                    if (!adjacent) continue;
                    QVec v = add(scale(cur.rays[m], s[p]), scale(cur.rays[p], -s[m]));
                    next.push_back(primitive(v));
                }
            }
            cur.rays = std::move(next);
        }
        done.push_back(a);
    }
    return cur;
}

Cone::Cone(size_t ambient_dim, const IMat& generators) : Cone(ambient_dim, to_q(generators)) {}

Cone::Cone(size_t ambient_dim, const std::vector<QVec>& generators) : n_(ambient_dim) {
    check_dims(n_, generators);
    std::vector<QVec> gens;
    for (const auto& g : generators)
        if (!sph::is_zero(g)) gens.push_back(primitive(g));
    VRep d = double_description(n_, gens);
    equations_ = canonical_basis(d.lineality, n_);
    facets_ = canonical_rays(d.rays, equations_);
    std::vector<QVec> h(facets_);
    for (const auto& e : equations_) {
        h.push_back(e);
        h.push_back(neg(e));
    }
    VRep p = double_description(n_, h);
    lineality_ = canonical_basis(p.lineality, n_);
    rays_ = canonical_rays(p.rays, lineality_);
}

Cone Cone::from_hrep(size_t ambient_dim, const std::vector<QVec>& ineqs, const std::vector<QVec>& eqs) {
    std::vector<QVec> h(ineqs);
    for (const auto& e : eqs) {
        h.push_back(e);
        h.push_back(neg(e));
    }
    VRep v = double_description(ambient_dim, h);
    std::vector<QVec> gens(v.rays);
    for (const auto& l : v.lineality) {
        gens.push_back(l);
        gens.push_back(neg(l));
    }
    return Cone(ambient_dim, gens);
}

Cone Cone::full(size_t ambient_dim) { return from_hrep(ambient_dim, {}); }

std::vector<QVec> Cone::generators() const {
    std::vector<QVec> g(rays_);
    for (const auto& l : lineality_) {
        g.push_back(l);
        g.push_back(neg(l));
    }
    return g;
}

bool Cone::contains(const QVec& v) const {
    if (v.size() != n_) throw input_error("dimension mismatch in cone membership");
    for (const auto& e : equations_)
        if (dot(e, v) != 0) return false;
    for (const auto& f : facets_)
        if (dot(f, v) < 0) return false;
    return true;
}

bool Cone::contains(const Cone& other) const {
    for (const auto& g : other.generators())
        if (!contains(g)) return false;
    return true;
}

bool Cone::relint_contains(const QVec& v) const {
    if (v.size() != n_) throw input_error("dimension mismatch in cone membership");
    for (const auto& e : equations_)
        if (dot(e, v) != 0) return false;
    for (const auto& f : facets_)
        if (dot(f, v) <= 0) return false;
    return true;
}

Cone Cone::dual() const {
    std::vector<QVec> g(facets_);
    for (const auto& e : equations_) {
        g.push_back(e);
        g.push_back(neg(e));
    }
    return Cone(n_, g);
}

Cone Cone::intersect(const Cone& other) const {
    if (other.n_ != n_) throw input_error("dimension mismatch in cone intersection");
    std::vector<QVec> ineqs(facets_), eqs(equations_);
    ineqs.insert(ineqs.end(), other.facets_.begin(), other.facets_.end());
    eqs.insert(eqs.end(), other.equations_.begin(), other.equations_.end());
    return from_hrep(n_, ineqs, eqs);
}

Cone Cone::image(const QMat& rows) const {
    std::vector<QVec> g;
    for (const auto& v : generators()) {
        QVec w;
        for (const auto& r : rows) w.push_back(dot(r, v));
        g.push_back(w);
    }
    return Cone(rows.size(), g);
}

QVec Cone::interior_point() const {
    QVec s(n_, Rational(0));
    for (const auto& r : rays_) s = add(s, r);
    return s;
}

std::string Cone::to_string() const {
    std::ostringstream os;
    os << "cone[";
    bool first = true;
    for (const auto& r : rays_) {
        os << (first ? "" : " ") << sph::to_string(r);
        first = false;
    }
    for (const auto& l : lineality_) {
        os << (first ? "" : " ") << "+-" << sph::to_string(l);
        first = false;
    }
    os << "]";
    return os.str();
}

IMat lattice_points(const Cone& c, int height) {
    size_t n = c.ambient_dim();
    IMat out;
    if (height < 0) return out;
    IMat facets, eqs;
    for (const auto& f : c.facets()) facets.push_back(to_i(f));
    for (const auto& e : c.equations()) eqs.push_back(to_i(e));
    IVec v(n, 0);
    std::function<void(size_t, int)> rec = [&](size_t i, int budget) {
        if (i == n) {
            for (const auto& e : eqs)
                if (dot(e, v) != 0) return;
            for (const auto& f : facets)
                if (dot(f, v) < 0) return;
            out.push_back(v);
            return;
        }
        for (int x = -budget; x <= budget; ++x) {
            v[i] = x;
            rec(i + 1, budget - std::abs(x));
        }
        v[i] = 0;
    };
    rec(0, height);
    std::sort(out.begin(), out.end());
    return out;
}

IMat hilbert_basis(const Cone& c) {
    size_t n = c.ambient_dim();
    if (!c.is_strictly_convex() || c.dim() != n)
        throw input_error("hilbert basis needs a full-dimensional pointed cone");
    long long bound = 0;
    for (const auto& r : c.rays())
        for (const auto& x : r) bound += std::abs(to_ll(x));
    QVec w(n, Rational(0));
    for (const auto& f : c.facets()) w = add(w, f);
    IVec wi = to_i(clear_denominators(w));
    IMat cand = lattice_points(c, static_cast<int>(bound));
    std::stable_sort(cand.begin(), cand.end(),
                     [&](const IVec& a, const IVec& b) { return dot(wi, a) < dot(wi, b); });
    IMat basis;
    for (const auto& x : cand) {
        if (dot(wi, x) == 0) continue;
        bool reducible = false;
        for (const auto& h : basis) {
            IVec d(n);
            for (size_t i = 0; i < n; ++i) d[i] = x[i] - h[i];
            if (c.contains(to_q(d))) {
                reducible = true;
                break;
            }
        }
        if (!reducible) basis.push_back(x);
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

}  // namespace sph
