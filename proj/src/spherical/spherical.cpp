#include "sph/spherical.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "sph/linalg.hpp"
#include "sph/linsys.hpp"

namespace sph {

ColoredCone::ColoredCone(Cone c, std::vector<std::string> f) : cone(std::move(c)), colors(std::move(f)) {
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
}

std::string ColoredCone::to_string() const {
    std::string s = "(" + cone.to_string() + ", {";
    for (size_t i = 0; i < colors.size(); ++i) s += (i ? "," : "") + colors[i];
    return s + "})";
}

const Color& SphericalDatum::color(const std::string& label) const {
    for (const auto& c : colors)
        if (c.label == label) return c;
    throw input_error("unknown color '" + label + "'");
}

std::vector<QVec> SphericalDatum::color_images(const std::vector<std::string>& labels) const {
    std::vector<QVec> out;
    for (const auto& l : labels) out.push_back(to_q(color(l).rho));
    return out;
}

std::vector<QVec> SphericalDatum::all_color_images() const {
    std::vector<QVec> out;
    for (const auto& c : colors) out.push_back(to_q(c.rho));
    return out;
}

namespace {

// every generator of the cone, lineality in both directions
std::vector<QVec> all_generators(const Cone& c) { return c.generators(); }

void require_ambient(const SphericalDatum& d, const Cone& c, const char* what) {
    if (c.ambient_dim() != d.rank())
        throw input_error(std::string(what) + " lives in dimension " + std::to_string(c.ambient_dim()) +
                          ", expected the rank " + std::to_string(d.rank()));
}

std::vector<std::vector<size_t>> proper_subsets(size_t k) {
    std::vector<std::vector<size_t>> out;
    if (k == 0) return out;
    for (unsigned long mask = 0; mask + 1 < (1ul << k); ++mask) {
        std::vector<size_t> s;
        for (size_t i = 0; i < k; ++i)
            if (mask & (1ul << i)) s.push_back(i);
        out.push_back(s);
    }
    return out;
}

QMat inverse(const QMat& m) {
    size_t n = m.size();
    QMat a = m;
    for (size_t i = 0; i < n; ++i) {
        a[i].resize(2 * n, Rational(0));
        a[i][n + i] = 1;
    }
    auto piv = rref(a, 2 * n);
    if (piv.size() < n || piv[n - 1] >= n) throw input_error("little Weyl group generator is not invertible");
    QMat inv(n, QVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

QVec apply_rows(const QMat& rows, const QVec& v) {
    QVec out;
    for (const auto& r : rows) out.push_back(dot(r, v));
    return out;
}

// closure of v under the generated group, capped
std::set<QVec> group_orbit(const std::vector<QMat>& gens, const QVec& v) {
    std::set<QVec> seen{v};
    std::deque<QVec> queue{v};
    while (!queue.empty()) {
        QVec w = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            QVec u = apply_rows(g, w);
            if (seen.insert(u).second) {
                if (seen.size() > 5000) throw input_error("little Weyl group generators do not generate a finite group");
                queue.push_back(u);
            }
        }
    }
    return seen;
}

}  // namespace

void check_datum(const SphericalDatum& d) {
    size_t r = d.rank(), m = d.group.rank();
    if (d.lattice_map.target_rank() != m)
        throw input_error("lattice_map has " + std::to_string(d.lattice_map.target_rank()) +
                          " rows but the group lattice has rank " + std::to_string(m));
    if (!d.lattice_map.injective()) throw input_error("lattice_map is not injective");
    require_ambient(d, d.valuation_cone, "valuation_cone");
    for (const auto& c : d.colors)
        if (c.rho.size() != r) throw input_error("color '" + c.label + "' has the wrong length");
    std::set<std::string> labels;
    for (const auto& c : d.colors)
        if (!labels.insert(c.label).second) throw input_error("duplicate color label '" + c.label + "'");
    for (size_t i : d.levi_roots)
        if (i >= d.group.semisimple_rank()) throw input_error("levi_roots index out of range");
    for (const auto& g : d.spherical_roots) {
        if (g.size() != r) throw input_error("spherical root has the wrong length");
        for (const auto& v : d.valuation_cone.rays())
            if (dot(to_q(g), v) > 0)
                throw input_error("spherical root " + to_string(g) + " is positive on the valuation cone");
        for (const auto& v : d.valuation_cone.lineality())
            if (dot(to_q(g), v) != 0)
                throw input_error("spherical root " + to_string(g) + " is not constant on the valuation cone");
    }
    if (!d.valuation_cone.contains(antidominant_image(d)))
        throw input_error("valuation cone does not contain the image of the antidominant chamber");
    if (d.colored_cone) {
        require_ambient(d, d.colored_cone->cone, "colored_cone");
        for (const auto& l : d.colored_cone->colors) d.color(l);
    }
    if (!d.little_weyl.empty()) {
        std::vector<QMat> gens;
        for (const auto& g : d.little_weyl) {
            if (g.size() != r) throw input_error("little Weyl generator has the wrong size");
            for (const auto& row : g)
                if (row.size() != r) throw input_error("little Weyl generator has the wrong size");
            gens.push_back(to_q(g));
        }
        // every sampled point has an orbit point in V
        Cone box = Cone::full(r);
        for (const auto& p : lattice_points(box, 2)) {
            auto orb = group_orbit(gens, to_q(p));
            bool hit = false;
            for (const auto& w : orb) hit = hit || d.valuation_cone.contains(w);
            if (!hit) throw input_error("valuation cone is not a fundamental domain: orbit of " + to_string(p) + " misses it");
        }
    }
}

Verdict validate_colored_cone(const SphericalDatum& d, const ColoredCone& cc) {
    require_ambient(d, cc.cone, "colored cone");
    std::vector<QVec> rf = d.color_images(cc.colors);
    const Cone& c = cc.cone;
    if (!c.is_strictly_convex()) return {false, "condition (i): the cone contains a line"};
    std::vector<QVec> gens = rf;
    Cone cv = c.intersect(d.valuation_cone);
    for (const auto& g : all_generators(cv)) gens.push_back(g);
    if (Cone(d.rank(), gens) != c)
        return {false, "condition (i): the cone is not generated by the colors in F and elements of V"};

    // (ii) some x = sum c_i r_i with every c_i > 0 lies in V
    const auto& rays = c.rays();
    size_t k = rays.size();
    if (k > 0) {
        LinearSystem sys(k);
        for (size_t i = 0; i < k; ++i) {
            QVec e(k, Rational(0));
            e[i] = 1;
            sys.add(e, Rel::Gt);
        }
        auto pull = [&](const QVec& f) {
            QVec row;
            for (const auto& r : rays) row.push_back(dot(f, r));
            return row;
        };
        for (const auto& f : d.valuation_cone.facets()) sys.add(pull(f), Rel::Ge);
        for (const auto& e : d.valuation_cone.equations()) sys.add(pull(e), Rel::Eq);
        if (!feasible(sys)) return {false, "condition (ii): the relative interior does not meet V"};
    }
    for (size_t i = 0; i < rf.size(); ++i)
        if (is_zero(rf[i])) return {false, "condition (iii): color '" + cc.colors[i] + "' has rho = 0"};
    return {true, "valid"};
}

AffineVerdict is_affine(const SphericalDatum& d, const ColoredCone& cc) {
    Verdict v = validate_colored_cone(d, cc);
    if (!v.ok) throw input_error("invalid colored cone: " + v.diagnostic);
    size_t r = d.rank();
    LinearSystem sys(r);
    for (const auto& g : d.valuation_cone.rays()) sys.add(g, Rel::Ge);
    for (const auto& g : d.valuation_cone.lineality()) sys.add(g, Rel::Eq);
    for (const auto& g : cc.cone.rays()) sys.add(g, Rel::Eq);
    for (const auto& col : d.colors)
        if (!std::binary_search(cc.colors.begin(), cc.colors.end(), col.label)) sys.add(to_q(col.rho), Rel::Lt);
    auto w = feasible(sys);
    if (!w) return {false, {}};
    // all conditions are homogeneous, so a positive multiple is a witness too
    return {true, to_i(primitive(*w))};
}

ColoredCone affine_closure_data(const SphericalDatum& d) {
    size_t r = d.rank();
    std::vector<QVec> rd = d.all_color_images();
    for (size_t i = 0; i < rd.size(); ++i)
        if (is_zero(rd[i])) throw Error(ErrorKind::NotQuasiAffine, "color '" + d.colors[i].label + "' has rho = 0");
    if (!Cone(r, rd).is_strictly_convex())
        throw Error(ErrorKind::NotQuasiAffine, "the colors do not span a strictly convex cone");
    std::vector<QVec> ineqs = d.valuation_cone.rays();
    for (const auto& x : rd) ineqs.push_back(neg(x));
    Cone R = Cone::from_hrep(r, ineqs, d.valuation_cone.lineality());
    QVec chi = R.interior_point();
    std::vector<std::string> f;
    for (const auto& c : d.colors)
        if (dot(chi, to_q(c.rho)) == 0) f.push_back(c.label);
    ColoredCone cc(Cone(r, d.color_images(f)), f);
    Verdict v = validate_colored_cone(d, cc);
    if (!v.ok) throw input_error("affine closure data failed validation: " + v.diagnostic);
    return cc;
}

Cone antidominant_image(const SphericalDatum& d) {
    size_t m = d.group.rank();
    std::vector<QVec> ineqs;
    for (const auto& a : d.group.simple_roots()) ineqs.push_back(neg(to_q(a)));
    Cone anti = Cone::from_hrep(m, ineqs);
    return anti.image(d.lattice_map.dual_rows());
}

bool is_wavefront(const SphericalDatum& d) { return antidominant_image(d) == d.valuation_cone; }

Integer arithmetic_multiplicity(const SphericalDatum& d) { return d.lattice_map.torsion_order(); }

IMat enumerate_orbits(const SphericalDatum& d, int height, bool integral_only) {
    if (height < 0) throw input_error("height must be nonnegative");
    if (!integral_only) return lattice_points(d.valuation_cone, height);
    if (!d.colored_cone) throw input_error("integral orbits need a colored cone");
    return lattice_points(d.valuation_cone.intersect(d.colored_cone->cone), height);
}

std::vector<size_t> support(const RootDatum& rd, const IMat& weights) {
    QMat cols;
    for (const auto& a : rd.simple_roots()) cols.push_back(to_q(a));
    std::set<size_t> s;
    for (const auto& w : weights) {
        if (w.size() != rd.rank()) throw input_error("weight has wrong length");
        if (std::all_of(w.begin(), w.end(), [](long long x) { return x == 0; })) continue;
        auto c = cols.empty() ? std::nullopt : solve_combination(cols, to_q(w));
        if (!c) throw input_error("weight " + to_string(w) + " is outside the root span");
        for (size_t i = 0; i < c->size(); ++i)
            if ((*c)[i] != 0) s.insert(i);
    }
    return {s.begin(), s.end()};
}

namespace {

IMat spherical_roots_in_group(const SphericalDatum& d) {
    IMat out;
    for (const auto& g : d.spherical_roots) out.push_back(d.lattice_map.apply(g));
    return out;
}

}  // namespace

std::optional<std::vector<size_t>> parabolic_induction(const SphericalDatum& d) {
    std::set<size_t> s(d.levi_roots.begin(), d.levi_roots.end());
    for (size_t i : support(d.group, spherical_roots_in_group(d))) s.insert(i);
    if (s.size() == d.group.semisimple_rank()) return std::nullopt;
    return std::vector<size_t>(s.begin(), s.end());
}

NegligibleReport negligible_orbit_check(const SphericalDatum& d) {
    if (!is_wavefront(d)) throw Error(ErrorKind::HypothesisNotMet, "datum is not wavefront");
    // the lineality of V must meet the span of the coroot images trivially
    QMat lin = d.valuation_cone.lineality();
    QMat cor;
    for (const auto& c : d.group.simple_coroots()) cor.push_back(d.lattice_map.apply_dual(to_q(c)));
    QMat both = lin;
    both.insert(both.end(), cor.begin(), cor.end());
    size_t r = d.rank();
    size_t meet = rank(lin, r) + rank(cor, r) - rank(both, r);
    if (meet != 0)
        throw Error(ErrorKind::HypothesisNotMet,
                    "valuation cone has lineality along the semisimple part (automorphism group not finite)");

    NegligibleReport rep;
    rep.holds = true;
    IMat roots = spherical_roots_in_group(d);
    std::set<size_t> levi(d.levi_roots.begin(), d.levi_roots.end());
    for (const auto& theta : proper_subsets(roots.size())) {
        IMat sub;
        for (size_t i : theta) sub.push_back(roots[i]);
        auto supp = support(d.group, sub);
        std::optional<size_t> witness;
        for (size_t a = 0; a < d.group.semisimple_rank() && !witness; ++a)
            if (!levi.count(a) && !std::binary_search(supp.begin(), supp.end(), a)) witness = a;
        if (!witness) rep.holds = false;
        rep.certificate.emplace_back(theta, witness);
    }
    return rep;
}

AutLineality aut_lineality(const SphericalDatum& d) {
    AutLineality out;
    const QMat& lin = d.valuation_cone.lineality();
    out.rank = lin.size();
    if (d.colored_cone) {
        std::vector<QVec> gens;
        for (const auto& l : lin) {
            gens.push_back(l);
            gens.push_back(neg(l));
        }
        out.x_positive_cone = Cone(d.rank(), gens).intersect(d.colored_cone->cone);
    }
    return out;
}

std::optional<size_t> geometric_multiplicity(const SphericalDatum& d) {
    if (d.little_weyl.empty()) return std::nullopt;
    size_t r = d.rank();
    // dual action on characters: inverse transpose
    std::vector<QMat> dual;
    for (const auto& g : d.little_weyl) {
        QMat inv = inverse(to_q(g));
        QMat t(r, QVec(r));
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < r; ++j) t[i][j] = inv[j][i];
        dual.push_back(t);
    }
    IVec chi(r);
    for (size_t j = 0; j < r; ++j) chi[j] = 17 + 31 * static_cast<long long>(j) + 7 * static_cast<long long>(j * j);
    IVec image = d.lattice_map.apply(chi);
    QMat cols;
    for (size_t j = 0; j < r; ++j) cols.push_back(to_q(d.lattice_map.column(j)));
    std::set<QVec> fiber;
    for (const auto& w : weyl_orbit(d.group, image)) {
        auto x = solve_combination(cols, to_q(w));
        if (x && is_integral(*x)) fiber.insert(*x);
    }
    size_t orbits = 0;
    while (!fiber.empty()) {
        QVec v = *fiber.begin();
        for (const auto& u : group_orbit(dual, v)) fiber.erase(u);
        ++orbits;
    }
    return orbits;
}

}  // namespace sph
