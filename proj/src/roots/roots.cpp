#include "sph/roots.hpp"

#include <deque>
#include <map>
#include <regex>
#include <set>

#include "sph/linalg.hpp"

namespace sph {

namespace {

constexpr size_t kMaxRoots = 400;

IVec combine(const IMat& basis, const IVec& coef, size_t n) {
    IVec v(n, 0);
    for (size_t j = 0; j < coef.size(); ++j)
        for (size_t k = 0; k < n; ++k) v[k] += coef[j] * basis[j][k];
    return v;
}

IMat cartan_of(const std::string& type, int n) {
    IMat a(n, IVec(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto link = [&](int i, int j, int aij, int aji) {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    if (type == "A") {
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
    } else if (type == "B" || type == "C") {
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
        if (n >= 2) {
            // B: last root short, so <a_{n-1}, a_n^> = -2
            if (type == "B") link(n - 2, n - 1, -2, -1);
            else link(n - 2, n - 1, -1, -2);
        }
    } else if (type == "D") {
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
        link(n - 3, n - 1, -1, -1);
    } else if (type == "G") {
        // a_1 short
        link(0, 1, -1, -3);
    }
    return a;
}

// Simply connected datum in fundamental weight coordinates.
RootDatum simply_connected(const std::string& name, const std::string& type, int n) {
    IMat a = cartan_of(type, n);
    IMat coroots(n, IVec(n, 0));
    for (int i = 0; i < n; ++i) coroots[i][i] = 1;
    return RootDatum(name, n, a, coroots);
}

RootDatum torus(const std::string& name, int n) { return RootDatum(name, n, {}, {}); }

RootDatum single(const std::string& label) {
    static const std::regex re("^(GL|SL|PGL|GSp|Sp|A|B|C|D|G|T)([0-9]+)$");
    std::smatch m;
    if (!std::regex_match(label, m, re)) throw input_error("unknown group label '" + label + "'");
    std::string t = m[1];
    int k = std::stoi(m[2]);
    if (k < 1) throw input_error("group label '" + label + "' must have rank at least 1");
    if (t == "T") return torus(label, k);
    if (t == "GL") {
        IMat r;
        for (int i = 0; i + 1 < k; ++i) {
            IVec v(k, 0);
            v[i] = 1;
            v[i + 1] = -1;
            r.push_back(v);
        }
        return RootDatum(label, k, r, r);
    }
    if (t == "SL" || t == "A") {
        int n = t == "SL" ? k - 1 : k;
        if (n < 1) throw input_error("'" + label + "' has no semisimple part");
        return simply_connected(label, "A", n);
    }
    if (t == "PGL") {
        if (k < 2) throw input_error("'" + label + "' has no semisimple part");
        int n = k - 1;
        IMat a = cartan_of("A", n);
        IMat roots(n, IVec(n, 0));
        for (int i = 0; i < n; ++i) roots[i][i] = 1;
        // <e_i, a_j^> = A_ij, so a_j^ is column j of A
        IMat coroots(n, IVec(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) coroots[j][i] = a[i][j];
        return RootDatum(label, n, roots, coroots);
    }
    if (t == "Sp" || t == "GSp") {
        if (k % 2 != 0) throw input_error("'" + label + "' needs an even index");
        int n = k / 2;
        if (t == "Sp") return simply_connected(label, "C", n);
        // Z^{n+1} with coordinates (e_1..e_n, e_0); the similitude is e_0
        IMat roots, coroots;
        for (int i = 0; i + 1 < n; ++i) {
            IVec v(n + 1, 0);
            v[i] = 1;
            v[i + 1] = -1;
            roots.push_back(v);
            coroots.push_back(v);
        }
        IVec ln(n + 1, 0), lc(n + 1, 0);
        ln[n - 1] = 2;
        ln[n] = -1;
        lc[n - 1] = 1;
        roots.push_back(ln);
        coroots.push_back(lc);
        return RootDatum(label, n + 1, roots, coroots);
    }
    if (t == "B" || t == "C") return simply_connected(label, t, k);
    if (t == "D") {
        if (k < 3) throw input_error("D_n needs n >= 3");
        return simply_connected(label, t, k);
    }
    if (t == "G") {
        if (k != 2) throw input_error("only G2 is supported among exceptional types");
        return simply_connected(label, "G", 2);
    }
    throw input_error("unknown group label '" + label + "'");
}

}  // namespace

RootDatum::RootDatum(std::string name, size_t rank, IMat simple_roots, IMat simple_coroots)
    : name_(std::move(name)), n_(rank), roots_(std::move(simple_roots)), coroots_(std::move(simple_coroots)) {
    size_t r = roots_.size();
    if (coroots_.size() != r) throw input_error("root datum: simple roots and coroots differ in number");
    for (size_t i = 0; i < r; ++i)
        if (roots_[i].size() != n_ || coroots_[i].size() != n_)
            throw input_error("root datum: vectors must have length equal to the lattice rank");
    cartan_.assign(r, IVec(r, 0));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) cartan_[i][j] = dot(roots_[i], coroots_[j]);
    for (size_t i = 0; i < r; ++i) {
        if (cartan_[i][i] != 2) throw input_error("root datum: <a_i, a_i^> must be 2");
        for (size_t j = 0; j < r; ++j) {
            if (i == j) continue;
            if (cartan_[i][j] > 0) throw input_error("root datum: positive off-diagonal Cartan entry");
            if ((cartan_[i][j] == 0) != (cartan_[j][i] == 0))
                throw input_error("root datum: Cartan matrix is not a generalized Cartan matrix");
        }
    }
    if (r > 0 && sph::rank(to_q(roots_), n_) != r) throw input_error("root datum: simple roots are linearly dependent");

    // positive roots by closing the simple ones under simple reflections,
    // tracking (root, coroot) coefficient pairs
    std::set<std::pair<IVec, IVec>> seen;
    std::deque<std::pair<IVec, IVec>> queue;
    for (size_t i = 0; i < r; ++i) {
        IVec e(r, 0);
        e[i] = 1;
        seen.insert({e, e});
        queue.push_back({e, e});
    }
    while (!queue.empty()) {
        auto [c, d] = queue.front();
        queue.pop_front();
        for (size_t i = 0; i < r; ++i) {
            long long ci = 0, di = 0;
            for (size_t j = 0; j < r; ++j) {
                ci += c[j] * cartan_[j][i];
                di += d[j] * cartan_[i][j];
            }
            IVec c2 = c, d2 = d;
            c2[i] -= ci;
            d2[i] -= di;
            bool positive = true;
            for (auto x : c2) positive = positive && x >= 0;
            if (!positive) continue;
            if (seen.insert({c2, d2}).second) {
                if (seen.size() > kMaxRoots) throw input_error("root datum: Cartan matrix is not of finite type");
                queue.push_back({c2, d2});
            }
        }
    }
    // order by height, then coefficients
    std::vector<std::tuple<long long, IVec, IVec>> sorted;
    for (const auto& [c, d] : seen) {
        long long h = 0;
        for (auto x : c) h += x;
        sorted.emplace_back(h, c, d);
    }
    std::sort(sorted.begin(), sorted.end());
    rho_.assign(n_, Rational(0));
    rho_check_.assign(n_, Rational(0));
    for (const auto& [h, c, d] : sorted) {
        root_coef_.push_back(c);
        pos_roots_.push_back(combine(roots_, c, n_));
        pos_coroots_.push_back(combine(coroots_, d, n_));
        rho_ = add(rho_, scale(to_q(pos_roots_.back()), Rational(1, 2)));
        rho_check_ = add(rho_check_, scale(to_q(pos_coroots_.back()), Rational(1, 2)));
    }
}

IVec RootDatum::reflect(size_t i, const IVec& w) const {
    long long c = dot(w, coroots_[i]);
    IVec out = w;
    for (size_t k = 0; k < n_; ++k) out[k] -= c * roots_[i][k];
    return out;
}

IVec RootDatum::reflect_coweight(size_t i, const IVec& v) const {
    long long c = dot(roots_[i], v);
    IVec out = v;
    for (size_t k = 0; k < n_; ++k) out[k] -= c * coroots_[i][k];
    return out;
}

IMat RootDatum::reflection_matrix(size_t i) const {
    IMat m(n_, IVec(n_, 0));
    for (size_t k = 0; k < n_; ++k) {
        IVec e(n_, 0);
        e[k] = 1;
        IVec img = reflect(i, e);
        for (size_t j = 0; j < n_; ++j) m[j][k] = img[j];
    }
    return m;
}

bool RootDatum::is_dominant(const IVec& w) const {
    for (const auto& c : coroots_)
        if (dot(w, c) < 0) return false;
    return true;
}

IVec RootDatum::dominant_rep(const IVec& w) const {
    IVec v = w;
    for (bool moved = true; moved;) {
        moved = false;
        for (size_t i = 0; i < roots_.size(); ++i)
            if (dot(v, coroots_[i]) < 0) {
                v = reflect(i, v);
                moved = true;
            }
    }
    return v;
}

IVec RootDatum::dominant_coweight_rep(const IVec& c) const {
    IVec v = c;
    for (bool moved = true; moved;) {
        moved = false;
        for (size_t i = 0; i < roots_.size(); ++i)
            if (dot(roots_[i], v) < 0) {
                v = reflect_coweight(i, v);
                moved = true;
            }
    }
    return v;
}

long long RootDatum::height(const IVec& w) const {
    long long h = 0;
    for (const auto& c : pos_coroots_) h += dot(w, c);
    return h;
}

size_t RootDatum::weyl_order() const {
    IVec two_rho(n_, 0);
    for (const auto& a : pos_roots_)
        for (size_t k = 0; k < n_; ++k) two_rho[k] += a[k];
    return weyl_orbit(*this, two_rho).size();
}

RootDatum RootDatum::levi(const std::vector<size_t>& simple) const {
    IMat r, c;
    for (size_t i : simple) {
        if (i >= roots_.size()) throw input_error("Levi index out of range");
        r.push_back(roots_[i]);
        c.push_back(coroots_[i]);
    }
    return RootDatum(name_ + "_M", n_, r, c);
}

RootDatum RootDatum::dual() const { return RootDatum(name_ + "^", n_, coroots_, roots_); }

RootDatum product(const RootDatum& a, const RootDatum& b) {
    size_t n = a.rank() + b.rank();
    IMat r, c;
    auto pad = [&](const IVec& v, size_t off) {
        IVec out(n, 0);
        for (size_t k = 0; k < v.size(); ++k) out[off + k] = v[k];
        return out;
    };
    for (size_t i = 0; i < a.semisimple_rank(); ++i) {
        r.push_back(pad(a.simple_roots()[i], 0));
        c.push_back(pad(a.simple_coroots()[i], 0));
    }
    for (size_t i = 0; i < b.semisimple_rank(); ++i) {
        r.push_back(pad(b.simple_roots()[i], a.rank()));
        c.push_back(pad(b.simple_coroots()[i], a.rank()));
    }
    return RootDatum(a.name() + "x" + b.name(), n, r, c);
}

RootDatum build_root_datum(const std::string& label) {
    if (label.empty()) throw input_error("empty group label");
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        size_t x = label.find('x', start);
        parts.push_back(label.substr(start, x - start));
        if (x == std::string::npos) break;
        start = x + 1;
    }
    RootDatum rd = single(parts[0]);
    for (size_t i = 1; i < parts.size(); ++i) rd = product(rd, single(parts[i]));
    return RootDatum(label, rd.rank(), rd.simple_roots(), rd.simple_coroots());
}

namespace {

template <class Step>
std::vector<IVec> orbit(const IVec& v, size_t gens, Step step) {
    std::set<IVec> seen{v};
    std::deque<IVec> queue{v};
    while (!queue.empty()) {
        IVec w = queue.front();
        queue.pop_front();
        for (size_t i = 0; i < gens; ++i) {
            IVec u = step(i, w);
            if (seen.insert(u).second) queue.push_back(u);
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<IVec> weyl_orbit(const RootDatum& rd, const IVec& weight) {
    if (weight.size() != rd.rank()) throw input_error("weight has wrong length");
    return orbit(weight, rd.semisimple_rank(), [&](size_t i, const IVec& w) { return rd.reflect(i, w); });
}

std::vector<IVec> weyl_orbit_coweights(const RootDatum& rd, const IVec& coweight) {
    if (coweight.size() != rd.rank()) throw input_error("coweight has wrong length");
    return orbit(coweight, rd.semisimple_rank(),
                 [&](size_t i, const IVec& w) { return rd.reflect_coweight(i, w); });
}

ParabolicDatum::ParabolicDatum(const RootDatum& parent, std::vector<size_t> levi_simple)
    : parent_(parent), levi_simple_(std::move(levi_simple)) {
    std::sort(levi_simple_.begin(), levi_simple_.end());
    levi_simple_.erase(std::unique(levi_simple_.begin(), levi_simple_.end()), levi_simple_.end());
    levi_ = parent_.levi(levi_simple_);
    size_t n = parent_.rank();
    rho_p_ = sub(parent_.rho(), levi_.rho());

    std::vector<bool> in_levi(parent_.semisimple_rank(), false);
    for (size_t i : levi_simple_) in_levi[i] = true;
    for (size_t k = 0; k < parent_.positive_roots().size(); ++k) {
        const IVec& c = parent_.root_coefficients()[k];
        bool radical = false;
        for (size_t j = 0; j < c.size(); ++j) radical = radical || (c[j] != 0 && !in_levi[j]);
        if (radical) {
            rad_roots_.push_back(parent_.positive_roots()[k]);
            rad_coroots_.push_back(parent_.positive_coroots()[k]);
        }
    }

    if (levi_simple_.empty()) {
        for (size_t i = 0; i < n; ++i) {
            IVec e(n, 0);
            e[i] = 1;
            ab_chars_.push_back(e);
        }
    } else {
        ab_chars_ = integer_kernel(levi_.simple_coroots(), n);
    }

    IVec two_rho_p = to_i(scale(rho_p_, 2));
    QMat cols;
    for (const auto& c : ab_chars_) cols.push_back(to_q(c));
    auto sol = solve_combination(cols, to_q(two_rho_p));
    if (!sol) throw std::logic_error("2 rho_P is not a character of M^ab");
    two_rho_p_coords_ = *sol;
}

std::vector<size_t> ParabolicDatum::radical_simple() const {
    std::vector<size_t> out;
    for (size_t i = 0; i < parent_.semisimple_rank(); ++i)
        if (!std::binary_search(levi_simple_.begin(), levi_simple_.end(), i)) out.push_back(i);
    return out;
}

IVec ParabolicDatum::project(const IVec& v) const {
    IVec out;
    for (const auto& c : ab_chars_) out.push_back(dot(c, v));
    return out;
}

IMat ParabolicDatum::positive_generators() const {
    IMat out;
    for (size_t i : radical_simple()) out.push_back(project(parent_.simple_coroots()[i]));
    return out;
}

Rational ParabolicDatum::rho_p_pairing(const IVec& theta) const {
    if (theta.size() != ab_chars_.size()) throw input_error("Lambda_{G,P} element has wrong length");
    Rational s = 0;
    for (size_t j = 0; j < theta.size(); ++j) s += two_rho_p_coords_[j] * to_q(theta[j]);
    return s / 2;
}

}  // namespace sph
