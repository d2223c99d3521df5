#include "sph/weights.hpp"

#include <deque>
#include <set>

namespace sph {

WeightChar WeightChar::from_weights(size_t n, const IMat& weights) {
    WeightChar c(n);
    for (const auto& w : weights) c.add(w, 1);
    return c;
}

void WeightChar::add(const IVec& w, long long mult) {
    if (w.size() != n_) throw input_error("weight has wrong length for this character");
    if (mult == 0) return;
    long long& slot = m_[w];
    slot += mult;
    if (slot == 0) m_.erase(w);
}

long long WeightChar::dim() const {
    long long d = 0;
    for (const auto& [w, m] : m_) d += m;
    return d;
}

WeightChar WeightChar::operator+(const WeightChar& o) const {
    WeightChar r = *this;
    for (const auto& [w, m] : o.m_) r.add(w, m);
    return r;
}

WeightChar WeightChar::operator-(const WeightChar& o) const {
    WeightChar r = *this;
    for (const auto& [w, m] : o.m_) r.add(w, -m);
    return r;
}

WeightChar WeightChar::operator*(const WeightChar& o) const {
    if (n_ != o.n_) throw input_error("tensor product of characters on different lattices");
    WeightChar r(n_);
    for (const auto& [w1, m1] : m_)
        for (const auto& [w2, m2] : o.m_) {
            IVec w(n_);
            for (size_t k = 0; k < n_; ++k) w[k] = w1[k] + w2[k];
            r.add(w, m1 * m2);
        }
    return r;
}

WeightChar WeightChar::scaled(long long k) const {
    WeightChar r(n_);
    for (const auto& [w, m] : m_) r.add(w, m * k);
    return r;
}

WeightChar WeightChar::adams(long long k) const {
    WeightChar r(n_);
    for (const auto& [w, m] : m_) {
        IVec v = w;
        for (auto& x : v) x *= k;
        r.add(v, m);
    }
    return r;
}

WeightChar WeightChar::mapped(const IMat& rows) const {
    WeightChar r(rows.size());
    for (const auto& [w, m] : m_) {
        IVec v;
        for (const auto& row : rows) v.push_back(dot(row, w));
        r.add(v, m);
    }
    return r;
}

bool WeightChar::is_weyl_invariant(const RootDatum& rd) const {
    for (const auto& [w, m] : m_)
        for (size_t i = 0; i < rd.semisimple_rank(); ++i)
            if ((*this)[rd.reflect(i, w)] != m) return false;
    return true;
}

std::string WeightChar::to_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [w, m] : m_) {
        if (!first) s += ", ";
        first = false;
        s += sph::to_string(w) + ":" + std::to_string(m);
    }
    return s + "}";
}

namespace {

// h_i or e_i from power sums; sign = +1 for h, -1 for e
std::vector<WeightChar> newton(const WeightChar& chi, int d, int sign) {
    if (d < 0) throw input_error("power index must be nonnegative");
    size_t n = chi.lattice_rank();
    std::vector<WeightChar> p(d + 1, WeightChar(n)), out;
    for (int k = 1; k <= d; ++k) p[k] = chi.adams(k);
    out.push_back(WeightChar::unit(n));
    for (int i = 1; i <= d; ++i) {
        WeightChar acc(n);
        for (int k = 1; k <= i; ++k) {
            long long s = (sign < 0 && k % 2 == 0) ? -1 : 1;
            acc = acc + (p[k] * out[i - k]).scaled(s);
        }
        WeightChar hi(n);
        for (const auto& [w, m] : acc.terms()) {
            if (m % i != 0) throw std::logic_error("Newton identity produced a non-integral multiplicity");
            hi.add(w, m / i);
        }
        out.push_back(hi);
    }
    return out;
}

}  // namespace

std::vector<WeightChar> sym_powers(const WeightChar& chi, int d) { return newton(chi, d, +1); }
WeightChar sym_power(const WeightChar& chi, int i) { return newton(chi, i, +1).back(); }
WeightChar ext_power(const WeightChar& chi, int i) { return newton(chi, i, -1).back(); }

namespace {

IVec coroot_pairings(const RootDatum& rd, const IVec& w) {
    IVec p;
    for (const auto& c : rd.positive_coroots()) p.push_back(dot(w, c));
    return p;
}

void require_dominant(const RootDatum& rd, const IVec& lambda) {
    if (lambda.size() != rd.rank()) throw input_error("weight has wrong length");
    if (!rd.is_dominant(lambda)) throw input_error("highest weight " + to_string(lambda) + " is not dominant");
}

}  // namespace

WeightChar irrep_char(const RootDatum& rd, const IVec& lambda) {
    require_dominant(rd, lambda);
    size_t n = rd.rank();
    const IMat& roots = rd.positive_roots();

    // weights: the saturated set generated by lambda (closure under root strings)
    std::set<IVec> weights{lambda};
    std::deque<IVec> queue{lambda};
    while (!queue.empty()) {
        IVec mu = queue.front();
        queue.pop_front();
        for (size_t a = 0; a < roots.size(); ++a) {
            long long k = dot(mu, rd.positive_coroots()[a]);
            long long step = k > 0 ? -1 : 1;
            for (long long t = 1; t <= (k > 0 ? k : -k); ++t) {
                IVec v = mu;
                for (size_t j = 0; j < n; ++j) v[j] += step * t * roots[a][j];
                if (weights.insert(v).second) queue.push_back(v);
            }
        }
    }

    // Freudenthal with B(u,v) = sum over positive coroots <u,c><v,c>, and the
    // shifted vectors P(2x + 2 rho) kept integral
    IVec two_rho(n, 0);
    for (const auto& r : roots)
        for (size_t j = 0; j < n; ++j) two_rho[j] += r[j];
    auto shifted_norm = [&](const IVec& mu) {
        IVec v(n);
        for (size_t j = 0; j < n; ++j) v[j] = 2 * mu[j] + two_rho[j];
        IVec p = coroot_pairings(rd, v);
        long long s = 0;
        for (auto x : p) s += x * x;
        return s;
    };
    std::vector<IVec> root_pairs;
    for (const auto& r : roots) root_pairs.push_back(coroot_pairings(rd, r));

    std::vector<IVec> order(weights.begin(), weights.end());
    std::stable_sort(order.begin(), order.end(),
                     [&](const IVec& x, const IVec& y) { return rd.height(x) > rd.height(y); });
    std::map<IVec, long long> mult;
    long long top = shifted_norm(lambda);
    for (const auto& mu : order) {
        if (mu == lambda) {
            mult[mu] = 1;
            continue;
        }
        long long rhs = 0;
        for (size_t a = 0; a < roots.size(); ++a) {
            IVec v = mu;
            while (true) {
                for (size_t j = 0; j < n; ++j) v[j] += roots[a][j];
                auto it = mult.find(v);
                if (it == mult.end()) {
                    if (!weights.count(v)) break;
                    continue;
                }
                rhs += it->second * dot(coroot_pairings(rd, v), root_pairs[a]);
            }
        }
        long long denom = top - shifted_norm(mu);
        if (denom <= 0 || (8 * rhs) % denom != 0) throw std::logic_error("Freudenthal recursion broke down");
        long long m = 8 * rhs / denom;
        if (m != 0) mult[mu] = m;
    }
    WeightChar c(n);
    for (const auto& [w, m] : mult) c.add(w, m);
    return c;
}

long long freudenthal_multiplicity(const RootDatum& rd, const IVec& lambda, const IVec& mu) {
    if (mu.size() != rd.rank()) throw input_error("weight has wrong length");
    return irrep_char(rd, lambda)[mu];
}

Integer weyl_dimension(const RootDatum& rd, const IVec& lambda) {
    require_dominant(rd, lambda);
    Rational d = 1;
    for (const auto& c : rd.positive_coroots()) d *= (to_q(dot(lambda, c)) + dot(rd.rho(), to_q(c))) / dot(rd.rho(), to_q(c));
    if (d.get_den() != 1) throw std::logic_error("Weyl dimension is not an integer");
    return d.get_num();
}

std::vector<std::pair<IVec, long long>> decompose(const RootDatum& rd, const WeightChar& chi) {
    if (chi.lattice_rank() != rd.rank()) throw input_error("character lives on a different lattice");
    WeightChar rest = chi;
    std::vector<std::pair<IVec, long long>> out;
    while (!rest.is_zero()) {
        const IVec* lead = nullptr;
        long long best = 0;
        for (const auto& [w, m] : rest.terms()) {
            if (!rd.is_dominant(w)) continue;
            long long h = rd.height(w);
            if (!lead || h > best || (h == best && w > *lead)) {
                lead = &w;
                best = h;
            }
        }
        if (!lead) throw Error(ErrorKind::NotACharacter, "remaining character has no dominant weight");
        IVec lambda = *lead;
        long long m = rest[lambda];
        if (m < 0) throw Error(ErrorKind::NotACharacter, "negative multiplicity at " + to_string(lambda));
        rest = rest - irrep_char(rd, lambda).scaled(m);
        for (const auto& [w, k] : rest.terms())
            if (k < 0) throw Error(ErrorKind::NotACharacter, "not a true character: negative multiplicity at " + to_string(w));
        out.emplace_back(lambda, m);
    }
    return out;
}

}  // namespace sph
