#include <algorithm>
#include <cstdlib>
#include <functional>

#include "sph/oracle.hpp"

namespace sph::oracle {

namespace {

// Exact polynomial entries (coset representatives) carry this much relative
// precision; the points they act on are the limiting factor.
constexpr long kExact = 64;

long min_valuation(const std::vector<TruncSeries>& xs) {
    std::optional<long> best, unknown;
    for (const auto& x : xs) {
        if (x.known_zero()) {
            if (!unknown || x.hi() < *unknown) unknown = x.hi();
            continue;
        }
        long v = x.valuation();
        if (!best || v < *best) best = v;
    }
    if (!best || (unknown && *unknown <= *best))
        throw Error(ErrorKind::Precision, "minimal valuation is not resolved at this precision");
    return *best;
}

// Lambda_{G,P} for GL3 with Levi GL2 x GL1.
const ParabolicDatum& gl3_parabolic() {
    static const ParabolicDatum p(build_root_datum("GL3"), {0});
    return p;
}

// Coweights of GL3 projecting to the unit vectors of Lambda_{G,P}.
const IMat& gl3_lifts() {
    static const IMat lifts = [] {
        const ParabolicDatum& p = gl3_parabolic();
        IMat out(p.abelian_rank());
        std::vector<bool> found(p.abelian_rank(), false);
        for (long long a = -2; a <= 2; ++a)
            for (long long b = -2; b <= 2; ++b)
                for (long long c = -2; c <= 2; ++c) {
                    IVec m{a, b, c};
                    IVec th = p.project(m);
                    for (size_t j = 0; j < th.size(); ++j) {
                        IVec e(th.size(), 0);
                        e[j] = 1;
                        if (!found[j] && th == e) {
                            out[j] = m;
                            found[j] = true;
                        }
                    }
                }
        for (bool f : found)
            if (!f) throw std::logic_error("no small lift of a Lambda_{G,P} basis vector");
        return out;
    }();
    return lifts;
}

TruncSeries exact_monomial(unsigned p, long v) { return TruncSeries::monomial(p, kExact, 1, v); }

void check_label(Space s, const IVec& label) {
    if (label.size() != label_rank(s)) throw input_error("label has wrong length for " + space_name(s));
    if (s == Space::Mat2 && label[0] > label[1]) throw input_error("Mat2 labels are sorted Smith exponents a <= b");
}

}  // namespace

Space parse_space(const std::string& s) {
    if (s == "A2") return Space::A2;
    if (s == "Mat2") return Space::Mat2;
    if (s == "U\\GL2" || s == "UGL2") return Space::UGL2;
    if (s == "[P,P]\\GL3" || s == "PPGL3") return Space::PPGL3;
    throw input_error("unknown space '" + s + "'");
}

std::string space_name(Space s) {
    switch (s) {
        case Space::A2: return "A2";
        case Space::Mat2: return "Mat2";
        case Space::UGL2: return "U\\GL2";
        case Space::PPGL3: return "[P,P]\\GL3";
    }
    return "";
}

size_t group_degree(Space s) { return s == Space::PPGL3 ? 3 : 2; }
size_t label_rank(Space s) { return s == Space::A2 ? 1 : 2; }

LatticePoint representative(Space s, const IVec& label, unsigned p, long N) {
    check_label(s, label);
    LatticePoint x;
    x.space = s;
    switch (s) {
        case Space::A2: {
            long n = static_cast<long>(label[0]);
            x.rows = {{TruncSeries::monomial(p, N, 1, n), TruncSeries::zero(p, n + N)}};
            break;
        }
        case Space::Mat2: {
            long a = static_cast<long>(label[0]), b = static_cast<long>(label[1]);
            x.rows = {{TruncSeries::monomial(p, N, 1, a), TruncSeries::zero(p, a + N)},
                      {TruncSeries::zero(p, b + N), TruncSeries::monomial(p, N, 1, b)}};
            break;
        }
        case Space::UGL2: {
            // Iwasawa coweight m = -label: bottom row t^{m2} e2, det t^{m1+m2}
            long m1 = -static_cast<long>(label[0]), m2 = -static_cast<long>(label[1]);
            x.rows = {{TruncSeries::zero(p, m2 + N), TruncSeries::monomial(p, N, 1, m2)}};
            x.det = TruncSeries::monomial(p, N, 1, m1 + m2);
            break;
        }
        case Space::PPGL3: {
            IVec m(3, 0);
            for (size_t j = 0; j < label.size(); ++j)
                for (size_t i = 0; i < 3; ++i) m[i] -= label[j] * gl3_lifts()[j][i];
            long m3 = static_cast<long>(m[2]);
            x.rows = {{TruncSeries::zero(p, m3 + N), TruncSeries::zero(p, m3 + N), TruncSeries::monomial(p, N, 1, m3)}};
            x.det = TruncSeries::monomial(p, N, 1, static_cast<long>(m[0] + m[1] + m[2]));
            break;
        }
    }
    return x;
}

IVec orbit_invariant(const LatticePoint& x) {
    switch (x.space) {
        case Space::A2: return {min_valuation(x.rows.at(0))};
        case Space::Mat2: {
            IVec e = elementary_divisors(x.rows);
            return {e[0], e[1]};
        }
        case Space::UGL2:
        case Space::PPGL3: {
            if (!x.det) throw input_error("point has no determinant coordinate");
            long mv = min_valuation(x.rows.at(0));
            long d = x.det->valuation();
            if (x.space == Space::UGL2) return {-(d - mv), -mv};
            IVec th = gl3_parabolic().project(IVec{d - mv, 0, mv});
            for (auto& v : th) v = -v;
            return th;
        }
    }
    return {};
}

LatticePoint act(const LatticePoint& x, const SMat& g) {
    if (g.size() != group_degree(x.space)) throw input_error("group element has wrong size for " + space_name(x.space));
    LatticePoint y = x;
    y.rows = mat_mul(x.rows, g);
    if (x.det) y.det = *x.det * det(g);
    return y;
}

LatticePoint random_translate(const LatticePoint& x, std::mt19937_64& rng) {
    unsigned p = x.rows.at(0).at(0).p();
    // entries of K matter only up to the relative precision of the point
    long N = 0;
    for (const auto& row : x.rows)
        for (const auto& e : row) N = std::max(N, e.hi() - e.lo());
    size_t n = group_degree(x.space);
    LatticePoint y = act(x, random_unit_matrix(n, p, std::max(N, 1L), rng));
    if (x.space == Space::Mat2) y.rows = mat_mul(random_unit_matrix(n, p, std::max(N, 1L), rng), y.rows);
    return y;
}

bool is_integral(const LatticePoint& x) {
    bool rows = true;
    for (const auto& row : x.rows) rows = rows && min_valuation(row) >= 0;
    if (!x.det) return rows;
    return rows && x.det->valuation() == 0;
}

std::vector<IVec> labels_up_to(Space s, int height) {
    std::vector<IVec> out;
    long long h = height;
    if (s == Space::A2) {
        for (long long n = -h; n <= h; ++n) out.push_back({n});
        return out;
    }
    for (long long a = -h; a <= h; ++a)
        for (long long b = -h; b <= h; ++b) {
            if (std::llabs(a) + std::llabs(b) > h) continue;
            if (s == Space::Mat2 && a > b) continue;
            out.push_back({a, b});
        }
    return out;
}

IVec dominant_gl(const IVec& mu) {
    IVec d = mu;
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

std::vector<SMat> hnf_cosets(size_t n, unsigned p, const IVec& mu) {
    if (mu.size() != n) throw input_error("coweight has wrong length");
    if (n == 0 || n > 3) throw Error(ErrorKind::UnsupportedRank, "Hecke cosets are modelled for n <= 3");
    IVec d = dominant_gl(mu);
    long long shift = d.back();
    IVec target(d.rbegin(), d.rend());  // ascending Smith exponents
    long long total = 0;
    for (auto& x : target) {
        x -= shift;
        total += x;
    }
    std::vector<SMat> out;
    IVec a(n, 0);
    // compositions of total into n parts, each at most the top exponent
    std::function<void(size_t, long long)> diag = [&](size_t i, long long left) {
        if (i + 1 == n) {
            if (left > target.back()) return;
            a[i] = left;
        } else {
            for (long long x = 0; x <= std::min(left, target.back()); ++x) {
                a[i] = x;
                diag(i + 1, left - x);
            }
            return;
        }
        // entries above the diagonal: row i has degree < a_i
        std::vector<std::pair<size_t, size_t>> slots;
        for (size_t r = 0; r < n; ++r)
            for (size_t c = r + 1; c < n; ++c)
                for (long long k = 0; k < a[r]; ++k) slots.emplace_back(r, c);
        size_t count = slots.size();
        std::vector<unsigned> digits(count, 0);
        for (;;) {
            SMat g(n);
            for (size_t r = 0; r < n; ++r)
                for (size_t c = 0; c < n; ++c) {
                    if (r == c) g[r].push_back(exact_monomial(p, static_cast<long>(a[r] + shift)));
                    else g[r].push_back(TruncSeries::zero(p, kExact));
                }
            // digits are listed per (r, c) in increasing degree
            std::map<std::pair<size_t, size_t>, std::vector<long long>> poly;
            for (size_t k = 0; k < count; ++k) poly[slots[k]].push_back(digits[k]);
            for (const auto& [rc, coeffs] : poly)
                g[rc.first][rc.second] = TruncSeries::from_coeffs(p, kExact, shift, coeffs);
            IVec ed = elementary_divisors(g);
            IVec want = target;
            for (auto& x : want) x += shift;
            if (ed == want) out.push_back(g);
            size_t k = 0;
            while (k < count && ++digits[k] == p) digits[k++] = 0;
            if (k == count) break;
        }
    };
    diag(0, total);
    return out;
}

HeckeElement hecke_operator(const std::string& name, size_t n) {
    if (n < 2 || n > 3) throw input_error("Hecke operators are modelled for GL2 and GL3");
    HeckeElement h;
    h.n = n;
    IVec mu(n, 0);
    if (name == "unit") {
    } else if (name == "degree1") {
        mu[0] = 1;
    } else if (name == "wedge2" && n == 3) {
        mu[0] = mu[1] = 1;
    } else if (name == "central") {
        std::fill(mu.begin(), mu.end(), 1);
    } else {
        throw input_error("unknown Hecke operator '" + name + "' for GL" + std::to_string(n));
    }
    h.coeff[mu] = 1;
    return h;
}

std::vector<std::string> hecke_operator_names(size_t n) {
    if (n == 3) return {"unit", "degree1", "wedge2", "central"};
    return {"unit", "degree1", "central"};
}

HeckeElement hecke_product(unsigned p, const HeckeElement& a, const HeckeElement& b) {
    if (a.n != b.n) throw input_error("Hecke elements for different groups");
    std::map<IVec, Rational> pair_counts;
    for (const auto& [mu, ca] : a.coeff)
        for (const auto& [nu, cb] : b.coeff) {
            auto ga = hnf_cosets(a.n, p, mu), gb = hnf_cosets(b.n, p, nu);
            for (const auto& x : ga)
                for (const auto& y : gb) {
                    IVec ed = elementary_divisors(mat_mul(x, y));
                    pair_counts[dominant_gl(ed)] += ca * cb;
                }
        }
    HeckeElement out;
    out.n = a.n;
    for (const auto& [lam, c] : pair_counts) {
        if (c == 0) continue;
        Rational size = static_cast<long>(hnf_cosets(a.n, p, lam).size());
        out.coeff[lam] = c / size;
    }
    return out;
}

OracleFunction hecke_convolve(Space s, unsigned p, const HeckeElement& h, const OracleFunction& f,
                              const std::vector<IVec>& targets, long N, std::mt19937_64& rng) {
    if (h.n != group_degree(s)) throw input_error("Hecke element does not act on " + space_name(s));
    std::vector<std::pair<Rational, std::vector<SMat>>> cosets;
    for (const auto& [mu, c] : h.coeff) cosets.emplace_back(c, hnf_cosets(h.n, p, mu));
    OracleFunction out;
    for (const auto& lam : targets) {
        LatticePoint x = random_translate(representative(s, lam, p, N), rng);
        Rational v = 0;
        for (const auto& [c, gs] : cosets)
            for (const auto& g : gs) {
                auto it = f.find(orbit_invariant(act(x, g)));
                if (it != f.end()) v += c * it->second;
            }
        if (v != 0) out[lam] = v;
    }
    return out;
}

std::map<IVec, QuadVal> coset_satake(unsigned p, const HeckeElement& h) {
    Rational q = static_cast<long>(p);
    std::map<IVec, QuadVal> out;
    for (const auto& [mu, c] : h.coeff)
        for (const auto& g : hnf_cosets(h.n, p, mu)) {
            IVec diag;
            Rational pair = 0;
            for (size_t i = 0; i < h.n; ++i) {
                diag.push_back(g[i][i].valuation());
                // rho of GL_n: ((n-1)/2, ..., -(n-1)/2)
                pair += Rational(static_cast<long>(h.n) - 1 - 2 * static_cast<long>(i), 2) * static_cast<long>(diag.back());
            }
            QuadVal term = RLaurent::q_power(-pair).eval(q) * QuadVal::rational(c, q);
            auto it = out.find(diag);
            if (it == out.end()) out.emplace(diag, term);
            else it->second = it->second + term;
        }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second.sign() == 0) it = out.erase(it);
        else ++it;
    }
    return out;
}

std::optional<std::vector<Rational>> fit_polynomial(const std::vector<std::pair<Rational, Rational>>& samples,
                                                    size_t degree) {
    if (samples.size() < degree + 1) throw input_error("not enough samples for the degree bound");
    // Newton divided differences on the first degree+1 samples
    size_t m = degree + 1;
    std::vector<Rational> xs, dd;
    for (size_t i = 0; i < m; ++i) {
        xs.push_back(samples[i].first);
        dd.push_back(samples[i].second);
    }
    for (size_t k = 1; k < m; ++k)
        for (size_t i = m - 1; i >= k; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k]);
    // expand to monomial coefficients
    std::vector<Rational> coef(m, 0);
    for (size_t k = m; k-- > 0;) {
        // coef = coef * (x - xs[k]) + dd[k]
        std::vector<Rational> next(m, 0);
        for (size_t i = 0; i + 1 < m; ++i) {
            next[i + 1] += coef[i];
            next[i] -= coef[i] * xs[k];
        }
        next[0] += dd[k];
        coef = next;
    }
    for (const auto& [x, y] : samples) {
        Rational v = 0, pw = 1;
        for (const auto& c : coef) {
            v += c * pw;
            pw *= x;
        }
        if (v != y) return std::nullopt;
    }
    return coef;
}

}  // namespace sph::oracle
