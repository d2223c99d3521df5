#include "sph/engine.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "sph/linalg.hpp"
#include "sph/linsys.hpp"

namespace sph {

namespace {

using Poly = std::map<long, Integer>;  // polynomial in the number of parts

void add_into(Poly& acc, const Poly& p, long shift) {
    for (const auto& [i, c] : p) {
        Integer& slot = acc[i + shift];
        slot += c;
        if (slot == 0) acc.erase(i + shift);
    }
}

IVec subtract(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

bool all_zero(const IVec& v) {
    return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

// Unbounded multiset count over items, grouped by number of parts. Each item
// has positive weight under `pos`, which bounds the recursion.
struct PartsCounter {
    const IMat& items;
    std::vector<long long> pos;  // weight of each item under the grading
    IVec grading;
    std::map<std::pair<size_t, IVec>, Poly> memo;

    PartsCounter(const IMat& it, const IVec& g) : items(it), grading(g) {
        for (const auto& x : items) {
            long long w = dot(x, g);
            if (w <= 0) throw input_error("parts counter needs a strictly positive grading");
            pos.push_back(w);
        }
    }

    Poly count(size_t j, const IVec& mu) {
        if (all_zero(mu)) return Poly{{0, Integer(1)}};
        if (j == items.size() || dot(mu, grading) <= 0) return {};
        auto key = std::make_pair(j, mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Poly res = count(j + 1, mu);
        add_into(res, count(j, subtract(mu, items[j])), 1);
        memo[key] = res;
        return res;
    }
};

IVec apply_matrix(const IMat& m, const IVec& v) {
    IVec out;
    for (const auto& row : m) {
        if (row.size() != v.size()) throw input_error("engine.to_group has the wrong number of columns");
        out.push_back(dot(row, v));
    }
    return out;
}

void check_to_group(const EngineSpec& spec, size_t rows, size_t rank) {
    if (spec.to_group.size() != rows)
        throw input_error("engine.to_group needs " + std::to_string(rows) + " rows");
    for (const auto& r : spec.to_group)
        if (r.size() != rank) throw input_error("engine.to_group needs " + std::to_string(rank) + " columns");
}

BasicFunctionTable empty_table(const SphericalDatum& d, const std::string& tag, int height) {
    if (height < 0) throw input_error("height must be nonnegative");
    BasicFunctionTable t;
    t.datum = d.name;
    t.case_tag = tag;
    t.height = height;
    return t;
}

long long max_abs_pairing(const QVec& w, const IMat& to_group) {
    // largest |<w, image of a basis vector>|, used for the truncation default
    Rational best = 0;
    size_t r = to_group.empty() ? 0 : to_group[0].size();
    for (size_t j = 0; j < r; ++j) {
        QVec col;
        for (const auto& row : to_group) col.push_back(to_q(row[j]));
        Rational v = abs(dot(w, col));
        if (v > best) best = v;
    }
    mpz_class c = best.get_num() / best.get_den() + 1;
    return c.get_si();
}

IVec two_rho_integral(const QVec& rho) {
    IVec out;
    for (const auto& x : rho) out.push_back(to_i(QVec{2 * x})[0]);
    return out;
}

}  // namespace

QLaurent BasicFunctionTable::at(const IVec& lambda) const {
    for (const auto& [l, v] : values)
        if (l == lambda) return v;
    throw input_error("stratum " + to_string(lambda) + " is not in the table");
}

std::map<long, Integer> kostant_parts(const RootDatum& rd, const IVec& mu) {
    PartsCounter pc(rd.positive_coroots(), two_rho_integral(rd.rho()));
    return pc.count(0, mu);
}

DualRadicalRep dual_radical(const ParabolicDatum& p) {
    if (p.levi_simple().size() == p.parent().semisimple_rank())
        throw input_error("the Levi is the whole group: no unipotent radical");
    DualRadicalRep r{p, {}};
    IVec two_rho_m = two_rho_integral(p.rho_m());
    for (const auto& c : p.radical_coroots()) r.weights.push_back({c, p.project(c), dot(two_rho_m, c)});
    return r;
}

FFixedRep f_fixed(const DualRadicalRep& r) {
    std::map<IVec, std::map<long long, long long>> grades;
    for (const auto& w : r.weights) ++grades[w.theta][w.grade];
    FFixedRep out;
    for (const auto& [theta, d] : grades) {
        auto at = [&](long long m) {
            auto it = d.find(m);
            return it == d.end() ? 0LL : it->second;
        };
        for (const auto& [m, c] : d)
            if (at(-m) != c)
                throw Error(ErrorKind::NotSl2Character,
                            "grades over theta " + to_string(theta) + " are not symmetric");
        for (const auto& [m, c] : d) {
            if (m > 0) continue;
            long long mult = c - at(m - 2);
            if (mult < 0)
                throw Error(ErrorKind::NotSl2Character, "grades over theta " + to_string(theta) + " are not unimodal");
            if (mult > 0) out.push_back({theta, m, mult});
        }
    }
    return out;
}

BasicFunctionTable basic_function_borel(const SphericalDatum& d, const EngineSpec& spec, int height) {
    BasicFunctionTable t = empty_table(d, "UP-Borel", height);
    RootDatum g = build_root_datum(spec.group);
    if (g.semisimple_rank() == 0) throw input_error("the Borel route needs semisimple rank at least 1");
    check_to_group(spec, g.rank(), d.rank());
    PartsCounter pc(g.positive_coroots(), two_rho_integral(g.rho()));
    t.truncation = static_cast<long>(height) * max_abs_pairing(g.rho(), spec.to_group) + 2;
    for (const auto& lambda : lattice_points(d.valuation_cone, height)) {
        IVec mu = apply_matrix(spec.to_group, lambda);
        QLaurent v;
        for (const auto& [i, c] : pc.count(0, mu)) {
            if (i > t.truncation) throw Error(ErrorKind::Precision, "Kostant count exceeds the truncation degree");
            v += QLaurent::monomial(c, -2 * i);
        }
        if (v != QLaurent()) v = v * QLaurent::q_power(dot(g.rho(), to_q(mu)));
        t.values.emplace_back(lambda, v);
    }
    return t;
}

BasicFunctionTable basic_function_pp(const SphericalDatum& d, const EngineSpec& spec, int height, int kappa) {
    if (kappa != 1 && kappa != -1) throw input_error("kappa must be +1 or -1");
    BasicFunctionTable t = empty_table(d, "PP-general", height);
    t.kappa = kappa;
    ParabolicDatum p(build_root_datum(spec.group), spec.levi);
    check_to_group(spec, p.abelian_rank(), d.rank());
    FFixedRep uf = f_fixed(dual_radical(p));

    // expand f-fixed entries into basis vectors carrying their q-weight
    IMat items;
    std::vector<long long> grade;
    for (const auto& e : uf)
        for (long long k = 0; k < e.multiplicity; ++k) {
            items.push_back(e.theta);
            grade.push_back(e.grade);
        }
    // 2 rho_P coordinates give a positive grading on Lambda_{G,P}^pos
    QVec c = p.two_rho_p_coords();
    IVec grading = to_i(clear_denominators(c));
    t.truncation = static_cast<long>(height) * max_abs_pairing(c, spec.to_group) + 2;

    // c_i(theta) as a Laurent polynomial in q: count by parts and grade sum
    std::map<std::pair<size_t, IVec>, std::map<long, QLaurent>> memo;
    std::vector<long long> w;
    for (const auto& x : items) {
        long long v = dot(x, grading);
        if (v <= 0) throw input_error("a dual radical weight is not positive on rho_P");
        w.push_back(v);
    }
    std::function<std::map<long, QLaurent>(size_t, const IVec&)> count = [&](size_t j, const IVec& th) {
        std::map<long, QLaurent> res;
        if (all_zero(th)) {
            res[0] = QLaurent(1);
            return res;
        }
        if (j == items.size() || dot(th, grading) <= 0) return res;
        auto key = std::make_pair(j, th);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        res = count(j + 1, th);
        // exponent kappa * m / 2 is stored doubled as kappa * m
        QLaurent weight = QLaurent::monomial(Integer(1), kappa * grade[j]);
        for (const auto& [i, v] : count(j, subtract(th, items[j]))) {
            QLaurent& slot = res[i + 1];
            slot += v * weight;
        }
        memo[key] = res;
        return res;
    };

    for (const auto& lambda : lattice_points(d.valuation_cone, height)) {
        IVec theta = apply_matrix(spec.to_group, lambda);
        QLaurent v;
        for (const auto& [i, ci] : count(0, theta)) {
            if (i > t.truncation) throw Error(ErrorKind::Precision, "Sym degree exceeds the truncation degree");
            v += ci * QLaurent::q_power(Rational(-i));
        }
        if (v != QLaurent()) v = v * QLaurent::q_power(p.rho_p_pairing(theta));
        t.values.emplace_back(lambda, v);
    }
    return t;
}

BasicFunctionTable basic_function_smooth(const SphericalDatum& d, int height) {
    if (!d.colored_cone) throw input_error("the smooth rule needs a colored cone");
    BasicFunctionTable t = empty_table(d, "smooth", height);
    for (const auto& lambda : lattice_points(d.valuation_cone, height))
        t.values.emplace_back(lambda, d.colored_cone->cone.contains(to_q(lambda)) ? QLaurent(1) : QLaurent());
    return t;
}

BasicFunctionTable basic_function(const CatalogEntry& e, int height, int kappa) {
    if (e.engine.kind == "borel") return basic_function_borel(e.datum, e.engine, height);
    if (e.engine.kind == "pp") return basic_function_pp(e.datum, e.engine, height, kappa);
    if (e.engine.kind == "smooth") return basic_function_smooth(e.datum, height);
    throw input_error("entry '" + e.key + "' has no basic function table");
}

std::vector<GradedPiece> basic_function_graded(const ParabolicDatum& p, int D) {
    if (D < 0) throw input_error("degree must be nonnegative");
    RootDatum mdual = p.levi().dual();
    WeightChar u = WeightChar::from_weights(p.parent().rank(), p.radical_coroots());
    std::vector<GradedPiece> out;
    std::vector<WeightChar> powers = sym_powers(u, D);
    for (int i = 0; i <= D; ++i) out.emplace_back(i, decompose(mdual, powers[static_cast<size_t>(i)]));
    return out;
}

std::string sympoly_to_string(const SymPoly& p, const std::vector<std::string>& names) {
    if (p.empty()) return "0";
    std::string out;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        std::string mono;
        for (size_t j = 0; j < it->first.size(); ++j) {
            long long e = it->first[j];
            if (e == 0) continue;
            std::string n = j < names.size() ? names[j] : "z" + std::to_string(j + 1);
            mono += (mono.empty() ? "" : "*") + n + (e == 1 ? "" : "^" + std::to_string(e));
        }
        std::string c = it->second.to_string();
        std::string term;
        if (mono.empty()) term = c;
        else if (c == "1") term = mono;
        else term = "(" + c + ")*" + mono;
        out += (out.empty() ? "" : " + ") + term;
    }
    return out;
}

SymPoly LFactor::coefficient(int k) const {
    if (k < 0) return {};
    // h_k by recursion on the monomial list
    std::vector<std::vector<SymPoly>> h(monomials.size() + 1, std::vector<SymPoly>(static_cast<size_t>(k) + 1));
    for (size_t j = 0; j <= monomials.size(); ++j) h[j][0][IVec(nvars, 0)] = RLaurent(1);
    for (size_t j = 1; j <= monomials.size(); ++j) {
        const LMonomial& m = monomials[j - 1];
        RLaurent mq = RLaurent::q_power(m.q_exp) * RLaurent(m.coeff);
        for (int d = 1; d <= k; ++d) {
            SymPoly acc = h[j - 1][static_cast<size_t>(d)];
            for (const auto& [z, c] : h[j][static_cast<size_t>(d - 1)]) {
                IVec zz(nvars);
                for (size_t i = 0; i < nvars; ++i) zz[i] = z[i] + m.z[i];
                RLaurent& slot = acc[zz];
                slot += c * mq;
                if (slot == RLaurent()) acc.erase(zz);
            }
            h[j][static_cast<size_t>(d)] = acc;
        }
    }
    return h[monomials.size()][static_cast<size_t>(k)];
}

std::string LFactor::to_string(const std::vector<std::string>& names) const {
    if (monomials.empty()) return "1";
    std::string out;
    for (const auto& m : monomials) {
        SymPoly p;
        p[m.z] = RLaurent::q_power(m.q_exp) * RLaurent(m.coeff);
        out += "(1 - " + (p.begin()->first.empty() || all_zero(m.z) ? "(" + p.begin()->second.to_string() + ")"
                                                                    : "(" + sympoly_to_string(p, names) + ")") +
               "*T)^-1";
    }
    return out;
}

namespace {

LMonomial make_monomial(const IVec& theta, long long grade, const std::optional<QVec>& point, int kappa) {
    LMonomial m;
    m.q_exp = Rational(static_cast<long>(kappa * grade), 2);
    m.q_exp.canonicalize();
    if (!point) {
        m.z = theta;
        return m;
    }
    if (point->size() != theta.size()) throw input_error("point has the wrong number of coordinates");
    m.z = IVec(theta.size(), 0);
    for (size_t j = 0; j < theta.size(); ++j) {
        if ((*point)[j] == 0) throw input_error("point coordinate " + std::to_string(j + 1) + " is zero");
        Rational base = theta[j] >= 0 ? (*point)[j] : 1 / (*point)[j];
        for (long long k = 0; k < std::abs(theta[j]); ++k) m.coeff *= base;
    }
    return m;
}

}  // namespace

LFactor local_lfactor(const FFixedRep& r, size_t abelian_rank, const std::optional<QVec>& point, int kappa) {
    LFactor f;
    f.nvars = abelian_rank;
    for (const auto& e : r)
        for (long long k = 0; k < e.multiplicity; ++k) f.monomials.push_back(make_monomial(e.theta, e.grade, point, kappa));
    if (point) f.nvars = 0;
    for (auto& m : f.monomials) m.z.resize(f.nvars);
    return f;
}

LFactor local_lfactor(const DualRadicalRep& r, const std::optional<QVec>& point, int kappa) {
    LFactor f;
    f.nvars = point ? 0 : r.parabolic.abelian_rank();
    for (const auto& w : r.weights) {
        LMonomial m = make_monomial(w.theta, w.grade, point, kappa);
        m.z.resize(f.nvars);
        f.monomials.push_back(m);
    }
    return f;
}

LFactor std_lfactor(size_t n, const Rational& shift) {
    LFactor f;
    f.nvars = n;
    for (size_t j = 0; j < n; ++j) {
        LMonomial m;
        m.z = IVec(n, 0);
        m.z[j] = 1;
        m.q_exp = -shift;
        f.monomials.push_back(m);
    }
    return f;
}

SymPoly satake_minuscule(const RootDatum& rd, const IVec& mu) {
    if (mu.size() != rd.rank()) throw input_error("coweight has wrong length");
    for (const auto& a : rd.positive_roots()) {
        long long x = rd.pair(a, rd.dominant_coweight_rep(mu));
        if (x > 1) throw input_error("Satake transform is only tabulated for minuscule coweights");
    }
    Rational e = dot(rd.rho(), to_q(rd.dominant_coweight_rep(mu)));
    SymPoly out;
    for (const auto& w : weyl_orbit_coweights(rd, mu)) out[w] += to_rational(QLaurent::q_power(e));
    return out;
}

StratumFunction torus_side_action(const ParabolicDatum& p, const SymPoly& sat, const StratumFunction& f, int kappa) {
    if (kappa != 1 && kappa != -1) throw input_error("kappa must be +1 or -1");
    StratumFunction out;
    for (const auto& [beta, c] : sat) {
        IVec theta = p.project(beta);
        Rational e = kappa * dot(p.rho_m(), to_q(beta)) + p.rho_p_pairing(theta);
        RLaurent factor = c * to_rational(QLaurent::q_power(e));
        for (const auto& [lambda, v] : f) {
            IVec target(lambda.size());
            for (size_t j = 0; j < target.size(); ++j) target[j] = lambda[j] + theta[j];
            RLaurent& slot = out[target];
            slot += factor * v;
            if (slot.is_zero()) out.erase(target);
        }
    }
    return out;
}

GrowthCertificate growth_certificate(const BasicFunctionTable& t, size_t rank) {
    // deg Phi(lambda) <= <chi, lambda>; per degree only the vertices of the
    // convex hull of the strata at that degree matter
    std::map<Rational, std::vector<QVec>> by_degree;
    for (const auto& [l, v] : t.values) {
        if (v == QLaurent()) continue;
        QVec h = to_q(l);
        h.push_back(1);
        by_degree[v.degree()].push_back(h);
    }
    LinearSystem sys(rank);
    for (const auto& [deg, pts] : by_degree) {
        Cone hull(rank + 1, pts);
        for (const auto& r : hull.rays()) {
            const Rational& last = r.back();
            QVec vtx;
            for (size_t i = 0; i < rank; ++i) vtx.push_back(r[i] / last);
            sys.add(vtx, Rel::Ge, -deg);
        }
    }
    GrowthCertificate out;
    out.chi = feasible(sys);
    out.inconclusive = !out.chi;
    return out;
}

namespace {

struct ToricModel {
    IMat span_basis;  // saturated basis of span(C) cap Z^r, as rows
    IMat hilbert;     // Hilbert basis of the dual cone, in span coordinates
};

ToricModel toric_model(const SphericalDatum& d) {
    if (!d.colored_cone) throw input_error("the distance function needs a colored cone");
    const Cone& c = d.colored_cone->cone;
    ToricModel m;
    if (c.is_zero()) return m;
    if (c.dim() > 4) throw Error(ErrorKind::UnsupportedRank, "Hilbert basis above dimension 4 is not supported");
    // saturated basis of span(C) cap Z^r: integer kernel of span(C)^perp
    IMat perp;
    for (const auto& e : c.equations()) perp.push_back(to_i(clear_denominators(e)));
    if (perp.empty()) {
        for (size_t i = 0; i < d.rank(); ++i) {
            IVec e(d.rank(), 0);
            e[i] = 1;
            m.span_basis.push_back(e);
        }
    } else {
        m.span_basis = integer_kernel(perp, d.rank());
    }
    size_t k = m.span_basis.size();
    QMat cols;
    for (const auto& b : m.span_basis) cols.push_back(to_q(b));
    std::vector<QVec> local;
    for (const auto& g : c.rays()) {
        auto x = solve_combination(cols, g);
        if (!x) throw input_error("colored cone ray outside its span");
        local.push_back(*x);
    }
    Cone lc(k, local);
    m.hilbert = hilbert_basis(lc.dual());
    return m;
}

}  // namespace

Rational toric_distance(const SphericalDatum& d, const IVec& lambda, const Rational& q) {
    ToricModel m = toric_model(d);
    if (q <= 0) throw input_error("q must be positive");
    if (!d.colored_cone->cone.contains(to_q(lambda)))
        throw input_error("stratum " + to_string(lambda) + " is not in the colored cone");
    if (m.hilbert.empty()) return 1;
    QMat cols;
    for (const auto& b : m.span_basis) cols.push_back(to_q(b));
    auto x = solve_combination(cols, to_q(lambda));
    IVec local = to_i(*x);
    long long best = -1;
    for (const auto& h : m.hilbert) {
        long long v = dot(h, local);
        if (best < 0 || v < best) best = v;
    }
    Rational out = 1;
    for (long long i = 0; i < best; ++i) out /= q;
    return out;
}

std::optional<int> distance_exponent(const SphericalDatum& d, const BasicFunctionTable& t, const Rational& q, int max_n) {
    std::vector<std::pair<QuadVal, Rational>> pairs;
    for (const auto& [l, v] : t.values) {
        if (!d.colored_cone->cone.contains(to_q(l))) continue;
        QuadVal a = v.eval(q);
        if (a.sign() < 0) a = -a;
        pairs.emplace_back(a, toric_distance(d, l, q));
    }
    for (int n = 0; n <= max_n; ++n) {
        bool ok = true;
        for (const auto& [a, dist] : pairs) {
            Rational bound = 1;
            for (int k = 0; k < n; ++k) bound /= dist;
            if (!(a <= QuadVal::rational(bound, q))) {
                ok = false;
                break;
            }
        }
        if (ok) return n;
    }
    return std::nullopt;
}

std::string render_tsv(const BasicFunctionTable& t, const std::optional<Rational>& q) {
    std::string out;
    size_t r = t.values.empty() ? 0 : t.values.front().first.size();
    for (size_t i = 0; i < r; ++i) out += "l" + std::to_string(i + 1) + "\t";
    out += "value";
    if (q) out += "\tq=" + to_string(*q);
    out += "\n";
    for (const auto& [l, v] : t.values) {
        for (auto x : l) out += std::to_string(x) + "\t";
        out += v.to_string();
        if (q) out += "\t" + v.eval(*q).to_string();
        out += "\n";
    }
    return out;
}

Json render_table_json(const BasicFunctionTable& t, const std::optional<Rational>& q) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["datum"] = t.datum;
    j["case"] = t.case_tag;
    j["height"] = t.height;
    j["truncation"] = t.truncation;
    if (t.case_tag == "PP-general") j["kappa"] = t.kappa;
    if (q) j["q"] = to_string(*q);
    Json rows = Json::array();
    for (const auto& [l, v] : t.values) {
        Json row;
        row["lambda"] = l;
        row["value"] = v.to_string();
        if (q) row["at_q"] = v.eval(*q).to_string();
        rows.push_back(row);
    }
    j["values"] = rows;
    return j;
}

}  // namespace sph
