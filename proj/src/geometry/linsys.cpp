#include "sph/linsys.hpp"

#include <map>

namespace sph {

const char* rel_symbol(Rel r) {
    switch (r) {
        case Rel::Ge: return ">=";
        case Rel::Gt: return ">";
        case Rel::Eq: return "=";
        case Rel::Lt: return "<";
        case Rel::Le: return "<=";
    }
    return "?";
}

bool holds(const Constraint& c, const QVec& x) {
    Rational v = dot(c.normal, x) + c.constant;
    switch (c.rel) {
        case Rel::Ge: return v >= 0;
        case Rel::Gt: return v > 0;
        case Rel::Eq: return v == 0;
        case Rel::Lt: return v < 0;
        case Rel::Le: return v <= 0;
    }
    return false;
}

bool LinearSystem::satisfied_by(const QVec& x) const {
    for (const auto& c : constraints)
        if (!holds(c, x)) return false;
    return true;
}

namespace {

struct Ineq {
    QVec a;
    Rational b;
    bool strict = false;
};

struct Subst {
    size_t var;
    QVec coef;  // x_var = coef . x + shift, coef[var] = 0
    Rational shift;
};

// scale so that the normal is a primitive integer vector
Ineq normalize(Ineq q) {
    Integer l = 1;
    for (const auto& x : q.a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    Integer g = 0;
    for (const auto& x : q.a) {
        Rational y = x * l;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), y.get_num_mpz_t());
    }
    if (g == 0) return q;
    Rational f = Rational(l) / Rational(g);
    for (auto& x : q.a) x *= f;
    q.b *= f;
    return q;
}

// Dedupe by normal, keeping the tightest bound. Returns false when some
// constant constraint is violated.
bool tidy(std::vector<Ineq>& qs) {
    std::map<QVec, Ineq> best;
    for (auto& raw : qs) {
        Ineq q = normalize(raw);
        if (is_zero(q.a)) {
            if (q.b < 0 || (q.b == 0 && q.strict)) return false;
            continue;
        }
        auto it = best.find(q.a);
        if (it == best.end()) {
            best.emplace(q.a, q);
        } else if (q.b < it->second.b || (q.b == it->second.b && q.strict)) {
            it->second = q;
        }
    }
    qs.clear();
    for (auto& [k, v] : best) qs.push_back(v);
    return true;
}

}  // namespace

std::optional<QVec> feasible(const LinearSystem& sys) {
    size_t n = sys.dim;
    std::vector<Ineq> ineqs;
    std::vector<std::pair<QVec, Rational>> eqs;
    for (const auto& c : sys.constraints) {
        if (c.normal.size() != n) throw input_error("constraint dimension mismatch");
        switch (c.rel) {
            case Rel::Ge: ineqs.push_back({c.normal, c.constant, false}); break;
            case Rel::Gt: ineqs.push_back({c.normal, c.constant, true}); break;
            case Rel::Le: ineqs.push_back({neg(c.normal), -c.constant, false}); break;
            case Rel::Lt: ineqs.push_back({neg(c.normal), -c.constant, true}); break;
            case Rel::Eq: eqs.emplace_back(c.normal, c.constant); break;
        }
    }

    // equalities by substitution
    std::vector<Subst> subs;
    for (size_t e = 0; e < eqs.size(); ++e) {
        auto [a, b] = eqs[e];
        size_t k = n;
        for (size_t j = 0; j < n; ++j)
            if (a[j] != 0) {
                k = j;
                break;
            }
        if (k == n) {
            if (b != 0) return std::nullopt;
            continue;
        }
        Subst s{k, QVec(n, Rational(0)), -b / a[k]};
        for (size_t j = 0; j < n; ++j)
            if (j != k) s.coef[j] = -a[j] / a[k];
        auto apply = [&](QVec& v, Rational& c) {
            if (v[k] == 0) return;
            Rational f = v[k];
            v[k] = 0;
            for (size_t j = 0; j < n; ++j) v[j] += f * s.coef[j];
            c += f * s.shift;
        };
        for (size_t f = e + 1; f < eqs.size(); ++f) apply(eqs[f].first, eqs[f].second);
        for (auto& q : ineqs) apply(q.a, q.b);
        subs.push_back(std::move(s));
    }

    if (!tidy(ineqs)) return std::nullopt;

    // Fourier-Motzkin over the remaining variables
    struct Step {
        size_t var;
        std::vector<Ineq> involved;
    };
    std::vector<Step> steps;
    std::vector<bool> eliminated(n, false);
    for (const auto& s : subs) eliminated[s.var] = true;
    while (true) {
        size_t best = n;
        size_t best_cost = 0;
        for (size_t k = 0; k < n; ++k) {
            if (eliminated[k]) continue;
            size_t lo = 0, up = 0;
            for (const auto& q : ineqs) {
                if (q.a[k] > 0) ++lo;
                if (q.a[k] < 0) ++up;
            }
            if (lo + up == 0) continue;
            size_t cost = lo * up;
            if (best == n || cost < best_cost) {
                best = k;
                best_cost = cost;
            }
        }
        if (best == n) break;
        size_t k = best;
        eliminated[k] = true;
        Step st{k, {}};
        std::vector<Ineq> lower, upper, rest;
        for (auto& q : ineqs) {
            if (q.a[k] > 0) lower.push_back(q);
            else if (q.a[k] < 0) upper.push_back(q);
            else rest.push_back(q);
        }
        st.involved = lower;
        st.involved.insert(st.involved.end(), upper.begin(), upper.end());
        for (const auto& l : lower)
            for (const auto& u : upper) {
                Rational cl = -u.a[k], cu = l.a[k];
                Ineq c{add(scale(l.a, cl), scale(u.a, cu)), l.b * cl + u.b * cu, l.strict || u.strict};
                c.a[k] = 0;
                rest.push_back(std::move(c));
            }
        ineqs = std::move(rest);
        if (!tidy(ineqs)) return std::nullopt;
        steps.push_back(std::move(st));
    }

    // back substitution
    QVec x(n, Rational(0));
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        size_t k = it->var;
        std::optional<Rational> lo, up;
        bool lo_strict = false, up_strict = false;
        for (const auto& q : it->involved) {
            Rational rest = q.b;
            for (size_t j = 0; j < n; ++j)
                if (j != k) rest += q.a[j] * x[j];
            Rational bound = -rest / q.a[k];
            if (q.a[k] > 0) {
                if (!lo || bound > *lo || (bound == *lo && q.strict)) {
                    lo = bound;
                    lo_strict = q.strict;
                }
            } else {
                if (!up || bound < *up || (bound == *up && q.strict)) {
                    up = bound;
                    up_strict = q.strict;
                }
            }
        }
        auto ok = [&](const Rational& v) {
            if (lo && (v < *lo || (lo_strict && v == *lo))) return false;
            if (up && (v > *up || (up_strict && v == *up))) return false;
            return true;
        };
        Rational v = 0;
        if (!ok(v)) {
            if (lo && up) {
                Integer c;
                mpz_cdiv_q(c.get_mpz_t(), lo->get_num_mpz_t(), lo->get_den_mpz_t());
                if (ok(Rational(c))) v = c;
                else if (ok(Rational(c + 1))) v = c + 1;
                else v = (*lo + *up) / 2;
            } else if (lo) {
                Integer c;
                mpz_cdiv_q(c.get_mpz_t(), lo->get_num_mpz_t(), lo->get_den_mpz_t());
                v = c;
                if (!ok(v)) v += 1;
            } else {
                Integer c;
                mpz_fdiv_q(c.get_mpz_t(), up->get_num_mpz_t(), up->get_den_mpz_t());
                v = c;
                if (!ok(v)) v -= 1;
            }
        }
        x[k] = v;
    }
    for (auto it = subs.rbegin(); it != subs.rend(); ++it) x[it->var] = dot(it->coef, x) + it->shift;

    if (!sys.satisfied_by(x)) throw std::logic_error("Fourier-Motzkin witness failed verification");
    return x;
}

}  // namespace sph
