#pragma once

#include <map>
#include <string>

#include "sph/rational.hpp"

namespace sph {

// An element a + b*sqrt(d) of Q(sqrt d), d a positive rational. Values of
// q-Laurent polynomials at q = d land here.
struct QuadVal {
    Rational a = 0, b = 0, d = 1;

    static QuadVal rational(const Rational& x, const Rational& d = 1) { return {x, 0, d}; }
    QuadVal operator+(const QuadVal& o) const;
    QuadVal operator-(const QuadVal& o) const;
    QuadVal operator*(const QuadVal& o) const;
    QuadVal operator-() const { return {-a, -b, d}; }
    int sign() const;
    bool operator==(const QuadVal& o) const;
    bool operator<(const QuadVal& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const QuadVal& o) const { return (*this - o).sign() <= 0; }
    bool is_rational() const { return b == 0; }
    std::string to_string() const;
};

// Exact sqrt of a rational if it exists.
bool rational_sqrt(const Rational& x, Rational& root);

// Laurent polynomial in q^{1/2}; exponents are stored doubled.
template <class C>
class Laurent {
public:
    Laurent() = default;
    Laurent(const C& c) {
        if (c != 0) t_[0] = c;
    }
    Laurent(long c) : Laurent(C(c)) {}
    // c * q^{half/2}
    static Laurent monomial(const C& c, long half) {
        Laurent l;
        if (c != 0) l.t_[half] = c;
        return l;
    }
    // q^e for e in (1/2)Z
    static Laurent q_power(const Rational& e) {
        Rational h = e * 2;
        if (h.get_den() != 1) throw input_error("q-exponent must lie in (1/2)Z");
        return monomial(C(1), to_ll(h));
    }

    const std::map<long, C>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    C coeff(long half) const {
        auto it = t_.find(half);
        return it == t_.end() ? C(0) : it->second;
    }
    // highest exponent (in halves); undefined on zero
    long top_half() const { return t_.rbegin()->first; }
    long bottom_half() const { return t_.begin()->first; }
    Rational degree() const { return Rational(top_half(), 2); }

    Laurent& operator+=(const Laurent& o) {
        for (const auto& [h, c] : o.t_) add_term(h, c);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (const auto& [h, c] : o.t_) add_term(h, -c);
        return *this;
    }
    Laurent operator+(const Laurent& o) const { return Laurent(*this) += o; }
    Laurent operator-(const Laurent& o) const { return Laurent(*this) -= o; }
    Laurent operator-() const { return Laurent() - *this; }
    Laurent operator*(const Laurent& o) const {
        Laurent r;
        for (const auto& [h1, c1] : t_)
            for (const auto& [h2, c2] : o.t_) r.add_term(h1 + h2, c1 * c2);
        return r;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
    Laurent shifted(long half) const {
        Laurent r;
        for (const auto& [h, c] : t_) r.t_[h + half] = c;
        return r;
    }
    bool operator==(const Laurent& o) const { return t_ == o.t_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    QuadVal eval(const Rational& q) const {
        if (q <= 0) throw input_error("q must be positive");
        QuadVal v{0, 0, q};
        for (const auto& [h, c] : t_) {
            long e = h >= 0 ? h / 2 : -((-h + 1) / 2);  // floor(h/2)
            Rational p = 1;
            for (long k = 0; k < (e >= 0 ? e : -e); ++k) p *= q;
            if (e < 0) p = 1 / p;
            Rational term = Rational(c) * p;
            if (h - 2 * e == 0) v.a += term;
            else v.b += term;
        }
        Rational root;
        if (v.b != 0 && rational_sqrt(q, root)) {
            v.a += v.b * root;
            v.b = 0;
        }
        return v;
    }

    // "q + 1", "q^-2", "q^(3/2)", descending exponents
    std::string to_string() const {
        if (t_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            C c = it->second;
            bool negative = c < 0;
            if (negative) c = -c;
            if (first) out += negative ? "-" : "";
            else out += negative ? " - " : " + ";
            first = false;
            std::string mono = q_string(it->first);
            std::string coef = coef_string(c);
            if (mono.empty()) out += coef;
            else if (c == 1) out += mono;
            else out += coef + mono;
        }
        return out;
    }

private:
    std::map<long, C> t_;

    void add_term(long h, const C& c) {
        if (c == 0) return;
        C& slot = t_[h];
        slot += c;
        if (slot == 0) t_.erase(h);
    }
    static std::string q_string(long h) {
        if (h == 0) return "";
        if (h == 2) return "q";
        if (h % 2 == 0) return "q^" + std::to_string(h / 2);
        return "q^(" + std::to_string(h) + "/2)";
    }
    static std::string coef_string(const C& c) {
        std::string s = c.get_str();
        if (s.find('/') != std::string::npos) return "(" + s + ")";
        return s;
    }
};

using QLaurent = Laurent<Integer>;
using RLaurent = Laurent<Rational>;

RLaurent to_rational(const QLaurent& l);

}  // namespace sph
