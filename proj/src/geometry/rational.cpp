#include "sph/rational.hpp"

#include <sstream>

namespace sph {

QVec to_q(const IVec& v) {
    QVec out;
    out.reserve(v.size());
    for (long long x : v) out.emplace_back(Rational(Integer(static_cast<long>(x))));
    return out;
}

QMat to_q(const IMat& m) {
    QMat out;
    out.reserve(m.size());
    for (const auto& row : m) out.push_back(to_q(row));
    return out;
}

long long to_ll(const Integer& z) {
    if (!z.fits_slong_p()) throw input_error("integer out of machine range: " + z.get_str());
    return z.get_si();
}

long long to_ll(const Rational& r) {
    if (r.get_den() != 1) throw input_error("expected an integer, got " + r.get_str());
    return to_ll(r.get_num());
}

IVec to_i(const QVec& v) {
    IVec out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(to_ll(x));
    return out;
}

Rational dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw input_error("dimension mismatch in pairing");
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

long long dot(const IVec& a, const IVec& b) {
    if (a.size() != b.size()) throw input_error("dimension mismatch in pairing");
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

QVec add(const QVec& a, const QVec& b) {
    QVec out(a);
    for (size_t i = 0; i < a.size(); ++i) out[i] += b[i];
    return out;
}

QVec sub(const QVec& a, const QVec& b) {
    QVec out(a);
    for (size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
    return out;
}

QVec scale(const QVec& a, const Rational& c) {
    QVec out(a);
    for (auto& x : out) x *= c;
    return out;
}

QVec neg(const QVec& a) { return scale(a, Rational(-1)); }

bool is_zero(const QVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

bool is_integral(const QVec& v) {
    for (const auto& x : v)
        if (x.get_den() != 1) return false;
    return true;
}

QVec clear_denominators(const QVec& v) {
    Integer l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    QVec out(v);
    for (auto& x : out) x *= l;
    return out;
}

QVec primitive(const QVec& v) {
    QVec w = clear_denominators(v);
    Integer g = 0;
    for (const auto& x : w) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    if (g == 0) return w;
    for (auto& x : w) x /= g;
    return w;
}

Rational parse_rational(const std::string& s) {
    std::string t;
    for (char c : s)
        if (c != ' ') t.push_back(c);
    if (t.empty()) throw input_error("empty rational");
    auto dotpos = t.find('.');
    if (dotpos != std::string::npos) {
        std::string ip = t.substr(0, dotpos), fp = t.substr(dotpos + 1);
        bool negative = !ip.empty() && ip[0] == '-';
        if (negative) ip = ip.substr(1);
        if (ip.empty()) ip = "0";
        Integer den = 1;
        for (size_t i = 0; i < fp.size(); ++i) den *= 10;
        Rational r;
        try {
            r = Rational(Integer(ip + fp), den);
        } catch (...) {
            throw input_error("malformed rational '" + s + "'");
        }
        r.canonicalize();
        return negative ? Rational(-r) : r;
    }
    Rational r;
    try {
        r = Rational(t);
    } catch (...) {
        throw input_error("malformed rational '" + s + "'");
    }
    if (r.get_den() == 0) throw input_error("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const QVec& v) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
    os << ')';
    return os.str();
}

std::string to_string(const IVec& v) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

}  // namespace sph
