#include "sph/laurent.hpp"

namespace sph {

namespace {

void check_same(const QuadVal& x, const QuadVal& y) {
    if (x.b != 0 && y.b != 0 && x.d != y.d) throw input_error("mixing values from different quadratic fields");
}

Rational field(const QuadVal& x, const QuadVal& y) { return x.b != 0 ? x.d : y.d; }

}  // namespace

bool rational_sqrt(const Rational& x, Rational& root) {
    if (x < 0) return false;
    Integer n = x.get_num(), d = x.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    root = Rational(rn, rd);
    root.canonicalize();
    return true;
}

QuadVal QuadVal::operator+(const QuadVal& o) const {
    check_same(*this, o);
    return {a + o.a, b + o.b, field(*this, o)};
}

QuadVal QuadVal::operator-(const QuadVal& o) const {
    check_same(*this, o);
    return {a - o.a, b - o.b, field(*this, o)};
}

QuadVal QuadVal::operator*(const QuadVal& o) const {
    check_same(*this, o);
    Rational dd = field(*this, o);
    return {a * o.a + b * o.b * dd, a * o.b + b * o.a, dd};
}

int QuadVal::sign() const {
    int sa = sgn(a), sb = sgn(b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with b^2 d
    Rational l = a * a, r = b * b * d;
    if (l == r) return 0;
    return l > r ? sa : sb;
}

bool QuadVal::operator==(const QuadVal& o) const { return (*this - o).sign() == 0; }

std::string QuadVal::to_string() const {
    if (b == 0) return sph::to_string(a);
    std::string s = a == 0 ? "" : sph::to_string(a) + (b > 0 ? " + " : " - ");
    Rational bb = a == 0 ? b : abs(b);
    std::string coef = bb == 1 ? "" : (bb == -1 ? "-" : sph::to_string(bb) + "*");
    return s + coef + "sqrt(" + sph::to_string(d) + ")";
}

RLaurent to_rational(const QLaurent& l) {
    RLaurent r;
    for (const auto& [h, c] : l.terms()) r += RLaurent::monomial(Rational(c), h);
    return r;
}

}  // namespace sph
