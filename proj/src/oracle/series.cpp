#include <algorithm>

#include "sph/oracle.hpp"

namespace sph::oracle {

namespace {

Error precision_error(const std::string& what) { return Error(ErrorKind::Precision, what); }

void check_prime(unsigned p) {
    if (p < 2 || p > 65521) throw input_error("residue characteristic must be a prime below 65536");
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) throw input_error("q = " + std::to_string(p) + " is not prime; only prime fields are modelled");
}

unsigned reduce(long long c, unsigned p) {
    long long r = c % static_cast<long long>(p);
    return static_cast<unsigned>(r < 0 ? r + p : r);
}

unsigned inv_mod(unsigned a, unsigned p) {
    // a^(p-2)
    unsigned long long r = 1, b = a, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<unsigned>(r);
}

}  // namespace

TruncSeries TruncSeries::zero(unsigned p, long hi) {
    check_prime(p);
    TruncSeries s;
    s.p_ = p;
    s.lo_ = s.hi_ = hi;
    return s;
}

TruncSeries TruncSeries::monomial(unsigned p, long N, long long c, long v) {
    return from_coeffs(p, N, v, {c});
}

TruncSeries TruncSeries::from_coeffs(unsigned p, long N, long v, const std::vector<long long>& c) {
    check_prime(p);
    if (N <= 0) throw input_error("precision must be positive");
    TruncSeries s;
    s.p_ = p;
    s.lo_ = v;
    s.hi_ = v + N;
    s.c_.assign(static_cast<size_t>(N), 0);
    for (size_t i = 0; i < c.size() && i < s.c_.size(); ++i) s.c_[i] = reduce(c[i], p);
    return s;
}

unsigned TruncSeries::coeff(long k) const {
    if (k >= hi_) throw precision_error("coefficient of t^" + std::to_string(k) + " is beyond the precision");
    if (k < lo_) return 0;
    return c_[static_cast<size_t>(k - lo_)];
}

bool TruncSeries::known_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](unsigned x) { return x == 0; });
}

long TruncSeries::effective_valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return lo_ + static_cast<long>(i);
    return hi_;
}

long TruncSeries::valuation() const {
    if (known_zero()) throw precision_error("valuation undetermined: zero modulo t^" + std::to_string(hi_));
    return effective_valuation();
}

void TruncSeries::check_compatible(const TruncSeries& o) const {
    if (p_ != o.p_) throw input_error("series over different residue fields");
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    check_compatible(o);
    TruncSeries r;
    r.p_ = p_;
    r.hi_ = std::min(hi_, o.hi_);
    r.lo_ = std::min({lo_, o.lo_, r.hi_});
    r.c_.resize(static_cast<size_t>(r.hi_ - r.lo_));
    for (long k = r.lo_; k < r.hi_; ++k) r.c_[static_cast<size_t>(k - r.lo_)] = (coeff(k) + o.coeff(k)) % p_;
    return r;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r = *this;
    for (auto& x : r.c_) x = (p_ - x) % p_;
    return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const { return *this + (-o); }

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    check_compatible(o);
    long va = effective_valuation(), vb = o.effective_valuation();
    TruncSeries r;
    r.p_ = p_;
    r.hi_ = std::min(hi_ + vb, o.hi_ + va);
    r.lo_ = std::min(va + vb, r.hi_);
    r.c_.assign(static_cast<size_t>(r.hi_ - r.lo_), 0);
    for (long i = va; i < hi_; ++i) {
        unsigned a = coeff(i);
        if (a == 0) continue;
        for (long j = vb; j < o.hi_ && i + j < r.hi_; ++j) {
            unsigned long long prod = static_cast<unsigned long long>(a) * o.coeff(j) % p_;
            unsigned& slot = r.c_[static_cast<size_t>(i + j - r.lo_)];
            slot = static_cast<unsigned>((slot + prod) % p_);
        }
    }
    return r;
}

TruncSeries TruncSeries::inverse() const {
    long v = valuation();
    long rel = hi_ - v;
    std::vector<unsigned> u(static_cast<size_t>(rel)), w(static_cast<size_t>(rel), 0);
    for (long i = 0; i < rel; ++i) u[static_cast<size_t>(i)] = coeff(v + i);
    unsigned w0 = inv_mod(u[0], p_);
    w[0] = w0;
    for (size_t k = 1; k < w.size(); ++k) {
        unsigned long long s = 0;
        for (size_t i = 1; i <= k; ++i) s = (s + static_cast<unsigned long long>(u[i]) * w[k - i]) % p_;
        w[k] = static_cast<unsigned>((p_ - s) % p_ * w0 % p_);
    }
    TruncSeries r;
    r.p_ = p_;
    r.lo_ = -v;
    r.hi_ = -v + rel;
    r.c_ = std::move(w);
    return r;
}

bool TruncSeries::congruent(const TruncSeries& o) const {
    check_compatible(o);
    long h = std::min(hi_, o.hi_);
    for (long k = std::min(lo_, o.lo_); k < h; ++k)
        if (coeff(k) != o.coeff(k)) return false;
    return true;
}

std::string TruncSeries::to_string() const {
    std::string out;
    for (long k = lo_; k < hi_; ++k) {
        unsigned c = coeff(k);
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        out += (c == 1 && k != 0 ? "" : std::to_string(c));
        if (k != 0) out += (c == 1 ? "" : "*") + std::string("t") + (k == 1 ? "" : "^" + std::to_string(k));
    }
    if (!out.empty()) out += " + ";
    return out + "O(t^" + std::to_string(hi_) + ")";
}

SMat mat_mul(const SMat& a, const SMat& b) {
    if (a.empty() || b.empty() || a[0].size() != b.size()) throw input_error("matrix sizes do not match");
    SMat r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b[0].size(); ++j) {
            TruncSeries s = a[i][0] * b[0][j];
            for (size_t k = 1; k < b.size(); ++k) s = s + a[i][k] * b[k][j];
            r[i].push_back(s);
        }
    return r;
}

TruncSeries det(const SMat& a) {
    size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw input_error("determinant of a non-square matrix");
    if (n == 1) return a[0][0];
    if (n == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
    if (n == 3) {
        return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
               a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
               a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    }
    throw Error(ErrorKind::UnsupportedRank, "determinants are modelled for n <= 3");
}

namespace {

void subsets(size_t n, size_t k, size_t start, std::vector<size_t>& cur, std::vector<std::vector<size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

IVec elementary_divisors(const SMat& a) {
    size_t n = a.size();
    if (n == 0 || n > 3) throw Error(ErrorKind::UnsupportedRank, "elementary divisors are modelled for n <= 3");
    IVec out;
    long prev = 0;
    for (size_t k = 1; k <= n; ++k) {
        std::vector<std::vector<size_t>> idx;
        std::vector<size_t> cur;
        subsets(n, k, 0, cur, idx);
        std::optional<long> best, unknown;  // unknown: least precision among vanishing minors
        for (const auto& rows : idx)
            for (const auto& cols : idx) {
                SMat sub;
                for (size_t r : rows) {
                    sub.emplace_back();
                    for (size_t c : cols) sub.back().push_back(a[r][c]);
                }
                TruncSeries m = det(sub);
                if (m.known_zero()) {
                    if (!unknown || m.hi() < *unknown) unknown = m.hi();
                    continue;
                }
                long v = m.valuation();
                if (!best || v < *best) best = v;
            }
        if (!best || (unknown && *unknown <= *best))
            throw Error(ErrorKind::Precision, "minors of size " + std::to_string(k) + " are not resolved at this precision");
        out.push_back(*best - prev);
        prev = *best;
    }
    return out;
}

SMat random_unit_matrix(size_t n, unsigned p, long N, std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> digit(0, p - 1);
    for (;;) {
        SMat m(n);
        for (auto& row : m)
            for (size_t j = 0; j < n; ++j) {
                std::vector<long long> c(static_cast<size_t>(N));
                for (auto& x : c) x = digit(rng);
                row.push_back(TruncSeries::from_coeffs(p, N, 0, c));
            }
        if (det(m).coeff(0) != 0) return m;
    }
}

}  // namespace sph::oracle
