#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sph {

using Integer = mpz_class;
using Rational = mpq_class;
using QVec = std::vector<Rational>;
using IVec = std::vector<long long>;
using QMat = std::vector<QVec>;
using IMat = std::vector<IVec>;

enum class ErrorKind {
    Input,
    NotQuasiAffine,
    HypothesisNotMet,
    NotACharacter,
    NotSl2Character,
    Precision,
    UnsupportedRank,
};

struct Error : std::runtime_error {
    ErrorKind kind;
    Error(ErrorKind k, const std::string& what) : std::runtime_error(what), kind(k) {}
};

inline Error input_error(const std::string& what) { return Error(ErrorKind::Input, what); }

inline Rational to_q(long long x) { return Rational(static_cast<long>(x)); }
QVec to_q(const IVec& v);
// Throws input error if some coordinate is not an integer.
IVec to_i(const QVec& v);
QMat to_q(const IMat& m);

Rational dot(const QVec& a, const QVec& b);
long long dot(const IVec& a, const IVec& b);
QVec add(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);
QVec scale(const QVec& a, const Rational& c);
QVec neg(const QVec& a);
bool is_zero(const QVec& v);
bool is_integral(const QVec& v);

// Positive multiple with coprime integer entries; zero stays zero.
QVec primitive(const QVec& v);
// Multiply by the lcm of denominators (positive), keeping direction.
QVec clear_denominators(const QVec& v);

// Exact rational from "a", "a/b" or a decimal like "0.5".
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& r);
std::string to_string(const QVec& v);
std::string to_string(const IVec& v);

long long to_ll(const Integer& z);
long long to_ll(const Rational& r);

}  // namespace sph
