#pragma once

#include <optional>

#include "sph/rational.hpp"

namespace sph {

enum class Rel { Ge, Gt, Eq, Lt, Le };

// normal . x + constant  (rel)  0
struct Constraint {
    QVec normal;
    Rational constant = 0;
    Rel rel = Rel::Ge;
};

struct LinearSystem {
    size_t dim = 0;
    std::vector<Constraint> constraints;

    explicit LinearSystem(size_t n = 0) : dim(n) {}
    LinearSystem& add(QVec normal, Rel rel, Rational constant = 0) {
        constraints.push_back({std::move(normal), std::move(constant), rel});
        return *this;
    }
    bool satisfied_by(const QVec& x) const;
};

bool holds(const Constraint& c, const QVec& x);

// Fourier-Motzkin elimination with open/closed bookkeeping. Returns a witness
// satisfying every constraint exactly, or nothing when infeasible over Q.
std::optional<QVec> feasible(const LinearSystem& sys);

const char* rel_symbol(Rel r);

}  // namespace sph
