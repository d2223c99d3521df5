#pragma once

#include <memory>

#include "sph/rational.hpp"

namespace sph {

// Rational polyhedral cone. Built from generators; the facet description and a
// canonical minimal generating set are computed at construction by double
// description, so a Cone is an immutable value.
class Cone {
public:
    Cone() : Cone(0, std::vector<QVec>{}) {}
    Cone(size_t ambient_dim, const std::vector<QVec>& generators);
    Cone(size_t ambient_dim, const IMat& generators);

    // {x : a.x >= 0 for a in ineqs, e.x = 0 for e in eqs}
    static Cone from_hrep(size_t ambient_dim, const std::vector<QVec>& ineqs,
                          const std::vector<QVec>& eqs = {});
    static Cone zero(size_t ambient_dim) { return Cone(ambient_dim, std::vector<QVec>{}); }
    static Cone full(size_t ambient_dim);

    size_t ambient_dim() const { return n_; }
    size_t dim() const { return n_ - equations_.size(); }

    // Canonical: lineality basis in rref (primitive, positive pivot), rays
    // orthogonal to the lineality space, primitive, sorted.
    const std::vector<QVec>& rays() const { return rays_; }
    const std::vector<QVec>& lineality() const { return lineality_; }
    // rays together with +/- the lineality basis
    std::vector<QVec> generators() const;

    // Inward facet normals and a basis of span(C)^perp.
    const std::vector<QVec>& facets() const { return facets_; }
    const std::vector<QVec>& equations() const { return equations_; }

    bool contains(const QVec& v) const;
    bool contains(const Cone& other) const;
    bool relint_contains(const QVec& v) const;
    bool is_strictly_convex() const { return lineality_.empty(); }
    bool is_zero() const { return rays_.empty() && lineality_.empty(); }

    Cone dual() const;
    Cone intersect(const Cone& other) const;
    // Image under a linear map given as rows (target_dim x n).
    Cone image(const QMat& rows) const;
    // Sum of the canonical rays: a point of the relative interior.
    QVec interior_point() const;

    bool operator==(const Cone& o) const {
        return n_ == o.n_ && rays_ == o.rays_ && lineality_ == o.lineality_;
    }
    bool operator!=(const Cone& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    size_t n_ = 0;
    std::vector<QVec> rays_, lineality_, facets_, equations_;
};

// Generators of {y : a.y >= 0 for all a in ineqs} by double description.
struct VRep {
    std::vector<QVec> lineality;
    std::vector<QVec> rays;
};
VRep double_description(size_t n, const std::vector<QVec>& ineqs);

// All integer points of c with l1-norm <= height, lexicographically sorted.
IMat lattice_points(const Cone& c, int height);

// Hilbert basis of the monoid c cap Z^n for a full-dimensional pointed cone.
IMat hilbert_basis(const Cone& c);

}  // namespace sph
