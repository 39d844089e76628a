#pragma once

// Production sets in V-representation: support values, exposed faces and
// convex-hull membership, all by scanning a finite generator list.

#include <cstddef>
#include <vector>

#include "supply/scalar.hpp"

namespace supply {

/// Convex hull of finitely many production plans, stored column-wise.
/// Duplicate generators are dropped on construction; first occurrence wins.
template <typename Scalar>
class PolytopeV {
 public:
  using scalar_type = Scalar;

  PolytopeV() = default;
  explicit PolytopeV(const std::vector<Vector<Scalar>>& generators);

  Index dimension() const { return generators_.rows(); }
  Index size() const { return generators_.cols(); }
  bool empty() const { return generators_.cols() == 0; }

  const Matrix<Scalar>& generators() const { return generators_; }
  Vector<Scalar> generator(Index k) const { return generators_.col(k); }
  std::vector<Vector<Scalar>> generator_list() const;

  bool operator==(const PolytopeV& other) const {
    return generators_.rows() == other.generators_.rows() &&
           generators_.cols() == other.generators_.cols() && generators_ == other.generators_;
  }

 private:
  Matrix<Scalar> generators_;
};

/// p·z. Throws DimensionError on length mismatch.
template <typename Scalar>
Scalar dot(const Vector<Scalar>& p, const Vector<Scalar>& z);

/// Profit function of the represented hull: max over generators of p·z.
template <typename Scalar>
Scalar support_value(const PolytopeV<Scalar>& body, const Vector<Scalar>& p);

/// Column indices of the generators attaining the support value (within tol).
template <typename Scalar>
std::vector<Index> argmax_indices(const PolytopeV<Scalar>& body, const Vector<Scalar>& p,
                                  double tol = 0.0);

/// Generators spanning the exposed face in direction p.
template <typename Scalar>
std::vector<Vector<Scalar>> argmax_points(const PolytopeV<Scalar>& body, const Vector<Scalar>& p,
                                          double tol = 0.0);

template <typename Scalar>
struct HullMembership {
  bool member = false;
  /// Convex weights over the generators reproducing the query point; empty when not a member.
  Vector<Scalar> weights;

  explicit operator bool() const { return member; }
};

/// Decides z ∈ conv(generators) by a phase-one simplex. Exact pivoting in
/// rational mode; float mode accepts residuals up to tol.
template <typename Scalar>
HullMembership<Scalar> hull_membership(const PolytopeV<Scalar>& body, const Vector<Scalar>& z,
                                       double tol = 0.0);

/// Drops generators that lie in the hull of the remaining ones. The hull is unchanged.
template <typename Scalar>
PolytopeV<Scalar> remove_redundant(const PolytopeV<Scalar>& body, double tol = 0.0);

/// Mixtures of up to `max_support` of `points` whose weights have denominator
/// exactly `denominator` (a power of two, or 1 for the points themselves) and
/// are not expressible with a smaller power of two. Sorted lexicographically,
/// duplicates removed.
template <typename Scalar>
std::vector<Vector<Scalar>> dyadic_mixtures(const std::vector<Vector<Scalar>>& points,
                                            int denominator, int max_support = 4);

}  // namespace supply
