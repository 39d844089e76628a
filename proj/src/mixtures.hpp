#pragma once

#include <optional>
#include <vector>

#include "supply/geometry.hpp"

namespace supply::detail {

/// First dyadic mixture of `face` (coarsest grid first, lexicographic within a
/// grid) rejected by `contains`. Grids finer than 1/8 mix only pairs of points.
template <typename Scalar, typename Contains>
std::optional<Vector<Scalar>> first_mixture_outside(const std::vector<Vector<Scalar>>& face,
                                                    Contains&& contains,
                                                    int max_denominator = 1 << 16) {
  for (int d = 1; d <= max_denominator; d *= 2) {
    for (auto& z : dyadic_mixtures(face, d, d <= 8 ? 4 : 2))
      if (!contains(z)) return std::move(z);
  }
  return std::nullopt;
}

template <typename Scalar>
bool contains_point(const std::vector<Vector<Scalar>>& points, const Vector<Scalar>& z,
                    double tol) {
  for (const auto& q : points)
    if (approx_equal<Scalar>(q, z, tol)) return true;
  return false;
}

/// True when all points coincide (within tol), i.e. their hull is a single point.
template <typename Scalar>
bool is_single_point(const std::vector<Vector<Scalar>>& points, double tol) {
  for (const auto& q : points)
    if (!approx_equal<Scalar>(q, points.front(), tol)) return false;
  return true;
}

}  // namespace supply::detail
