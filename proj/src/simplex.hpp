#pragma once

// Phase-one simplex on a dense tableau with Bland's rule. Finds nonnegative
// weights w with A w = b, or reports infeasibility. Rational instantiations
// pivot exactly; double ones treat entries below `eps` as zero.

#include <algorithm>
#include <optional>
#include <vector>

#include "supply/scalar.hpp"

namespace supply::detail {

template <typename Scalar>
std::optional<Vector<Scalar>> feasible_nonnegative(const Matrix<Scalar>& A, const Vector<Scalar>& b,
                                                   double tol) {
  const Index rows = A.rows();
  const Index cols = A.cols();
  const Index width = cols + rows + 1;  // structural | artificial | rhs
  const Index rhs = width - 1;
  const double eps = is_exact_v<Scalar> ? 0.0 : std::max(tol * 1e-3, 1e-14);

  auto positive = [&](const Scalar& v) {
    if constexpr (is_exact_v<Scalar>)
      return v > 0;
    else
      return v > eps;
  };

  Matrix<Scalar> T = Matrix<Scalar>::Zero(rows + 1, width);
  std::vector<Index> basis(static_cast<std::size_t>(rows));
  for (Index i = 0; i < rows; ++i) {
    const bool flip = b(i) < 0;
    for (Index j = 0; j < cols; ++j) T(i, j) = flip ? Scalar(-A(i, j)) : A(i, j);
    T(i, rhs) = flip ? Scalar(-b(i)) : b(i);
    T(i, cols + i) = Scalar(1);
    basis[static_cast<std::size_t>(i)] = cols + i;
  }
  // Objective row holds reduced costs of sum(artificials) and minus its value.
  for (Index j = 0; j < cols; ++j) {
    Scalar s(0);
    for (Index i = 0; i < rows; ++i) s -= T(i, j);
    T(rows, j) = s;
  }
  {
    Scalar s(0);
    for (Index i = 0; i < rows; ++i) s -= T(i, rhs);
    T(rows, rhs) = s;
  }

  const Index max_iterations = 50 * (width + 1) * (rows + 1);
  for (Index iter = 0; iter < max_iterations; ++iter) {
    Index enter = -1;
    for (Index j = 0; j < cols + rows; ++j) {
      if (positive(Scalar(-T(rows, j)))) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    Index leave = -1;
    Scalar best_ratio(0);
    for (Index i = 0; i < rows; ++i) {
      if (!positive(T(i, enter))) continue;
      const Scalar ratio = T(i, rhs) / T(i, enter);
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[static_cast<std::size_t>(i)] <
                                      basis[static_cast<std::size_t>(leave)])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) break;  // unbounded direction; cannot happen for phase one

    const Scalar pivot = T(leave, enter);
    T.row(leave) /= pivot;
    for (Index i = 0; i <= rows; ++i) {
      if (i == leave) continue;
      const Scalar factor = T(i, enter);
      if (factor == 0) continue;
      T.row(i) -= factor * T.row(leave);
    }
    basis[static_cast<std::size_t>(leave)] = enter;
  }

  const Scalar infeasibility = -T(rows, rhs);
  if (!negligible<Scalar>(infeasibility, tol)) return std::nullopt;

  Vector<Scalar> w = Vector<Scalar>::Zero(cols);
  for (Index i = 0; i < rows; ++i) {
    const Index var = basis[static_cast<std::size_t>(i)];
    if (var < cols) w(var) = T(i, rhs);
  }
  if constexpr (!is_exact_v<Scalar>) w = w.cwiseMax(0.0);
  return w;
}

}  // namespace supply::detail
