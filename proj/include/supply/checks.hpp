#pragma once

// Property tests on finite supply data. Each returns a report whose witnesses
// are genuine violations of the named inequality; an empty witness list means
// the property holds on the sample.

#include <cstddef>
#include <optional>

#include "supply/report.hpp"

namespace supply {

struct CheckOptions {
  /// Worker threads for pairwise scans. Reports do not depend on this value.
  unsigned threads = 1;
  /// Cap on stored witnesses; `stats.violations` still counts all of them.
  std::size_t max_witnesses = 64;
  /// Cyclic monotonicity only: enumerate simple cycles up to this length
  /// instead of running the negative-cycle detector.
  std::optional<std::size_t> max_cycle_len;
};

/// (p − p')·(z − z') ≥ 0 over all unordered pairs of graph points.
template <typename Scalar>
CheckReport<Scalar> check_law_of_supply(const Dataset<Scalar>& ds, const CheckOptions& opts = {});

/// y(λp) = y(p) for every pair of observations on a common price ray.
template <typename Scalar>
CheckReport<Scalar> check_homogeneity(const Dataset<Scalar>& ds, const CheckOptions& opts = {});

/// p·z ≥ p·z' over all ordered pairs of graph points (weak axiom of profit maximization).
template <typename Scalar>
CheckReport<Scalar> check_wapm(const Dataset<Scalar>& ds, const CheckOptions& opts = {});

/// p·z is the same for every listed plan of each observation.
template <typename Scalar>
CheckReport<Scalar> check_constant_profit(const Dataset<Scalar>& ds, const CheckOptions& opts = {});

/// No directed cycle of graph points has negative total weight, where the edge
/// i → j weighs p_j·(z_j − z_i).
template <typename Scalar>
CheckReport<Scalar> check_cyclic_monotonicity(const Dataset<Scalar>& ds,
                                              const CheckOptions& opts = {});

/// Positive colinearity test: returns λ > 0 with q = λp, if any.
template <typename Scalar>
std::optional<Scalar> ray_multiplier(const Vector<Scalar>& p, const Vector<Scalar>& q, double tol);

/// Equality of two observed supply sets, honoring their set kinds. On
/// inequality returns a point of the symmetric difference and which side lacks it
/// (0 = first, 1 = second).
template <typename Scalar>
struct SetDifference {
  Vector<Scalar> point;
  int missing_from = 0;
};

template <typename Scalar>
std::optional<SetDifference<Scalar>> supply_set_difference(const Observation<Scalar>& a,
                                                           const Observation<Scalar>& b,
                                                           double tol);

}  // namespace supply
