#pragma once

// Ground-truth supply correspondences. Polytope, ball and ellipsoid oracles
// return the exposed face of a convex body, so they are strongly
// rationalizable by construction. The two-good and rotation oracles are the
// standard counterexamples.

#include <variant>
#include <vector>

#include "supply/dataset.hpp"
#include "supply/geometry.hpp"

namespace supply {

template <typename Scalar>
struct PolytopeOracle {
  PolytopeV<Scalar> body;
};

/// Euclidean ball of the given radius centred at the origin. Float mode only.
struct BallOracle {
  Index dimension = 2;
  double radius = 1.0;
};

/// {A^{1/2} u : ‖u‖ ≤ 1} for a positive-definite shape matrix A. Float mode only.
struct EllipsoidOracle {
  Eigen::MatrixXd shape;
};

/// y(p) = (1,0) if p₁ > p₂, (0,1) if p₂ > p₁, S if p₁ = p₂, with S a finite
/// subset of the segment between (0,1) and (1,0) containing both endpoints.
template <typename Scalar>
struct Figure1Oracle {
  std::vector<Vector<Scalar>> tie_set;
};

/// Single-valued z = R(θ)p in the plane, 0 < θ ≤ 90 degrees.
template <typename Scalar>
struct RotationOracle {
  double degrees = 90.0;
  Matrix<Scalar> rotation;
};

template <typename Scalar>
class SupplyOracle {
 public:
  using Kind = std::variant<PolytopeOracle<Scalar>, BallOracle, EllipsoidOracle,
                            Figure1Oracle<Scalar>, RotationOracle<Scalar>>;

  static SupplyOracle polytope(PolytopeV<Scalar> body);
  /// Throws ModeError in rational mode.
  static SupplyOracle ball(Index dimension, double radius);
  /// Throws ModeError in rational mode, DomainError unless shape is symmetric positive definite.
  static SupplyOracle ellipsoid(const Eigen::MatrixXd& shape);
  /// Validates that `tie_set` lies on the segment and holds both endpoints.
  static SupplyOracle figure1(std::vector<Vector<Scalar>> tie_set);
  /// Rational mode accepts only θ = 90.
  static SupplyOracle rotation(double degrees);

  Index dimension() const;
  const Kind& kind() const { return kind_; }
  /// Whether evaluations are exact (rational mode and no irrational operations).
  bool exact() const;
  const char* name() const;

 private:
  explicit SupplyOracle(Kind kind) : kind_(std::move(kind)) {}
  Kind kind_;
};

template <typename Scalar>
struct Supply {
  std::vector<Vector<Scalar>> plans;
  SetKind kind = SetKind::finite;
  /// Set when the supply is the whole body (zero price on a ball or ellipsoid),
  /// which has no finite description; `plans` is then empty.
  bool entire_set = false;
};

/// y(p) for the oracle. Throws DimensionError on mismatched p.
template <typename Scalar>
Supply<Scalar> oracle_supply(const SupplyOracle<Scalar>& oracle, const Vector<Scalar>& p,
                             double tol = 0.0);

}  // namespace supply
