#include "supply/oracle.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

namespace supply {

template <typename Scalar>
SupplyOracle<Scalar> SupplyOracle<Scalar>::polytope(PolytopeV<Scalar> body) {
  if (body.empty()) throw std::invalid_argument("polytope oracle: empty generator list");
  return SupplyOracle(PolytopeOracle<Scalar>{std::move(body)});
}

template <typename Scalar>
SupplyOracle<Scalar> SupplyOracle<Scalar>::ball(Index dimension, double radius) {
  if constexpr (is_exact_v<Scalar>) {
    throw ModeError("ball oracle requires float mode");
  } else {
    if (dimension < 2) throw DomainError("ball oracle: dimension must be at least 2");
    if (!(radius > 0) || !std::isfinite(radius)) throw DomainError("ball oracle: radius must be positive");
    return SupplyOracle(BallOracle{dimension, radius});
  }
}

template <typename Scalar>
SupplyOracle<Scalar> SupplyOracle<Scalar>::ellipsoid(const Eigen::MatrixXd& shape) {
  if constexpr (is_exact_v<Scalar>) {
    throw ModeError("ellipsoid oracle requires float mode");
  } else {
    if (shape.rows() != shape.cols() || shape.rows() < 2)
      throw DomainError("ellipsoid oracle: shape must be square with dimension at least 2");
    if (!shape.isApprox(shape.transpose()))
      throw DomainError("ellipsoid oracle: shape must be symmetric");
    if (Eigen::LLT<Eigen::MatrixXd>(shape).info() != Eigen::Success)
      throw DomainError("ellipsoid oracle: shape must be positive definite");
    return SupplyOracle(EllipsoidOracle{shape});
  }
}

template <typename Scalar>
SupplyOracle<Scalar> SupplyOracle<Scalar>::figure1(std::vector<Vector<Scalar>> tie_set) {
  const Vector<Scalar> e1 = make_vector<Scalar>({Scalar(1), Scalar(0)});
  const Vector<Scalar> e2 = make_vector<Scalar>({Scalar(0), Scalar(1)});
  bool has_e1 = false, has_e2 = false;
  for (const auto& z : tie_set) {
    if (z.size() != 2) throw DimensionError("figure1 oracle: tie set points must be 2-dimensional");
    const double tol = is_exact_v<Scalar> ? 0.0 : kDefaultTolerance;
    if (!approx_equal<Scalar>(Scalar(z(0) + z(1)), Scalar(1), tol) || !nonnegative(z(0), tol) ||
        !nonnegative(z(1), tol))
      throw DomainError("figure1 oracle: " + format_vector(z) + " is off the segment [(0,1),(1,0)]");
    has_e1 = has_e1 || z == e1;
    has_e2 = has_e2 || z == e2;
  }
  if (!has_e1 || !has_e2) throw DomainError("figure1 oracle: tie set must contain (1,0) and (0,1)");
  return SupplyOracle(Figure1Oracle<Scalar>{PolytopeV<Scalar>(tie_set).generator_list()});
}

template <typename Scalar>
SupplyOracle<Scalar> SupplyOracle<Scalar>::rotation(double degrees) {
  if (!(degrees > 0) || degrees > 90) throw DomainError("rotation oracle: angle must lie in (0, 90] degrees");
  Matrix<Scalar> r(2, 2);
  if (degrees == 90) {
    r << Scalar(0), Scalar(-1), Scalar(1), Scalar(0);
  } else if constexpr (is_exact_v<Scalar>) {
    throw ModeError("rotation oracle: only 90 degrees is exact in rational mode");
  } else {
    const double t = degrees * std::numbers::pi / 180.0;
    r << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
  }
  return SupplyOracle(RotationOracle<Scalar>{degrees, r});
}

template <typename Scalar>
Index SupplyOracle<Scalar>::dimension() const {
  return std::visit(
      [](const auto& o) -> Index {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, PolytopeOracle<Scalar>>)
          return o.body.dimension();
        else if constexpr (std::is_same_v<T, BallOracle>)
          return o.dimension;
        else if constexpr (std::is_same_v<T, EllipsoidOracle>)
          return o.shape.rows();
        else
          return 2;
      },
      kind_);
}

template <typename Scalar>
bool SupplyOracle<Scalar>::exact() const {
  if constexpr (!is_exact_v<Scalar>) return false;
  return !std::holds_alternative<BallOracle>(kind_) && !std::holds_alternative<EllipsoidOracle>(kind_);
}

template <typename Scalar>
const char* SupplyOracle<Scalar>::name() const {
  static constexpr const char* names[] = {"polytope", "ball", "ellipsoid", "figure1", "rotation"};
  return names[kind_.index()];
}

template <typename Scalar>
Supply<Scalar> oracle_supply(const SupplyOracle<Scalar>& oracle, const Vector<Scalar>& p, double tol) {
  if (p.size() != oracle.dimension())
    throw DimensionError("oracle_supply: price has " + std::to_string(p.size()) +
                         " coordinates, oracle expects " + std::to_string(oracle.dimension()));
  return std::visit(
      [&](const auto& o) -> Supply<Scalar> {
        using T = std::decay_t<decltype(o)>;
        Supply<Scalar> out;
        if constexpr (std::is_same_v<T, PolytopeOracle<Scalar>>) {
          out.plans = argmax_points(o.body, p, tol);
          out.kind = SetKind::hull;
        } else if constexpr (std::is_same_v<T, BallOracle>) {
          if constexpr (!is_exact_v<Scalar>) {
            const double norm = p.norm();
            if (norm == 0) {
              out.entire_set = true;
            } else {
              out.plans.push_back(o.radius * p / norm);
            }
          }
        } else if constexpr (std::is_same_v<T, EllipsoidOracle>) {
          if constexpr (!is_exact_v<Scalar>) {
            const Eigen::VectorXd ap = o.shape * p;
            const double scale = std::sqrt(p.dot(ap));
            if (scale == 0) {
              out.entire_set = true;
            } else {
              out.plans.push_back(ap / scale);
            }
          }
        } else if constexpr (std::is_same_v<T, Figure1Oracle<Scalar>>) {
          if (approx_equal<Scalar>(p(0), p(1), tol))
            out.plans = o.tie_set;
          else if (p(1) < p(0))
            out.plans.push_back(make_vector<Scalar>({Scalar(1), Scalar(0)}));
          else
            out.plans.push_back(make_vector<Scalar>({Scalar(0), Scalar(1)}));
        } else {
          out.plans.push_back(o.rotation * p);
        }
        return out;
      },
      oracle.kind());
}

template class SupplyOracle<Rational>;
template class SupplyOracle<double>;
template Supply<Rational> oracle_supply(const SupplyOracle<Rational>&, const Vector<Rational>&, double);
template Supply<double> oracle_supply(const SupplyOracle<double>&, const Vector<double>&, double);

}  // namespace supply
