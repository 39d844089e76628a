#pragma once

// Finite-difference checks of the differentiable characterization of
// single-valued supply functions: Dy(p) symmetric and positive semidefinite,
// and Dy(p)·p = 0.

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "supply/oracle.hpp"

namespace supply {

/// The oracle was not single-valued at a stencil point.
class StencilError : public Error {
 public:
  StencilError(const std::string& what, Eigen::VectorXd point) : Error(what), point_(std::move(point)) {}
  const Eigen::VectorXd& point() const { return point_; }

 private:
  Eigen::VectorXd point_;
};

struct JacobianReport {
  Eigen::VectorXd price;
  Eigen::MatrixXd jacobian;
  /// max |J − Jᵀ| entrywise.
  double symmetry_defect = 0;
  /// Smallest eigenvalue of (J + Jᵀ)/2.
  double min_eigenvalue = 0;
  /// ‖J·p‖∞.
  double euler_residual = 0;
  double step = 0;
  /// Set when the stencil failed at this price; the numeric fields are then unset.
  std::optional<std::string> error;
};

struct JacobianTolerances {
  double symmetry = 1e-6;
  double psd = 1e-7;
  double euler = 1e-6;
};

struct JacobianCheck {
  std::vector<JacobianReport> reports;
  bool passed = false;
};

/// Central differences, column i from y(p ± h_i e_i) with h_i = h·max(|p_i|, 1).
/// Entry (k, i) approximates ∂y_k/∂p_i. Throws StencilError unless y is
/// single-valued at p and at every stencil point.
Eigen::MatrixXd numeric_jacobian(const SupplyOracle<double>& oracle, const Eigen::VectorXd& p,
                                 double h = 1e-5);

/// Jacobian plus its symmetry, PSD and Euler diagnostics. Throws StencilError.
JacobianReport jacobian_report(const SupplyOracle<double>& oracle, const Eigen::VectorXd& p,
                               double h = 1e-5);

/// Reports at every price; a stencil failure is recorded on that price's
/// report and fails the verdict.
JacobianCheck check_jacobian_conditions(const SupplyOracle<double>& oracle,
                                        const std::vector<Eigen::VectorXd>& prices, double h = 1e-5,
                                        const JacobianTolerances& tol = {});

}  // namespace supply
