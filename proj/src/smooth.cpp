#include "supply/smooth.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace supply {

namespace {

Eigen::VectorXd single_value(const SupplyOracle<double>& oracle, const Eigen::VectorXd& q) {
  auto s = oracle_supply(oracle, q);
  if (s.entire_set || s.plans.size() != 1)
    throw StencilError("oracle is not single-valued at " + format_vector<double>(q), q);
  return s.plans.front();
}

}  // namespace

Eigen::MatrixXd numeric_jacobian(const SupplyOracle<double>& oracle, const Eigen::VectorXd& p, double h) {
  if (p.size() != oracle.dimension()) throw DimensionError("numeric_jacobian: dimension mismatch");
  if (!(h > 0)) throw DomainError("numeric_jacobian: step must be positive");
  single_value(oracle, p);
  const Index n = p.size();
  Eigen::MatrixXd J(n, n);
  for (Index i = 0; i < n; ++i) {
    const double step = h * std::max(std::abs(p(i)), 1.0);
    Eigen::VectorXd up = p, down = p;
    up(i) += step;
    down(i) -= step;
    // Use the steps actually representable in floating point.
    J.col(i) = (single_value(oracle, up) - single_value(oracle, down)) / (up(i) - down(i));
  }
  return J;
}

JacobianReport jacobian_report(const SupplyOracle<double>& oracle, const Eigen::VectorXd& p, double h) {
  JacobianReport r;
  r.price = p;
  r.step = h;
  r.jacobian = numeric_jacobian(oracle, p, h);
  r.symmetry_defect = (r.jacobian - r.jacobian.transpose()).cwiseAbs().maxCoeff();
  const Eigen::MatrixXd sym = 0.5 * (r.jacobian + r.jacobian.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym, Eigen::EigenvaluesOnly);
  r.min_eigenvalue = eig.eigenvalues().minCoeff();
  r.euler_residual = (r.jacobian * p).cwiseAbs().maxCoeff();
  return r;
}

JacobianCheck check_jacobian_conditions(const SupplyOracle<double>& oracle,
                                        const std::vector<Eigen::VectorXd>& prices, double h,
                                        const JacobianTolerances& tol) {
  JacobianCheck out;
  out.passed = true;
  for (const auto& p : prices) {
    JacobianReport r;
    try {
      r = jacobian_report(oracle, p, h);
    } catch (const StencilError& e) {
      r.price = p;
      r.step = h;
      r.error = e.what();
      out.passed = false;
      out.reports.push_back(std::move(r));
      continue;
    }
    if (r.symmetry_defect > tol.symmetry || r.min_eigenvalue < -tol.psd || r.euler_residual > tol.euler)
      out.passed = false;
    out.reports.push_back(std::move(r));
  }
  return out;
}

}  // namespace supply
