#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "supply/smooth.hpp"
#include "support/fixtures.hpp"

using namespace supply;
using namespace fixtures;

namespace {

/// Closed-form Jacobian of p ↦ r·p/‖p‖.
Eigen::MatrixXd ball_jacobian(const Eigen::VectorXd& p, double r) {
  const double n = p.norm();
  const Eigen::Index d = p.size();
  return r * (Eigen::MatrixXd::Identity(d, d) / n - p * p.transpose() / (n * n * n));
}

std::vector<Eigen::VectorXd> random_unit_prices(int count, Eigen::Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<Eigen::VectorXd> out;
  while (static_cast<int>(out.size()) < count) {
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = gauss(rng);
    if (v.norm() > 0) out.push_back(v / v.norm());
  }
  return out;
}

}  // namespace

TEST_SUITE("smooth") {
  TEST_CASE("ball Jacobian at a basis price") {
    const auto oracle = SupplyOracle<double>::ball(2, 1.0);
    const Eigen::MatrixXd J = numeric_jacobian(oracle, dv({1, 0}));
    Eigen::MatrixXd expected(2, 2);
    expected << 0, 0, 0, 1;
    CHECK((J - expected).cwiseAbs().maxCoeff() < 1e-9);
  }

  TEST_CASE("ball Jacobian matches the closed form") {
    for (double r : {0.5, 1.0, 3.0}) {
      const auto oracle = SupplyOracle<double>::ball(3, r);
      for (const auto& p : random_unit_prices(10, 3, 17)) {
        const Eigen::VectorXd q = 2.5 * p;
        CHECK((numeric_jacobian(oracle, q) - ball_jacobian(q, r)).cwiseAbs().maxCoeff() < 1e-8);
      }
    }
  }

  TEST_CASE("rotation Jacobian is the rotation matrix") {
    const auto oracle = SupplyOracle<double>::rotation(90);
    Eigen::MatrixXd expected(2, 2);
    expected << 0, -1, 1, 0;
    for (const auto& p : {dv({1, 0}), dv({0.3, -2}), dv({-5, 7})}) {
      const auto report = jacobian_report(oracle, p);
      CHECK((report.jacobian - expected).cwiseAbs().maxCoeff() < 1e-9);
      CHECK(report.symmetry_defect == doctest::Approx(2.0).epsilon(1e-9));
    }
  }

  TEST_CASE("rotation symmetry defect is 2|sin θ|") {
    for (double deg : {10.0, 30.0, 45.0, 60.0, 89.0}) {
      const auto report = jacobian_report(SupplyOracle<double>::rotation(deg), dv({0.7, -0.4}));
      const double expected = 2 * std::abs(std::sin(deg * std::numbers::pi / 180));
      CHECK(report.symmetry_defect == doctest::Approx(expected).epsilon(1e-8));
    }
  }

  TEST_CASE("constant oracle has zero Jacobian") {
    // A one-point polytope supplies the same plan at every price.
    const auto oracle = SupplyOracle<double>::polytope(PolytopeV<double>({dv({2, -1, 3})}));
    const auto report = jacobian_report(oracle, dv({0.2, 1, -4}));
    CHECK(report.jacobian.isZero(0));
    CHECK(report.symmetry_defect == 0);
    CHECK(report.euler_residual == 0);
  }

  TEST_CASE("ball passes at twenty random prices") {
    const auto check = check_jacobian_conditions(SupplyOracle<double>::ball(2, 1.0),
                                                 random_unit_prices(20, 2, 2024));
    CHECK(check.passed);
    REQUIRE(check.reports.size() == 20);
    for (const auto& r : check.reports) {
      CHECK(r.symmetry_defect <= 1e-6);
      CHECK(r.min_eigenvalue >= -1e-7);
      CHECK(r.euler_residual <= 1e-6);
      CHECK(r.step == 1e-5);
      CHECK_FALSE(r.error);
    }
  }

  TEST_CASE("rotation fails symmetry everywhere") {
    const auto check = check_jacobian_conditions(SupplyOracle<double>::rotation(90),
                                                 random_unit_prices(10, 2, 5));
    CHECK_FALSE(check.passed);
    for (const auto& r : check.reports) CHECK(r.symmetry_defect > 1e-6);
  }

  TEST_CASE("Euler condition holds along the ray") {
    const auto oracle = SupplyOracle<double>::ball(3, 1.0);
    for (const auto& p : random_unit_prices(5, 3, 99)) {
      CHECK(jacobian_report(oracle, p).euler_residual <= 1e-6);
      CHECK(jacobian_report(oracle, 2 * p).euler_residual <= 1e-6);
    }
  }

  TEST_CASE("Euler residual shrinks quadratically in the truncation regime") {
    const auto oracle = SupplyOracle<double>::ball(2, 1.0);
    for (const auto& p : random_unit_prices(20, 2, 31)) {
      for (double h = 1e-2; h > 2e-4; h /= 2) {
        const double coarse = jacobian_report(oracle, p, h).euler_residual;
        const double fine = jacobian_report(oracle, p, h / 2).euler_residual;
        if (coarse < 1e-8) continue;  // price along a symmetry axis
        CHECK(coarse / fine >= 3.5);
      }
    }
  }

  TEST_CASE("ellipsoid Jacobians are positive semidefinite") {
    Eigen::MatrixXd shape(3, 3);
    shape << 4, 1, 0, 1, 3, 0.5, 0, 0.5, 1;
    const auto check =
        check_jacobian_conditions(SupplyOracle<double>::ellipsoid(shape), random_unit_prices(15, 3, 12));
    CHECK(check.passed);
    for (const auto& r : check.reports) CHECK(r.min_eigenvalue >= -1e-7);
  }

  TEST_CASE("multi-valued stencil points are reported") {
    const auto oracle = SupplyOracle<double>::polytope(PolytopeV<double>({dv({0, 1}), dv({1, 0})}));
    try {
      numeric_jacobian(oracle, dv({1, 1}));
      FAIL("expected a stencil error");
    } catch (const StencilError& e) {
      CHECK(e.point() == dv({1, 1}));
    }
    const auto check = check_jacobian_conditions(oracle, {dv({2, 1}), dv({1, 1})});
    CHECK_FALSE(check.passed);
    REQUIRE(check.reports.size() == 2);
    CHECK_FALSE(check.reports[0].error);
    CHECK(check.reports[1].error);

    CHECK_THROWS_AS(numeric_jacobian(SupplyOracle<double>::ball(2, 1.0), dv({0, 0})), StencilError);
    CHECK_THROWS_AS(numeric_jacobian(SupplyOracle<double>::ball(2, 1.0), dv({1, 0}), 0.0), DomainError);
    CHECK_THROWS_AS(numeric_jacobian(SupplyOracle<double>::ball(2, 1.0), dv({1, 0, 0})), DimensionError);
  }

  TEST_CASE("steps scale with large coordinates") {
    const auto oracle = SupplyOracle<double>::ball(2, 1.0);
    const Eigen::VectorXd p = dv({300, -400});
    CHECK((numeric_jacobian(oracle, p) - ball_jacobian(p, 1.0)).cwiseAbs().maxCoeff() < 1e-10);
  }
}
