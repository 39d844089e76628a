#pragma once

// Finite samples of a supply correspondence: one observation per distinct
// price, each carrying the observed plans.

#include <cstddef>
#include <map>
#include <vector>

#include "supply/scalar.hpp"

namespace supply {

/// `finite`: the observed supply set is exactly the listed plans.
/// `hull`: it is the convex hull of the listed plans.
enum class SetKind { finite, hull };

enum class PriceDomain { all_reals, nonneg_orthant };

const char* to_string(SetKind kind);
const char* to_string(PriceDomain domain);

template <typename Scalar>
struct Observation {
  Vector<Scalar> price;
  std::vector<Vector<Scalar>> plans;
  SetKind kind = SetKind::finite;

  bool operator==(const Observation& other) const;
};

/// Validated observations sharing one dimension, scalar mode and tolerance.
///
/// Adding an observation whose price equals an existing one (exactly) merges
/// the plan lists. Plans are deduplicated within each observation, in order of
/// first appearance.
template <typename Scalar>
class Dataset {
 public:
  using scalar_type = Scalar;

  /// Throws DomainError when dimension < 2 or tolerance is negative/non-finite.
  explicit Dataset(Index dimension, double tolerance = is_exact_v<Scalar> ? 0.0 : kDefaultTolerance,
                   PriceDomain domain = PriceDomain::all_reals);

  /// Validates and inserts (or merges). Returns the observation index used.
  std::size_t add(Observation<Scalar> observation);

  Index dimension() const { return dimension_; }
  double tolerance() const { return tolerance_; }
  PriceDomain price_domain() const { return domain_; }
  static constexpr ScalarMode mode() { return scalar_mode<Scalar>(); }

  const std::vector<Observation<Scalar>>& observations() const { return observations_; }
  const Observation<Scalar>& operator[](std::size_t i) const { return observations_[i]; }
  std::size_t size() const { return observations_.size(); }
  bool empty() const { return observations_.empty(); }

  /// Total number of (price, plan) pairs.
  std::size_t plan_count() const;

  /// Overrides the comparison tolerance (float mode only; ignored when exact).
  void set_tolerance(double tolerance);

  bool operator==(const Dataset& other) const;

 private:
  Index dimension_;
  double tolerance_;
  PriceDomain domain_;
  std::vector<Observation<Scalar>> observations_;
  std::map<Vector<Scalar>, std::size_t, LexLess<Scalar>> by_price_;
};

/// One graph point (p, z): indices into a dataset.
struct GraphPoint {
  std::size_t observation = 0;
  std::size_t plan = 0;

  bool operator==(const GraphPoint&) const = default;
};

/// Flattened graph of a dataset, in observation order then plan order.
/// Holds a reference to the dataset; it must outlive the graph.
template <typename Scalar>
class FlatGraph {
 public:
  explicit FlatGraph(const Dataset<Scalar>& dataset);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const GraphPoint& operator[](std::size_t k) const { return points_[k]; }
  const std::vector<GraphPoint>& points() const { return points_; }

  const Vector<Scalar>& price(std::size_t k) const {
    return dataset_->observations()[points_[k].observation].price;
  }
  const Vector<Scalar>& plan(std::size_t k) const {
    const auto& pt = points_[k];
    return dataset_->observations()[pt.observation].plans[pt.plan];
  }
  const Dataset<Scalar>& dataset() const { return *dataset_; }

 private:
  const Dataset<Scalar>* dataset_;
  std::vector<GraphPoint> points_;
};

template <typename Scalar>
FlatGraph<Scalar> flatten(const Dataset<Scalar>& dataset) {
  return FlatGraph<Scalar>(dataset);
}

/// Deduplicated union of all observed plans, in order of first appearance.
template <typename Scalar>
std::vector<Vector<Scalar>> image_points(const Dataset<Scalar>& dataset);

}  // namespace supply
