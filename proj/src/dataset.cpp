#include "supply/dataset.hpp"

#include <cmath>
#include <set>
#include <string>

namespace supply {

const char* to_string(SetKind kind) {
  return kind == SetKind::hull ? "hull" : "finite";
}

const char* to_string(PriceDomain domain) {
  return domain == PriceDomain::nonneg_orthant ? "nonneg_orthant" : "all_reals";
}

template <typename Scalar>
bool Observation<Scalar>::operator==(const Observation& other) const {
  if (kind != other.kind || price.size() != other.price.size() || price != other.price ||
      plans.size() != other.plans.size())
    return false;
  for (std::size_t k = 0; k < plans.size(); ++k)
    if (plans[k].size() != other.plans[k].size() || plans[k] != other.plans[k]) return false;
  return true;
}

template <typename Scalar>
Dataset<Scalar>::Dataset(Index dimension, double tolerance, PriceDomain domain)
    : dimension_(dimension), tolerance_(is_exact_v<Scalar> ? 0.0 : tolerance), domain_(domain) {
  if (dimension < 2)
    throw DomainError("dataset dimension must be at least 2, got " + std::to_string(dimension));
  if (!std::isfinite(tolerance) || tolerance < 0)
    throw DomainError("tolerance must be finite and nonnegative");
}

template <typename Scalar>
void Dataset<Scalar>::set_tolerance(double tolerance) {
  if (!std::isfinite(tolerance) || tolerance < 0)
    throw DomainError("tolerance must be finite and nonnegative");
  if constexpr (!is_exact_v<Scalar>) tolerance_ = tolerance;
}

template <typename Scalar>
std::size_t Dataset<Scalar>::add(Observation<Scalar> observation) {
  const std::size_t index = observations_.size();
  auto check_vector = [&](const Vector<Scalar>& v, const char* what) {
    if (v.size() != dimension_)
      throw DimensionError(std::string("observation ") + std::to_string(index) + ": " + what +
                           " has " + std::to_string(v.size()) + " coordinates, expected " +
                           std::to_string(dimension_));
    if constexpr (!is_exact_v<Scalar>) {
      if (!v.allFinite())
        throw DomainError(std::string("observation ") + std::to_string(index) + ": " + what +
                          " has a non-finite coordinate");
    }
  };

  check_vector(observation.price, "price");
  if (observation.plans.empty())
    throw DomainError("observation " + std::to_string(index) + ": empty plan list");
  for (const auto& z : observation.plans) check_vector(z, "plan");
  if (domain_ == PriceDomain::nonneg_orthant && (observation.price.array() < Scalar(0)).any())
    throw DomainError("observation " + std::to_string(index) + ": price " +
                      format_vector(observation.price) + " outside the nonnegative orthant");

  Observation<Scalar>* target = nullptr;
  if (auto found = by_price_.find(observation.price); found != by_price_.end()) {
    target = &observations_[found->second];
  } else {
    by_price_.emplace(observation.price, index);
    observations_.push_back(Observation<Scalar>{std::move(observation.price), {}, observation.kind});
    target = &observations_.back();
  }
  if (target->kind != observation.kind) {
    throw DomainError("price " + format_vector(observation.price) +
                      " appears with conflicting set_kind values");
  }

  std::set<Vector<Scalar>, LexLess<Scalar>> seen(target->plans.begin(), target->plans.end());
  for (auto& z : observation.plans)
    if (seen.insert(z).second) target->plans.push_back(std::move(z));
  return static_cast<std::size_t>(target - observations_.data());
}

template <typename Scalar>
std::size_t Dataset<Scalar>::plan_count() const {
  std::size_t m = 0;
  for (const auto& obs : observations_) m += obs.plans.size();
  return m;
}

template <typename Scalar>
bool Dataset<Scalar>::operator==(const Dataset& other) const {
  return dimension_ == other.dimension_ && tolerance_ == other.tolerance_ &&
         domain_ == other.domain_ && observations_ == other.observations_;
}

template <typename Scalar>
FlatGraph<Scalar>::FlatGraph(const Dataset<Scalar>& dataset) : dataset_(&dataset) {
  points_.reserve(dataset.plan_count());
  for (std::size_t i = 0; i < dataset.size(); ++i)
    for (std::size_t k = 0; k < dataset[i].plans.size(); ++k) points_.push_back({i, k});
}

template <typename Scalar>
std::vector<Vector<Scalar>> image_points(const Dataset<Scalar>& dataset) {
  std::vector<Vector<Scalar>> out;
  std::set<Vector<Scalar>, LexLess<Scalar>> seen;
  for (const auto& obs : dataset.observations())
    for (const auto& z : obs.plans)
      if (seen.insert(z).second) out.push_back(z);
  return out;
}

template struct Observation<Rational>;
template struct Observation<double>;
template class Dataset<Rational>;
template class Dataset<double>;
template class FlatGraph<Rational>;
template class FlatGraph<double>;
template std::vector<Vector<Rational>> image_points(const Dataset<Rational>&);
template std::vector<Vector<double>> image_points(const Dataset<double>&);

}  // namespace supply
