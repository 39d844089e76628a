#include "supply/rationalize.hpp"

#include "mixtures.hpp"

namespace supply {

template <typename Scalar>
BuildOutcome<Scalar> rationalize_build(const Dataset<Scalar>& ds, const CheckOptions& opts) {
  if (auto los = check_law_of_supply(ds, opts); !los.passed()) return los;
  if (auto h0 = check_homogeneity(ds, opts); !h0.passed()) return h0;

  RationalizationResult<Scalar> result;
  result.production_set = PolytopeV<Scalar>(image_points(ds));
  result.weak_verified = true;
  if (ds.empty()) return result;
  for (const auto& obs : ds.observations()) {
    const Scalar best = support_value(result.production_set, obs.price);
    Scalar margin(0);
    for (const auto& z : obs.plans) {
      const Scalar gap = best - dot(obs.price, z);
      if (margin < gap) margin = gap;
    }
    if (!negligible<Scalar>(margin, ds.tolerance())) result.weak_verified = false;
    result.margins.push_back(std::move(margin));
  }
  return result;
}

namespace {

template <typename Scalar>
void weak_condition(const Dataset<Scalar>& ds, std::size_t i, const Scalar& best,
                    CheckReport<Scalar>& report, const CheckOptions& opts) {
  const auto& obs = ds[i];
  for (std::size_t k = 0; k < obs.plans.size(); ++k) {
    ++report.stats.examined;
    const Scalar shortfall = best - dot(obs.price, obs.plans[k]);
    const Scalar gap = shortfall < 0 ? Scalar(-shortfall) : shortfall;
    if (!report.stats.worst_margin || *report.stats.worst_margin < gap) report.stats.worst_margin = gap;
    if (negligible<Scalar>(shortfall, ds.tolerance())) continue;
    ++report.stats.violations;
    if (report.witnesses.size() < opts.max_witnesses)
      report.witnesses.push_back(ShortfallWitness<Scalar>{i, k, shortfall});
  }
}

template <typename Scalar>
void require_dimension(const Dataset<Scalar>& ds, const PolytopeV<Scalar>& body) {
  if (body.empty()) throw std::invalid_argument("production set has no generators");
  if (body.dimension() != ds.dimension())
    throw DimensionError("production set dimension " + std::to_string(body.dimension()) +
                         " differs from dataset dimension " + std::to_string(ds.dimension()));
}

}  // namespace

template <typename Scalar>
CheckReport<Scalar> verify_weak(const Dataset<Scalar>& ds, const PolytopeV<Scalar>& production_set,
                                const CheckOptions& opts) {
  require_dimension(ds, production_set);
  CheckReport<Scalar> report;
  report.check = "verify_weak";
  for (std::size_t i = 0; i < ds.size(); ++i)
    weak_condition(ds, i, support_value(production_set, ds[i].price), report, opts);
  return report;
}

template <typename Scalar>
CheckReport<Scalar> verify_strong(const Dataset<Scalar>& ds, const PolytopeV<Scalar>& production_set,
                                  const CheckOptions& opts) {
  require_dimension(ds, production_set);
  using detail::contains_point;
  CheckReport<Scalar> report;
  report.check = "verify_strong";
  const double tol = ds.tolerance();

  auto missing = [&](std::size_t i, Vector<Scalar> point) {
    ++report.stats.violations;
    if (report.witnesses.size() < opts.max_witnesses)
      report.witnesses.push_back(MissingPlanWitness<Scalar>{i, std::move(point)});
  };

  for (std::size_t i = 0; i < ds.size(); ++i) {
    const auto& obs = ds[i];
    weak_condition(ds, i, support_value(production_set, obs.price), report, opts);

    const auto face = argmax_points(production_set, obs.price, tol);
    std::optional<PolytopeV<Scalar>> observed_hull;
    bool all_present = true;
    for (const auto& g : face) {
      ++report.stats.examined;
      bool present = contains_point(obs.plans, g, tol);
      if (!present && obs.kind == SetKind::hull) {
        if (!observed_hull) observed_hull.emplace(obs.plans);
        present = hull_membership(*observed_hull, g, tol).member;
      }
      if (!present) {
        all_present = false;
        missing(i, g);
      }
    }
    if (obs.kind == SetKind::finite && all_present && !detail::is_single_point(face, tol)) {
      auto outside = detail::first_mixture_outside<Scalar>(
          face, [&](const Vector<Scalar>& z) { return contains_point(obs.plans, z, tol); });
      if (outside) missing(i, std::move(*outside));
    }
  }
  return report;
}

template <typename Scalar>
std::optional<ExtensionWitness<Scalar>> extension_witness(const SupplyOracle<Scalar>& oracle,
                                                          const PolytopeV<Scalar>& production_set,
                                                          const std::vector<Vector<Scalar>>& probes,
                                                          const ProbeMixtures<Scalar>& mixtures,
                                                          double tol) {
  if (oracle.dimension() != production_set.dimension())
    throw DimensionError("extension_witness: oracle and production set dimensions differ");
  if constexpr (is_exact_v<Scalar>) tol = 0.0;

  std::vector<Supply<Scalar>> sampled;
  sampled.reserve(probes.size());
  for (const auto& q : probes) sampled.push_back(oracle_supply(oracle, q, tol));

  auto supplied = [&](const Supply<Scalar>& s, const Vector<Scalar>& z) {
    if (detail::contains_point(s.plans, z, tol)) return true;
    return s.kind == SetKind::hull && hull_membership(PolytopeV<Scalar>(s.plans), z, tol).member;
  };

  auto certify = [&](std::size_t t, Vector<Scalar> z) {
    const auto& p = probes[t];
    ExtensionWitness<Scalar> w;
    w.attains_support = negligible<Scalar>(Scalar(support_value(production_set, p) - dot(p, z)), tol);
    w.monotone_consistent = true;
    for (std::size_t u = 0; u < probes.size() && w.monotone_consistent; ++u)
      for (const auto& z2 : sampled[u].plans)
        if (!nonnegative<Scalar>(dot<Scalar>(p - probes[u], z - z2), tol)) {
          w.monotone_consistent = false;
          break;
        }
    w.structural = oracle.exact();
    w.probe = t;
    w.price = p;
    w.plan = std::move(z);
    return w;
  };

  for (std::size_t t = 0; t < probes.size(); ++t) {
    if (sampled[t].entire_set) continue;
    const auto face = argmax_points(production_set, probes[t], tol);
    if (!mixtures.weights.empty()) {
      for (const auto& weights : mixtures.weights) {
        if (weights.size() != face.size()) continue;
        Vector<Scalar> z = Vector<Scalar>::Zero(production_set.dimension());
        for (std::size_t k = 0; k < face.size(); ++k) z += weights[k] * face[k];
        if (!supplied(sampled[t], z)) return certify(t, std::move(z));
      }
      continue;
    }
    for (int d = 1; d <= mixtures.max_denominator; d *= 2)
      for (auto& z : dyadic_mixtures(face, d, mixtures.max_support))
        if (!supplied(sampled[t], z)) return certify(t, std::move(z));
  }
  return std::nullopt;
}

#define SUPPLY_INSTANTIATE_RATIONALIZE(S)                                                            \
  template BuildOutcome<S> rationalize_build<S>(const Dataset<S>&, const CheckOptions&);             \
  template CheckReport<S> verify_weak<S>(const Dataset<S>&, const PolytopeV<S>&, const CheckOptions&); \
  template CheckReport<S> verify_strong<S>(const Dataset<S>&, const PolytopeV<S>&,                    \
                                           const CheckOptions&);                                      \
  template std::optional<ExtensionWitness<S>> extension_witness<S>(                                  \
      const SupplyOracle<S>&, const PolytopeV<S>&, const std::vector<Vector<S>>&,                    \
      const ProbeMixtures<S>&, double);

SUPPLY_INSTANTIATE_RATIONALIZE(Rational)
SUPPLY_INSTANTIATE_RATIONALIZE(double)

}  // namespace supply
