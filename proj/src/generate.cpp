#include "supply/generate.hpp"

#include <cmath>

namespace supply {

namespace {

template <typename Scalar>
Vector<Scalar> lattice_point(Index n, int lo, int hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coord(lo, hi);
  Vector<Scalar> v(n);
  for (Index i = 0; i < n; ++i) v(i) = Scalar(coord(rng));
  return v;
}

template <typename Scalar>
Vector<Scalar> nonzero_lattice_point(Index n, int lo, int hi, std::mt19937_64& rng) {
  if (lo == 0 && hi == 0) throw DomainError("lattice box contains only the origin");
  for (;;) {
    Vector<Scalar> v = lattice_point<Scalar>(n, lo, hi, rng);
    if (!v.isZero()) return v;
  }
}

// Divides an integer vector by the gcd of its coordinates.
Vector<Rational> primitive(const Vector<Rational>& v) {
  Integer g(0);
  for (Index i = 0; i < v.size(); ++i) g = gcd(g, Integer(boost::multiprecision::numerator(v(i))));
  if (g <= 1) return v;
  return v / Rational(g);
}

template <typename Scalar>
std::vector<Vector<Scalar>> base_prices(Index n, const GeneratorConfig<Scalar>& cfg,
                                        std::mt19937_64& rng) {
  const bool nonneg = cfg.domain == PriceDomain::nonneg_orthant;
  std::vector<Vector<Scalar>> out;
  switch (cfg.sampler) {
    case PriceSampler::explicit_list:
      out = cfg.prices;
      break;
    case PriceSampler::unit_sphere:
      if constexpr (is_exact_v<Scalar>) {
        throw ModeError("unit-sphere prices require float mode");
      } else {
        std::normal_distribution<double> gauss;
        while (out.size() < cfg.count) {
          Eigen::VectorXd v(n);
          for (Index i = 0; i < n; ++i) v(i) = nonneg ? std::abs(gauss(rng)) : gauss(rng);
          const double norm = v.norm();
          if (norm > 0) out.push_back(v / norm);
        }
      }
      break;
    case PriceSampler::integer_grid: {
      const int r = cfg.grid_radius;
      if (r < 0) throw DomainError("grid radius must be nonnegative");
      const int lo = nonneg ? 0 : -r;
      if (cfg.count > 0) {
        for (std::size_t k = 0; k < cfg.count; ++k) out.push_back(lattice_point<Scalar>(n, lo, r, rng));
      } else {
        std::vector<int> digits(static_cast<std::size_t>(n), lo);
        for (;;) {
          Vector<Scalar> v(n);
          for (Index i = 0; i < n; ++i) v(i) = Scalar(digits[static_cast<std::size_t>(i)]);
          out.push_back(std::move(v));
          Index i = n - 1;
          while (i >= 0 && digits[static_cast<std::size_t>(i)] == r) digits[static_cast<std::size_t>(i--)] = lo;
          if (i < 0) break;
          ++digits[static_cast<std::size_t>(i)];
        }
      }
      break;
    }
  }
  return out;
}

}  // namespace

template <typename Scalar>
PolytopeV<Scalar> random_lattice_polytope(Index dimension, int min_points, int max_points, int box,
                                          std::mt19937_64& rng) {
  if (min_points < 1 || max_points < min_points) throw DomainError("invalid generator count range");
  std::uniform_int_distribution<int> count(min_points, max_points);
  const int k = count(rng);
  std::vector<Vector<Scalar>> points;
  for (int i = 0; i < k; ++i) points.push_back(lattice_point<Scalar>(dimension, -box, box, rng));
  return PolytopeV<Scalar>(points);
}

template <typename Scalar>
std::optional<Vector<Scalar>> tie_price(const PolytopeV<Scalar>& body, int box, std::mt19937_64& rng) {
  if (body.size() < 2) return std::nullopt;
  const Index n = body.dimension();
  const double tol = is_exact_v<Scalar> ? 0.0 : kDefaultTolerance;
  for (int attempt = 0; attempt < 256; ++attempt) {
    const Vector<Scalar> p = nonzero_lattice_point<Scalar>(n, -box, box, rng);
    const Vector<Scalar> dir = nonzero_lattice_point<Scalar>(n, -box, box, rng);
    const auto top = argmax_indices(body, p, tol);
    if (top.size() >= 2) return p;
    const Vector<Scalar> g = body.generator(top.front());

    // Smallest step t > 0 at which another generator catches up with g.
    std::optional<Scalar> step;
    for (Index h = 0; h < body.size(); ++h) {
      if (h == top.front()) continue;
      const Scalar lead = dot<Scalar>(p, g - body.generator(h));
      const Scalar gain = dot<Scalar>(dir, body.generator(h) - g);
      if (!(gain > 0)) continue;
      const Scalar t = lead / gain;
      if (!step || t < *step) step = t;
    }
    if (!step) continue;

    Vector<Scalar> tie;
    if constexpr (is_exact_v<Scalar>) {
      const Rational num(boost::multiprecision::numerator(*step));
      const Rational den(boost::multiprecision::denominator(*step));
      tie = primitive(Vector<Scalar>(den * p + num * dir));
    } else {
      tie = p + *step * dir;
    }
    if (tie.isZero()) continue;
    if (argmax_indices(body, tie, tol).size() >= 2) return tie;
  }
  return std::nullopt;
}

template <typename Scalar>
GenerationResult<Scalar> generate(const SupplyOracle<Scalar>& oracle, const GeneratorConfig<Scalar>& cfg) {
  const Index n = oracle.dimension();
  for (const auto& lambda : cfg.multipliers)
    if (!(lambda > 0)) throw DomainError("price multipliers must be positive");

  GenerationResult<Scalar> result{Dataset<Scalar>(n, cfg.tolerance, cfg.domain), 0};
  std::mt19937_64 rng(cfg.seed);
  auto prices = base_prices<Scalar>(n, cfg, rng);

  if (cfg.tie_prices > 0) {
    const auto* polytope = std::get_if<PolytopeOracle<Scalar>>(&oracle.kind());
    if (!polytope) throw DomainError("tie prices are only available for polytope oracles");
    if (cfg.domain == PriceDomain::nonneg_orthant)
      throw DomainError("tie prices are not restricted to the nonnegative orthant");
    for (std::size_t k = 0; k < cfg.tie_prices; ++k)
      if (auto p = tie_price(polytope->body, cfg.grid_radius, rng)) prices.push_back(std::move(*p));
  }

  const double tol = is_exact_v<Scalar> ? 0.0 : cfg.tolerance;
  auto emit = [&](const Vector<Scalar>& q) {
    auto s = oracle_supply(oracle, q, tol);
    if (s.entire_set) {
      ++result.skipped;
      return;
    }
    result.dataset.add(Observation<Scalar>{q, std::move(s.plans), s.kind});
  };
  for (const auto& p : prices) {
    emit(p);
    for (const auto& lambda : cfg.multipliers) emit(Vector<Scalar>(lambda * p));
  }
  return result;
}

template <typename Scalar>
Dataset<Scalar> perturb(const Dataset<Scalar>& ds, double sigma, std::uint64_t seed) {
  if constexpr (is_exact_v<Scalar>) {
    throw ModeError("perturbation requires float mode");
  } else {
    if (!(sigma >= 0) || !std::isfinite(sigma)) throw DomainError("noise scale must be finite and nonnegative");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> noise(-sigma, sigma);
    Dataset<Scalar> out(ds.dimension(), ds.tolerance(), ds.price_domain());
    for (const auto& obs : ds.observations()) {
      Observation<Scalar> moved{obs.price, obs.plans, obs.kind};
      if (sigma > 0)
        for (auto& z : moved.plans)
          for (Index i = 0; i < z.size(); ++i) z(i) += noise(rng);
      out.add(std::move(moved));
    }
    return out;
  }
}

#define SUPPLY_INSTANTIATE_GENERATE(S)                                                               \
  template GenerationResult<S> generate<S>(const SupplyOracle<S>&, const GeneratorConfig<S>&);       \
  template Dataset<S> perturb<S>(const Dataset<S>&, double, std::uint64_t);                          \
  template PolytopeV<S> random_lattice_polytope<S>(Index, int, int, int, std::mt19937_64&);          \
  template std::optional<Vector<S>> tie_price<S>(const PolytopeV<S>&, int, std::mt19937_64&);

SUPPLY_INSTANTIATE_GENERATE(Rational)
SUPPLY_INSTANTIATE_GENERATE(double)

}  // namespace supply
