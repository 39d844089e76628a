#pragma once

// Seeded dataset generation from supply oracles, and noise perturbation for
// negative controls. Output is a pure function of the configuration.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "supply/dataset.hpp"
#include "supply/oracle.hpp"

namespace supply {

enum class PriceSampler {
  /// Uniform on the unit sphere. Float mode only.
  unit_sphere,
  /// Integer points of [−grid_radius, grid_radius]^N: `count` random draws, or
  /// the whole box in lexicographic order when `count` is 0.
  integer_grid,
  /// `prices` verbatim.
  explicit_list,
};

template <typename Scalar>
struct GeneratorConfig {
  PriceSampler sampler = PriceSampler::explicit_list;
  std::size_t count = 0;
  int grid_radius = 5;
  std::vector<Vector<Scalar>> prices;
  /// Each sampled price p is followed by λ·p for every multiplier λ > 0.
  std::vector<Scalar> multipliers;
  std::uint64_t seed = 0;
  /// Extra prices at which the polytope oracle's face has two or more
  /// generators (polytope oracles only).
  std::size_t tie_prices = 0;
  PriceDomain domain = PriceDomain::all_reals;
  double tolerance = kDefaultTolerance;
};

template <typename Scalar>
struct GenerationResult {
  Dataset<Scalar> dataset;
  /// Prices at which the oracle had no finite answer (zero price on a ball).
  std::size_t skipped = 0;
};

template <typename Scalar>
GenerationResult<Scalar> generate(const SupplyOracle<Scalar>& oracle,
                                  const GeneratorConfig<Scalar>& cfg);

/// Adds independent uniform noise in [−σ, σ] to every plan coordinate. Prices are
/// left untouched. Throws ModeError on exact datasets.
template <typename Scalar>
Dataset<Scalar> perturb(const Dataset<Scalar>& ds, double sigma, std::uint64_t seed);

/// Random integer polytope: between `min_points` and `max_points` lattice
/// points drawn from [−box, box]^N (duplicates dropped).
template <typename Scalar>
PolytopeV<Scalar> random_lattice_polytope(Index dimension, int min_points, int max_points, int box,
                                          std::mt19937_64& rng);

/// A price at which `body` has at least two attaining generators, found by
/// moving from a random lattice price along a random lattice direction until a
/// second generator ties. Integer coordinates in rational mode. Returns nullopt
/// if `body` has a single generator.
template <typename Scalar>
std::optional<Vector<Scalar>> tie_price(const PolytopeV<Scalar>& body, int box, std::mt19937_64& rng);

}  // namespace supply
