#pragma once

// Constructive rationalization of supply data by the hull of its image, and
// verification of weak/strong rationalizability against a given production set.

#include <optional>
#include <variant>
#include <vector>

#include "supply/checks.hpp"
#include "supply/geometry.hpp"
#include "supply/oracle.hpp"

namespace supply {

template <typename Scalar>
struct RationalizationResult {
  /// Hull of every observed plan.
  PolytopeV<Scalar> production_set;
  bool weak_verified = false;
  /// Per observation: support value minus the smallest observed profit.
  std::vector<Scalar> margins;
};

/// Either the rationalization or the failing precondition report
/// (law of supply first, then homogeneity).
template <typename Scalar>
using BuildOutcome = std::variant<RationalizationResult<Scalar>, CheckReport<Scalar>>;

template <typename Scalar>
BuildOutcome<Scalar> rationalize_build(const Dataset<Scalar>& ds, const CheckOptions& opts = {});

/// Every observed plan attains the support value of `production_set` at its price.
template <typename Scalar>
CheckReport<Scalar> verify_weak(const Dataset<Scalar>& ds, const PolytopeV<Scalar>& production_set,
                                const CheckOptions& opts = {});

/// verify_weak, plus every profit-maximizing point of `production_set` is observed.
///
/// `hull` observations must contain each attaining generator in their hull.
/// `finite` observations must contain each attaining generator, and the face
/// must be a single point: a face spanned by two or more generators is a
/// continuum, and the witness is then the first dyadic mixture of the face that
/// is absent from the observed list.
template <typename Scalar>
CheckReport<Scalar> verify_strong(const Dataset<Scalar>& ds, const PolytopeV<Scalar>& production_set,
                                  const CheckOptions& opts = {});

/// A plan that could be added to the graph of y at p* without breaking monotonicity.
template <typename Scalar>
struct ExtensionWitness {
  Vector<Scalar> price;
  Vector<Scalar> plan;
  bool attains_support = false;
  bool monotone_consistent = false;
  /// False when the search ran in floating point or on an inexact oracle; such
  /// witnesses may be artifacts of sampling a smooth body.
  bool structural = false;
  std::size_t probe = 0;
};

/// Mixture weights tried on each exposed face.
template <typename Scalar>
struct ProbeMixtures {
  /// Dyadic grid up to this denominator (1, 2, 4, 8 by default).
  int max_denominator = 8;
  /// Largest number of face generators combined in one mixture.
  int max_support = 4;
  /// Explicit weight vectors; when non-empty they replace the grid and are
  /// applied to faces with a matching number of generators.
  std::vector<std::vector<Scalar>> weights;
};

/// Searches `probes` in order for a plan z* on the face of `production_set` at p*
/// that the oracle does not supply. Monotone consistency is checked against the
/// oracle's graph sampled at all probes.
template <typename Scalar>
std::optional<ExtensionWitness<Scalar>> extension_witness(const SupplyOracle<Scalar>& oracle,
                                                          const PolytopeV<Scalar>& production_set,
                                                          const std::vector<Vector<Scalar>>& probes,
                                                          const ProbeMixtures<Scalar>& mixtures = {},
                                                          double tol = 0.0);

}  // namespace supply
