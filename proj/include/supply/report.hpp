#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "supply/dataset.hpp"

namespace supply {

/// A flattened graph point together with its back-reference into the dataset.
struct NodeRef {
  std::size_t node = 0;
  std::size_t observation = 0;
  std::size_t plan = 0;

  bool operator==(const NodeRef&) const = default;
};

/// Two graph points whose defining inequality is violated; `value` is the
/// (negative) left-hand side.
template <typename Scalar>
struct PairWitness {
  NodeRef first;
  NodeRef second;
  Scalar value;
};

/// Directed cycle in the graph-point digraph; last node links back to the first.
template <typename Scalar>
struct CycleWitness {
  std::vector<NodeRef> nodes;
  Scalar weight;
};

/// Observations on a common ray, with price[other] = λ·price[observation], whose
/// supply sets differ; `point` lies in one set and not in observation `missing_from`.
template <typename Scalar>
struct HomogeneityWitness {
  std::size_t observation = 0;
  std::size_t other = 0;
  Scalar lambda;
  Vector<Scalar> point;
  std::size_t missing_from = 0;
};

/// Two plans of one observation earning different profits.
template <typename Scalar>
struct ProfitSpreadWitness {
  std::size_t observation = 0;
  std::size_t plan_a = 0;
  std::size_t plan_b = 0;
  Scalar value_a;
  Scalar value_b;
};

/// An observed plan falling short of the support value.
template <typename Scalar>
struct ShortfallWitness {
  std::size_t observation = 0;
  std::size_t plan = 0;
  Scalar shortfall;
};

/// A profit-maximizing plan of the production set absent from the observed set.
template <typename Scalar>
struct MissingPlanWitness {
  std::size_t observation = 0;
  Vector<Scalar> point;
};

template <typename Scalar>
using Witness = std::variant<PairWitness<Scalar>, CycleWitness<Scalar>, HomogeneityWitness<Scalar>,
                             ProfitSpreadWitness<Scalar>, ShortfallWitness<Scalar>,
                             MissingPlanWitness<Scalar>>;

template <typename Scalar>
struct CheckStats {
  std::size_t examined = 0;
  std::size_t violations = 0;
  /// Pairwise and cycle checks: smallest slack seen. Per-observation checks
  /// (constant profit, verification): largest spread or |shortfall| seen.
  std::optional<Scalar> worst_margin;
};

template <typename Scalar>
struct CheckReport {
  std::string check;
  std::vector<Witness<Scalar>> witnesses;
  CheckStats<Scalar> stats;

  bool passed() const { return witnesses.empty(); }
};

}  // namespace supply
