#pragma once

// Profit table p_i·z_j over observations × distinct plans. Pairwise and cycle
// checks read every inequality from this table. Rational tables whose entries
// share a small common denominator are rescaled to int64 so the O(m²) scans
// run on machine integers; the result is still exact.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "supply/dataset.hpp"
#include "supply/geometry.hpp"

namespace supply::detail {

template <typename Scalar, typename Value>
class ProfitTable {
 public:
  using value_type = Value;

  std::size_t nodes() const { return node_obs_.size(); }
  std::size_t observation_of(std::size_t node) const { return node_obs_[node]; }

  /// p_a · z_a
  const Value& own(std::size_t a) const { return at(node_obs_[a], node_plan_[a]); }
  /// p_a · z_b
  const Value& cross(std::size_t a, std::size_t b) const { return at(node_obs_[a], node_plan_[b]); }

  Scalar to_scalar(const Value& v) const {
    if constexpr (std::is_same_v<Value, std::int64_t>)
      return Scalar(v) / scale_;
    else
      return Scalar(v);
  }

  /// Converts an accumulated sum of table values.
  template <typename Acc>
  Scalar sum_to_scalar(const Acc& v) const {
    if constexpr (std::is_same_v<Acc, __int128>) {
      const bool negative = v < 0;
      const unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
      Integer n = (Integer(static_cast<std::uint64_t>(u >> 64)) << 64) + Integer(static_cast<std::uint64_t>(u));
      if (negative) n = -n;
      return Scalar(n) / scale_;
    } else {
      return to_scalar(v);
    }
  }

  const Value& at(std::size_t obs, std::size_t plan) const { return values_[obs * plan_ids_ + plan]; }

  std::size_t plan_ids_ = 0;
  std::vector<Value> values_;
  std::vector<std::size_t> node_obs_;
  std::vector<std::size_t> node_plan_;
  Scalar scale_ = Scalar(1);
};

inline bool nonneg_value(std::int64_t v, double) { return v >= 0; }
inline bool nonneg_value(__int128 v, double) { return v >= 0; }
inline bool nonneg_value(const Rational& v, double) { return v >= 0; }
inline bool nonneg_value(double v, double tol) { return v >= -tol; }

/// Accumulator for sums of many table values.
template <typename Value>
struct Accumulator {
  using type = Value;
};
template <>
struct Accumulator<std::int64_t> {
  using type = __int128;
};

template <typename Scalar>
ProfitTable<Scalar, Scalar> build_profit_table(const Dataset<Scalar>& ds) {
  ProfitTable<Scalar, Scalar> table;
  std::map<Vector<Scalar>, std::size_t, LexLess<Scalar>> ids;
  std::vector<const Vector<Scalar>*> plans;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    for (const auto& z : ds[i].plans) {
      auto [it, inserted] = ids.emplace(z, plans.size());
      if (inserted) plans.push_back(&z);
      table.node_obs_.push_back(i);
      table.node_plan_.push_back(it->second);
    }
  }
  table.plan_ids_ = plans.size();
  table.values_.reserve(ds.size() * plans.size());
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (const auto* z : plans) table.values_.push_back(dot(ds[i].price, *z));
  return table;
}

/// Integer rescaling of an exact table, when every scaled entry stays below 2^59
/// (so sums of four entries cannot overflow).
inline std::optional<ProfitTable<Rational, std::int64_t>> to_integer_table(
    const ProfitTable<Rational, Rational>& exact) {
  Integer scale(1);
  for (const auto& v : exact.values_) {
    const Integer den = boost::multiprecision::denominator(v);
    if (den != 1) scale = boost::multiprecision::lcm(scale, den);
    if (scale > (Integer(1) << 59)) return std::nullopt;
  }
  const Integer limit = Integer(1) << 59;
  ProfitTable<Rational, std::int64_t> out;
  out.plan_ids_ = exact.plan_ids_;
  out.node_obs_ = exact.node_obs_;
  out.node_plan_ = exact.node_plan_;
  out.scale_ = Rational(scale);
  out.values_.reserve(exact.values_.size());
  for (const auto& v : exact.values_) {
    const Integer scaled =
        boost::multiprecision::numerator(v) * (scale / boost::multiprecision::denominator(v));
    if (abs(scaled) >= limit) return std::nullopt;
    out.values_.push_back(scaled.convert_to<std::int64_t>());
  }
  return out;
}

/// Calls `fn(table)` with the fastest exact representation available.
template <typename Scalar, typename Fn>
decltype(auto) with_profit_table(const Dataset<Scalar>& ds, Fn&& fn) {
  auto table = build_profit_table(ds);
  if constexpr (is_exact_v<Scalar>) {
    if (auto integral = to_integer_table(table)) return fn(*integral);
  }
  return fn(table);
}

}  // namespace supply::detail
