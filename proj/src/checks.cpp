#include "supply/checks.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "mixtures.hpp"
#include "profit_table.hpp"
#include "supply/geometry.hpp"

namespace supply {

namespace {

using detail::nonneg_value;

NodeRef node_ref(const FlatGraph<Rational>& g, std::size_t k) { return {k, g[k].observation, g[k].plan}; }
NodeRef node_ref(const FlatGraph<double>& g, std::size_t k) { return {k, g[k].observation, g[k].plan}; }

// Witnesses found by one worker, keyed by (row, column) so merging restores scan order.
template <typename Scalar, typename Value>
struct ScanPartial {
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Witness<Scalar>>> found;
  std::size_t examined = 0;
  std::size_t violations = 0;
  std::optional<Value> worst;

  void see(const Value& v) {
    ++examined;
    if (!worst || v < *worst) worst = v;
  }
};

// Runs `row(i, partial)` for every row, round-robin across workers, and merges
// the partial results deterministically.
template <typename Scalar, typename Table, typename RowFn>
CheckReport<Scalar> scan_rows(std::string name, std::size_t rows, const CheckOptions& opts,
                              const Table& table, RowFn row) {
  using Value = typename Table::value_type;
  const unsigned workers =
      std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(std::max<std::size_t>(rows, 1))));
  std::vector<ScanPartial<Scalar, Value>> partials(workers);
  if (workers == 1) {
    for (std::size_t i = 0; i < rows; ++i) row(i, partials[0]);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < rows; i += workers) row(i, partials[w]);
      });
  }

  CheckReport<Scalar> report;
  report.check = std::move(name);
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Witness<Scalar>>> found;
  std::optional<Value> worst;
  for (auto& part : partials) {
    report.stats.examined += part.examined;
    report.stats.violations += part.violations;
    if (part.worst && (!worst || *part.worst < *worst)) worst = part.worst;
    for (auto& f : part.found) found.push_back(std::move(f));
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  if (found.size() > opts.max_witnesses) found.resize(opts.max_witnesses);
  for (auto& f : found) report.witnesses.push_back(std::move(f.second));
  if (worst) report.stats.worst_margin = table.to_scalar(*worst);
  return report;
}

}  // namespace

template <typename Scalar>
CheckReport<Scalar> check_law_of_supply(const Dataset<Scalar>& ds, const CheckOptions& opts) {
  const FlatGraph<Scalar> graph(ds);
  const double tol = ds.tolerance();
  return detail::with_profit_table(ds, [&](const auto& table) {
    using Value = typename std::decay_t<decltype(table)>::value_type;
    return scan_rows<Scalar>(
        "law_of_supply", graph.size(), opts, table, [&](std::size_t i, ScanPartial<Scalar, Value>& part) {
          for (std::size_t j = i + 1; j < graph.size(); ++j) {
            const Value v = Value(table.own(i) + table.own(j)) - table.cross(i, j) - table.cross(j, i);
            part.see(v);
            if (nonneg_value(v, tol)) continue;
            ++part.violations;
            if (part.found.size() >= opts.max_witnesses) continue;
            const Scalar exact = dot<Scalar>(graph.price(i) - graph.price(j), graph.plan(i) - graph.plan(j));
            part.found.push_back({{i, j}, PairWitness<Scalar>{node_ref(graph, i), node_ref(graph, j), exact}});
          }
        });
  });
}

template <typename Scalar>
CheckReport<Scalar> check_wapm(const Dataset<Scalar>& ds, const CheckOptions& opts) {
  const FlatGraph<Scalar> graph(ds);
  const double tol = ds.tolerance();
  return detail::with_profit_table(ds, [&](const auto& table) {
    using Value = typename std::decay_t<decltype(table)>::value_type;
    return scan_rows<Scalar>(
        "wapm", graph.size(), opts, table, [&](std::size_t i, ScanPartial<Scalar, Value>& part) {
          for (std::size_t j = 0; j < graph.size(); ++j) {
            if (j == i) continue;
            const Value v = table.own(i) - table.cross(i, j);
            part.see(v);
            if (nonneg_value(v, tol)) continue;
            ++part.violations;
            if (part.found.size() >= opts.max_witnesses) continue;
            const Scalar exact = dot<Scalar>(graph.price(i), graph.plan(i) - graph.plan(j));
            part.found.push_back({{i, j}, PairWitness<Scalar>{node_ref(graph, i), node_ref(graph, j), exact}});
          }
        });
  });
}

template <typename Scalar>
CheckReport<Scalar> check_constant_profit(const Dataset<Scalar>& ds, const CheckOptions& opts) {
  CheckReport<Scalar> report;
  report.check = "constant_profit";
  const double tol = ds.tolerance();
  std::optional<Scalar> widest;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const auto& obs = ds[i];
    std::size_t lo = 0, hi = 0;
    std::vector<Scalar> values;
    for (std::size_t k = 0; k < obs.plans.size(); ++k) {
      values.push_back(dot(obs.price, obs.plans[k]));
      if (values[k] < values[lo]) lo = k;
      if (values[hi] < values[k]) hi = k;
    }
    ++report.stats.examined;
    const Scalar spread = values[hi] - values[lo];
    if (!widest || *widest < spread) widest = spread;
    if (negligible<Scalar>(spread, tol)) continue;
    ++report.stats.violations;
    if (report.witnesses.size() < opts.max_witnesses) {
      const auto a = std::min(lo, hi), b = std::max(lo, hi);
      report.witnesses.push_back(ProfitSpreadWitness<Scalar>{i, a, b, values[a], values[b]});
    }
  }
  report.stats.worst_margin = widest;
  return report;
}

template <typename Scalar>
std::optional<Scalar> ray_multiplier(const Vector<Scalar>& p, const Vector<Scalar>& q, double tol) {
  if (p.size() != q.size()) throw DimensionError("ray_multiplier: dimension mismatch");
  const Scalar np = max_abs(p), nq = max_abs(q);
  if (negligible<Scalar>(np, tol) || negligible<Scalar>(nq, tol)) {
    if (negligible<Scalar>(np, tol) && negligible<Scalar>(nq, tol)) return Scalar(1);
    return std::nullopt;
  }
  if (!approx_equal<Scalar>(Vector<Scalar>(p / np), Vector<Scalar>(q / nq), tol)) return std::nullopt;
  return Scalar(nq / np);
}

template <typename Scalar>
std::optional<SetDifference<Scalar>> supply_set_difference(const Observation<Scalar>& a,
                                                           const Observation<Scalar>& b,
                                                           double tol) {
  using detail::contains_point;
  auto finite_difference = [&]() -> std::optional<SetDifference<Scalar>> {
    for (const auto& z : a.plans)
      if (!contains_point(b.plans, z, tol)) return SetDifference<Scalar>{z, 1};
    for (const auto& z : b.plans)
      if (!contains_point(a.plans, z, tol)) return SetDifference<Scalar>{z, 0};
    return std::nullopt;
  };

  if (a.kind == SetKind::finite && b.kind == SetKind::finite) return finite_difference();

  if (a.kind == SetKind::hull && b.kind == SetKind::hull) {
    const PolytopeV<Scalar> ha(a.plans), hb(b.plans);
    for (const auto& z : a.plans)
      if (!contains_point(b.plans, z, tol) && !hull_membership(hb, z, tol))
        return SetDifference<Scalar>{z, 1};
    for (const auto& z : b.plans)
      if (!contains_point(a.plans, z, tol) && !hull_membership(ha, z, tol))
        return SetDifference<Scalar>{z, 0};
    return std::nullopt;
  }

  // A hull equals a finite set only when the hull is a single point.
  const bool a_is_hull = a.kind == SetKind::hull;
  const auto& hull = a_is_hull ? a.plans : b.plans;
  const auto& finite = a_is_hull ? b.plans : a.plans;
  if (detail::is_single_point(hull, tol)) return finite_difference();
  // Some point of the hull lies outside any finite set.
  auto outside = detail::first_mixture_outside<Scalar>(
      hull, [&](const Vector<Scalar>& z) { return contains_point(finite, z, tol); });
  if (outside) return SetDifference<Scalar>{*outside, a_is_hull ? 1 : 0};
  return std::nullopt;
}

template <typename Scalar>
CheckReport<Scalar> check_homogeneity(const Dataset<Scalar>& ds, const CheckOptions& opts) {
  CheckReport<Scalar> report;
  report.check = "homogeneity";
  const double tol = ds.tolerance();

  // Candidate pairs on a common ray: exact grouping by normalized price in
  // rational mode, pairwise normalized comparison in float mode.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<Vector<Scalar>> normalized;
  normalized.reserve(ds.size());
  for (const auto& obs : ds.observations()) {
    const Scalar n = max_abs(obs.price);
    normalized.push_back(negligible<Scalar>(n, tol) ? Vector<Scalar>(obs.price) : Vector<Scalar>(obs.price / n));
  }
  if constexpr (is_exact_v<Scalar>) {
    std::map<Vector<Scalar>, std::vector<std::size_t>, LexLess<Scalar>> rays;
    for (std::size_t i = 0; i < ds.size(); ++i) rays[normalized[i]].push_back(i);
    for (const auto& [key, members] : rays)
      for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b) pairs.emplace_back(members[a], members[b]);
    std::sort(pairs.begin(), pairs.end());
  } else {
    for (std::size_t i = 0; i < ds.size(); ++i)
      for (std::size_t j = i + 1; j < ds.size(); ++j)
        if (approx_equal<Scalar>(normalized[i], normalized[j], tol)) pairs.emplace_back(i, j);
  }

  for (const auto& [i, j] : pairs) {
    ++report.stats.examined;
    auto lambda = ray_multiplier(ds[i].price, ds[j].price, tol);
    if (!lambda) continue;
    auto diff = supply_set_difference(ds[i], ds[j], tol);
    if (!diff) continue;
    ++report.stats.violations;
    if (report.witnesses.size() < opts.max_witnesses)
      report.witnesses.push_back(HomogeneityWitness<Scalar>{
          i, j, *lambda, std::move(diff->point), diff->missing_from == 0 ? i : j});
  }
  return report;
}

namespace {

template <typename Scalar>
Scalar cycle_weight(const FlatGraph<Scalar>& graph, const std::vector<std::size_t>& cycle) {
  Scalar total(0);
  for (std::size_t t = 0; t < cycle.size(); ++t) {
    const std::size_t from = cycle[t], to = cycle[(t + 1) % cycle.size()];
    total += dot<Scalar>(graph.price(to), graph.plan(to) - graph.plan(from));
  }
  return total;
}

template <typename Scalar>
CycleWitness<Scalar> make_cycle_witness(const FlatGraph<Scalar>& graph, std::vector<std::size_t> cycle) {
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  CycleWitness<Scalar> w;
  for (std::size_t k : cycle) w.nodes.push_back(node_ref(graph, k));
  w.weight = cycle_weight(graph, cycle);
  return w;
}

// Bellman-Ford from a virtual source joined to every node with weight 0.
template <typename Scalar, typename Table>
CheckReport<Scalar> negative_cycle_search(const FlatGraph<Scalar>& graph, const Table& table,
                                          double tol) {
  using Value = typename Table::value_type;
  using Acc = typename detail::Accumulator<Value>::type;
  CheckReport<Scalar> report;
  report.check = "cyclic_monotonicity";
  const std::size_t m = graph.size();
  std::vector<Acc> dist(m, Acc(0));
  std::vector<std::size_t> pred(m, m);
  std::optional<Value> lightest;

  auto improves = [&](const Acc& candidate, const Acc& current) {
    if constexpr (std::is_floating_point_v<Acc>)
      return candidate < current - tol;
    else
      return candidate < current;
  };

  std::size_t last = m;
  for (std::size_t pass = 0; pass <= m; ++pass) {
    last = m;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (i == j) continue;
        const Value w = table.own(j) - table.cross(j, i);
        if (pass == 0) {
          ++report.stats.examined;
          if (!lightest || w < *lightest) lightest = w;
        }
        const Acc candidate = dist[i] + Acc(w);
        if (improves(candidate, dist[j])) {
          dist[j] = candidate;
          pred[j] = i;
          last = j;
        }
      }
    }
    if (last == m) break;
  }
  if (lightest) report.stats.worst_margin = table.to_scalar(*lightest);
  if (last == m) return report;

  // Step back far enough to land on the cycle, then walk it.
  std::size_t x = last;
  for (std::size_t k = 0; k < m; ++k) x = pred[x];
  std::vector<std::size_t> cycle{x};
  for (std::size_t y = pred[x]; y != x; y = pred[y]) cycle.push_back(y);
  std::reverse(cycle.begin(), cycle.end());

  auto witness = make_cycle_witness(graph, std::move(cycle));
  if (nonneg_value(witness.weight, tol)) return report;
  report.stats.violations = 1;
  report.witnesses.emplace_back(std::move(witness));
  return report;
}

// Enumerates simple cycles of length 2..max_len whose smallest node comes first.
template <typename Scalar, typename Table>
CheckReport<Scalar> bounded_cycle_search(const FlatGraph<Scalar>& graph, const Table& table,
                                         std::size_t max_len, const CheckOptions& opts, double tol) {
  using Value = typename Table::value_type;
  using Acc = typename detail::Accumulator<Value>::type;
  CheckReport<Scalar> report;
  report.check = "cyclic_monotonicity";
  const std::size_t m = graph.size();
  std::vector<std::size_t> path;
  std::vector<char> on_path(m, 0);
  std::optional<Acc> worst;

  auto edge = [&](std::size_t from, std::size_t to) { return Acc(table.own(to) - table.cross(to, from)); };

  auto dfs = [&](auto&& self, std::size_t start, std::size_t at, const Acc& weight) -> void {
    if (path.size() >= 2) {
      const Acc total = weight + edge(at, start);
      ++report.stats.examined;
      if (!worst || total < *worst) worst = total;
      const bool negative = std::is_floating_point_v<Acc> ? total < -tol : total < Acc(0);
      if (negative) {
        ++report.stats.violations;
        if (report.witnesses.size() < opts.max_witnesses)
          report.witnesses.emplace_back(make_cycle_witness(graph, path));
      }
    }
    if (path.size() == max_len) return;
    for (std::size_t next = start + 1; next < m; ++next) {
      if (on_path[next]) continue;
      on_path[next] = 1;
      path.push_back(next);
      self(self, start, next, weight + edge(at, next));
      path.pop_back();
      on_path[next] = 0;
    }
  };

  for (std::size_t s = 0; s < m; ++s) {
    path = {s};
    on_path[s] = 1;
    dfs(dfs, s, s, Acc(0));
    on_path[s] = 0;
  }
  if (worst) report.stats.worst_margin = table.sum_to_scalar(*worst);
  return report;
}

}  // namespace

template <typename Scalar>
CheckReport<Scalar> check_cyclic_monotonicity(const Dataset<Scalar>& ds, const CheckOptions& opts) {
  const FlatGraph<Scalar> graph(ds);
  const double tol = ds.tolerance();
  return detail::with_profit_table(ds, [&](const auto& table) {
    if (opts.max_cycle_len) return bounded_cycle_search(graph, table, *opts.max_cycle_len, opts, tol);
    return negative_cycle_search(graph, table, tol);
  });
}

#define SUPPLY_INSTANTIATE_CHECKS(S)                                                                \
  template CheckReport<S> check_law_of_supply<S>(const Dataset<S>&, const CheckOptions&);           \
  template CheckReport<S> check_homogeneity<S>(const Dataset<S>&, const CheckOptions&);             \
  template CheckReport<S> check_wapm<S>(const Dataset<S>&, const CheckOptions&);                    \
  template CheckReport<S> check_constant_profit<S>(const Dataset<S>&, const CheckOptions&);         \
  template CheckReport<S> check_cyclic_monotonicity<S>(const Dataset<S>&, const CheckOptions&);     \
  template std::optional<S> ray_multiplier<S>(const Vector<S>&, const Vector<S>&, double);          \
  template std::optional<SetDifference<S>> supply_set_difference<S>(const Observation<S>&,          \
                                                                    const Observation<S>&, double);

SUPPLY_INSTANTIATE_CHECKS(Rational)
SUPPLY_INSTANTIATE_CHECKS(double)

}  // namespace supply
