#include "supply/geometry.hpp"

#include <map>
#include <numeric>
#include <set>
#include <string>

#include "simplex.hpp"

namespace supply {

namespace {

template <typename Scalar>
void require_same_dimension(Index a, Index b, const char* what) {
  if (a != b)
    throw DimensionError(std::string(what) + ": dimension " + std::to_string(a) + " vs " +
                         std::to_string(b));
}

template <typename Scalar>
void require_nonempty(const PolytopeV<Scalar>& body, const char* what) {
  if (body.empty()) throw std::invalid_argument(std::string(what) + ": empty generator list");
}

// All compositions of `total` into `parts` positive integers, in lexicographically
// descending order of the leading parts.
void compositions(int total, int parts, std::vector<int>& current,
                  std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    current.push_back(total);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int first = total - (parts - 1); first >= 1; --first) {
    current.push_back(first);
    compositions(total - first, parts - 1, current, out);
    current.pop_back();
  }
}

void combinations(int n, int k, int start, std::vector<int>& current,
                  std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == k) {
    out.push_back(current);
    return;
  }
  for (int i = start; i < n; ++i) {
    current.push_back(i);
    combinations(n, k, i + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

template <typename Scalar>
PolytopeV<Scalar>::PolytopeV(const std::vector<Vector<Scalar>>& generators) {
  if (generators.empty()) return;
  const Index n = generators.front().size();
  std::vector<const Vector<Scalar>*> unique;
  std::set<Vector<Scalar>, LexLess<Scalar>> seen;
  for (const auto& g : generators) {
    require_same_dimension<Scalar>(g.size(), n, "PolytopeV");
    if (seen.insert(g).second) unique.push_back(&g);
  }
  generators_.resize(n, static_cast<Index>(unique.size()));
  for (std::size_t k = 0; k < unique.size(); ++k) generators_.col(static_cast<Index>(k)) = *unique[k];
}

template <typename Scalar>
std::vector<Vector<Scalar>> PolytopeV<Scalar>::generator_list() const {
  std::vector<Vector<Scalar>> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Index k = 0; k < size(); ++k) out.emplace_back(generators_.col(k));
  return out;
}

template <typename Scalar>
Scalar dot(const Vector<Scalar>& p, const Vector<Scalar>& z) {
  require_same_dimension<Scalar>(p.size(), z.size(), "dot");
  Scalar sum(0);
  for (Index i = 0; i < p.size(); ++i) sum += p(i) * z(i);
  return sum;
}

template <typename Scalar>
Scalar support_value(const PolytopeV<Scalar>& body, const Vector<Scalar>& p) {
  require_nonempty(body, "support_value");
  require_same_dimension<Scalar>(body.dimension(), p.size(), "support_value");
  const Vector<Scalar> values = body.generators().transpose() * p;
  return values.maxCoeff();
}

template <typename Scalar>
std::vector<Index> argmax_indices(const PolytopeV<Scalar>& body, const Vector<Scalar>& p,
                                  double tol) {
  require_nonempty(body, "argmax_points");
  require_same_dimension<Scalar>(body.dimension(), p.size(), "argmax_points");
  const Vector<Scalar> values = body.generators().transpose() * p;
  const Scalar best = values.maxCoeff();
  std::vector<Index> out;
  for (Index k = 0; k < values.size(); ++k)
    if (negligible<Scalar>(Scalar(best - values(k)), tol)) out.push_back(k);
  return out;
}

template <typename Scalar>
std::vector<Vector<Scalar>> argmax_points(const PolytopeV<Scalar>& body, const Vector<Scalar>& p,
                                          double tol) {
  std::vector<Vector<Scalar>> out;
  for (Index k : argmax_indices(body, p, tol)) out.emplace_back(body.generators().col(k));
  return out;
}

template <typename Scalar>
HullMembership<Scalar> hull_membership(const PolytopeV<Scalar>& body, const Vector<Scalar>& z,
                                       double tol) {
  require_same_dimension<Scalar>(body.dimension(), z.size(), "hull_membership");
  HullMembership<Scalar> result;
  if (body.empty()) return result;

  const Index k = body.size();
  for (Index j = 0; j < k; ++j) {
    if (approx_equal<Scalar>(Vector<Scalar>(body.generators().col(j)), z, tol)) {
      result.member = true;
      result.weights = Vector<Scalar>::Zero(k);
      result.weights(j) = Scalar(1);
      return result;
    }
  }

  const Index n = body.dimension();
  Matrix<Scalar> A(n + 1, k);
  A.topRows(n) = body.generators();
  A.row(n).setConstant(Scalar(1));
  Vector<Scalar> b(n + 1);
  b.head(n) = z;
  b(n) = Scalar(1);

  auto weights = detail::feasible_nonnegative<Scalar>(A, b, tol);
  if (!weights) return result;

  // Accept only a certificate that reproduces z.
  const Vector<Scalar> residual = A * *weights - b;
  for (Index i = 0; i < residual.size(); ++i)
    if (!negligible<Scalar>(residual(i), tol)) return result;
  result.member = true;
  result.weights = std::move(*weights);
  return result;
}

template <typename Scalar>
PolytopeV<Scalar> remove_redundant(const PolytopeV<Scalar>& body, double tol) {
  std::vector<Vector<Scalar>> kept = body.generator_list();
  for (std::size_t i = 0; i < kept.size() && kept.size() > 1;) {
    std::vector<Vector<Scalar>> others;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    if (hull_membership(PolytopeV<Scalar>(others), kept[i], tol))
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  return PolytopeV<Scalar>(kept);
}

template <typename Scalar>
std::vector<Vector<Scalar>> dyadic_mixtures(const std::vector<Vector<Scalar>>& points,
                                            int denominator, int max_support) {
  std::set<Vector<Scalar>, LexLess<Scalar>> out;
  if (points.empty() || denominator < 1) return {};
  if (denominator == 1) {
    out.insert(points.begin(), points.end());
    return {out.begin(), out.end()};
  }
  const int n = static_cast<int>(points.size());
  const int support = std::min({max_support, n, denominator});
  for (int s = 2; s <= support; ++s) {
    std::vector<std::vector<int>> subsets, parts;
    std::vector<int> scratch;
    combinations(n, s, 0, scratch, subsets);
    compositions(denominator, s, scratch, parts);
    for (const auto& weights : parts) {
      // Skip weights that reduce to a coarser grid.
      if (std::none_of(weights.begin(), weights.end(), [](int w) { return w % 2 == 1; })) continue;
      for (const auto& subset : subsets) {
        Vector<Scalar> z = Vector<Scalar>::Zero(points.front().size());
        for (int t = 0; t < s; ++t)
          z += (Scalar(weights[static_cast<std::size_t>(t)]) / Scalar(denominator)) *
               points[static_cast<std::size_t>(subset[static_cast<std::size_t>(t)])];
        out.insert(std::move(z));
      }
    }
  }
  return {out.begin(), out.end()};
}

#define SUPPLY_INSTANTIATE_GEOMETRY(S)                                                          \
  template class PolytopeV<S>;                                                                  \
  template S dot<S>(const Vector<S>&, const Vector<S>&);                                        \
  template S support_value<S>(const PolytopeV<S>&, const Vector<S>&);                           \
  template std::vector<Index> argmax_indices<S>(const PolytopeV<S>&, const Vector<S>&, double); \
  template std::vector<Vector<S>> argmax_points<S>(const PolytopeV<S>&, const Vector<S>&,       \
                                                   double);                                     \
  template HullMembership<S> hull_membership<S>(const PolytopeV<S>&, const Vector<S>&, double); \
  template PolytopeV<S> remove_redundant<S>(const PolytopeV<S>&, double);                       \
  template std::vector<Vector<S>> dyadic_mixtures<S>(const std::vector<Vector<S>>&, int, int);

SUPPLY_INSTANTIATE_GEOMETRY(Rational)
SUPPLY_INSTANTIATE_GEOMETRY(double)

}  // namespace supply
