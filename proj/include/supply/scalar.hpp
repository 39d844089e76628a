#pragma once

// Scalar policy shared by every module. Two instantiations are supported:
//   Rational  exact GMP rationals, always canonical; tolerances are ignored.
//   double    binary floating point; comparisons are taken within a tolerance.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "supply/errors.hpp"

namespace supply {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                                 boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                                boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Index = Eigen::Index;

enum class ScalarMode { rational, floating };

inline constexpr double kDefaultTolerance = 1e-9;

template <typename Scalar>
inline constexpr bool is_exact_v = std::is_same_v<Scalar, Rational>;

template <typename Scalar>
constexpr ScalarMode scalar_mode() {
  return is_exact_v<Scalar> ? ScalarMode::rational : ScalarMode::floating;
}

inline const char* to_string(ScalarMode mode) {
  return mode == ScalarMode::rational ? "rational" : "float";
}

// ---------------------------------------------------------------------------
// Tolerance-aware comparisons. In exact mode `tol` is ignored.

template <typename Scalar>
bool nonnegative(const Scalar& value, double tol) {
  if constexpr (is_exact_v<Scalar>)
    return value >= 0;
  else
    return value >= -tol;
}

template <typename Scalar>
bool negligible(const Scalar& value, double tol) {
  if constexpr (is_exact_v<Scalar>)
    return value == 0;
  else
    return std::abs(value) <= tol;
}

template <typename Scalar>
bool approx_equal(const Scalar& a, const Scalar& b, double tol) {
  return negligible<Scalar>(a - b, tol);
}

template <typename Scalar>
bool approx_equal(const Vector<Scalar>& a, const Vector<Scalar>& b, double tol) {
  if (a.size() != b.size()) return false;
  if constexpr (is_exact_v<Scalar>)
    return a == b;
  else
    return a.size() == 0 || (a - b).cwiseAbs().maxCoeff() <= tol;
}

/// Strict lexicographic order on coordinates; used for canonical orderings.
template <typename Scalar>
bool lex_less(const Vector<Scalar>& a, const Vector<Scalar>& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

template <typename Scalar>
struct LexLess {
  bool operator()(const Vector<Scalar>& a, const Vector<Scalar>& b) const { return lex_less(a, b); }
};

// ---------------------------------------------------------------------------
// Conversions and text form.

template <typename Scalar>
double to_double(const Scalar& value) {
  if constexpr (is_exact_v<Scalar>)
    return value.template convert_to<double>();
  else
    return value;
}

/// Canonical text: "a/b" or "a" for rationals, shortest round-trip form for doubles.
std::string format_scalar(const Rational& value);
std::string format_scalar(double value);

template <typename Scalar>
std::string format_vector(const Vector<Scalar>& v) {
  std::string out = "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += format_scalar(v(i));
  }
  return out + ")";
}

/// Parses "a", "-a" or "a/b" with b != 0 into canonical form; nullopt when malformed.
std::optional<Rational> parse_rational(std::string_view text);

template <typename Scalar>
Scalar max_abs(const Vector<Scalar>& v) {
  Scalar best(0);
  for (Index i = 0; i < v.size(); ++i) {
    const Scalar a = v(i) < 0 ? Scalar(-v(i)) : v(i);
    if (best < a) best = a;
  }
  return best;
}

/// Builds a vector from a braced list, e.g. `make_vector<Rational>({1, Rational(1, 2)})`.
template <typename Scalar>
Vector<Scalar> make_vector(std::initializer_list<Scalar> coords) {
  Vector<Scalar> v(static_cast<Index>(coords.size()));
  Index i = 0;
  for (const auto& c : coords) v(i++) = c;
  return v;
}

}  // namespace supply
