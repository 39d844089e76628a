#pragma once

#include <filesystem>
#include <random>
#include <string>

#include "supply/dataset.hpp"
#include "supply/geometry.hpp"

namespace fixtures {

using supply::Rational;
using QV = supply::Vector<Rational>;
using DV = supply::Vector<double>;

inline Rational q(long num, long den = 1) { return Rational(num, den); }

inline QV qv(std::initializer_list<Rational> coords) { return supply::make_vector<Rational>(coords); }
inline DV dv(std::initializer_list<double> coords) { return supply::make_vector<double>(coords); }

template <typename Scalar>
supply::Observation<Scalar> obs(supply::Vector<Scalar> price, std::vector<supply::Vector<Scalar>> plans,
                                supply::SetKind kind = supply::SetKind::finite) {
  return supply::Observation<Scalar>{std::move(price), std::move(plans), kind};
}

/// {(2,1)→(1,0), (1,2)→(0,1)}: the strict branches of the two-good example.
inline supply::Dataset<Rational> strict_branches() {
  supply::Dataset<Rational> ds(2);
  ds.add(obs<Rational>(qv({2, 1}), {qv({1, 0})}));
  ds.add(obs<Rational>(qv({1, 2}), {qv({0, 1})}));
  return ds;
}

/// Same prices with the plans swapped.
inline supply::Dataset<Rational> swapped_plans() {
  supply::Dataset<Rational> ds(2);
  ds.add(obs<Rational>(qv({2, 1}), {qv({0, 1})}));
  ds.add(obs<Rational>(qv({1, 2}), {qv({1, 0})}));
  return ds;
}

/// Three prices of the 90-degree rotation map.
inline supply::Dataset<Rational> rotation_triangle() {
  supply::Dataset<Rational> ds(2);
  ds.add(obs<Rational>(qv({1, 0}), {qv({0, 1})}));
  ds.add(obs<Rational>(qv({0, 1}), {qv({-1, 0})}));
  ds.add(obs<Rational>(qv({-1, 0}), {qv({0, -1})}));
  return ds;
}

/// Random lattice dataset: each observation gets one to three arbitrary plans.
template <typename Scalar>
supply::Dataset<Scalar> random_dataset(std::mt19937_64& rng, supply::Index n, int observations, int box) {
  std::uniform_int_distribution<int> coord(-box, box), count(1, 3);
  supply::Dataset<Scalar> ds(n);
  auto point = [&] {
    supply::Vector<Scalar> v(n);
    for (supply::Index i = 0; i < n; ++i) v(i) = Scalar(coord(rng));
    return v;
  };
  for (int k = 0; k < observations; ++k) {
    std::vector<supply::Vector<Scalar>> plans;
    for (int c = count(rng); c > 0; --c) plans.push_back(point());
    ds.add(obs<Scalar>(point(), std::move(plans)));
  }
  return ds;
}

inline std::filesystem::path data_file(const std::string& name) {
  return std::filesystem::path(SUPPLY_TEST_DATA_DIR) / name;
}

/// Fresh scratch directory under the system temp dir, removed on destruction.
class ScratchDir {
 public:
  explicit ScratchDir(const std::string& tag) {
    path_ = std::filesystem::temp_directory_path() /
            ("supply-" + tag + "-" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path_);
  }
  ~ScratchDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  ScratchDir(const ScratchDir&) = delete;
  ScratchDir& operator=(const ScratchDir&) = delete;

  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace fixtures
