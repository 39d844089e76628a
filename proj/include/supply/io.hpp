#pragma once

// JSON documents: datasets, polytopes and reports.
//
// Rational scalars are written as canonical strings ("a/b" or "a"); float
// scalars as JSON numbers. Rational documents round-trip byte for byte.

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "supply/dataset.hpp"
#include "supply/geometry.hpp"
#include "supply/rationalize.hpp"
#include "supply/report.hpp"
#include "supply/smooth.hpp"

namespace supply {

using Json = nlohmann::ordered_json;

using AnyDataset = std::variant<Dataset<Rational>, Dataset<double>>;
using AnyPolytope = std::variant<PolytopeV<Rational>, PolytopeV<double>>;

/// Throws ParseError (syntax, with byte position), DimensionError or DomainError.
AnyDataset parse_dataset(std::string_view text);
AnyDataset load_dataset(const std::filesystem::path& path);

template <typename Scalar>
std::string dump_dataset(const Dataset<Scalar>& ds);
template <typename Scalar>
void save_dataset(const Dataset<Scalar>& ds, const std::filesystem::path& path);

AnyPolytope parse_polytope(std::string_view text);
AnyPolytope load_polytope(const std::filesystem::path& path);

template <typename Scalar>
std::string dump_polytope(const PolytopeV<Scalar>& body);
template <typename Scalar>
void save_polytope(const PolytopeV<Scalar>& body, const std::filesystem::path& path);

/// Reads a plain list of coordinate lists in the given mode.
template <typename Scalar>
std::vector<Vector<Scalar>> parse_vector_list(const Json& doc, const std::string& where);

template <typename Scalar>
Json scalar_to_json(const Scalar& v);
template <typename Scalar>
Json vector_to_json(const Vector<Scalar>& v);

template <typename Scalar>
Json to_json(const CheckReport<Scalar>& report);
template <typename Scalar>
Json to_json(const ExtensionWitness<Scalar>& witness);
Json to_json(const JacobianReport& report);

/// Stable text form used for report files (2-space indent, trailing newline).
std::string render(const Json& doc);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace supply
