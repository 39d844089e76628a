#include "supply/io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace supply {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

void reject_unknown_keys(const Json& obj, const std::set<std::string>& known, const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!known.count(it.key())) fail(where, "unknown field '" + it.key() + "'");
}

ScalarMode parse_mode(const Json& doc) {
  if (!doc.contains("scalar")) return ScalarMode::rational;
  const auto& s = doc["scalar"];
  if (s == "rational") return ScalarMode::rational;
  if (s == "float") return ScalarMode::floating;
  fail("scalar", "expected \"rational\" or \"float\"");
}

Index parse_dimension(const Json& doc) {
  if (!doc.contains("dimension")) fail("dimension", "missing");
  const auto& d = doc["dimension"];
  if (!d.is_number_integer()) fail("dimension", "expected an integer");
  return d.get<Index>();
}

template <typename Scalar>
Scalar parse_scalar(const Json& v, const std::string& where) {
  if constexpr (is_exact_v<Scalar>) {
    if (v.is_string()) {
      auto q = parse_rational(v.get<std::string>());
      if (!q) fail(where, "malformed rational '" + v.get<std::string>() + "'");
      return *q;
    }
    if (v.is_number_integer()) return v.is_number_unsigned() ? Rational(v.get<std::uint64_t>()) : Rational(v.get<std::int64_t>());
    fail(where, "expected a rational string \"a/b\" or an integer");
  } else {
    if (!v.is_number()) fail(where, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail(where, "non-finite number");
    return x;
  }
}

template <typename Scalar>
Vector<Scalar> parse_vector(const Json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected a coordinate list");
  Vector<Scalar> out(static_cast<Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i)
    out(static_cast<Index>(i)) = parse_scalar<Scalar>(v[i], where + "[" + std::to_string(i) + "]");
  return out;
}

template <typename Scalar>
Dataset<Scalar> parse_dataset_as(const Json& doc) {
  const Index n = parse_dimension(doc);
  double tol = is_exact_v<Scalar> ? 0.0 : kDefaultTolerance;
  if (doc.contains("tolerance")) {
    if constexpr (is_exact_v<Scalar>) {
      fail("tolerance", "only meaningful in float mode");
    } else {
      if (!doc["tolerance"].is_number()) fail("tolerance", "expected a number");
      tol = doc["tolerance"].get<double>();
    }
  }
  PriceDomain domain = PriceDomain::all_reals;
  if (doc.contains("price_domain")) {
    const auto& d = doc["price_domain"];
    if (d == "nonneg_orthant")
      domain = PriceDomain::nonneg_orthant;
    else if (d != "all_reals")
      fail("price_domain", "expected \"all_reals\" or \"nonneg_orthant\"");
  }
  Dataset<Scalar> ds(n, tol, domain);
  if (!doc.contains("observations")) fail("observations", "missing");
  const auto& obs = doc["observations"];
  if (!obs.is_array()) fail("observations", "expected a list");
  for (std::size_t i = 0; i < obs.size(); ++i) {
    const std::string where = "observations[" + std::to_string(i) + "]";
    const auto& o = obs[i];
    if (!o.is_object()) fail(where, "expected an object");
    reject_unknown_keys(o, {"price", "plans", "set_kind"}, where);
    if (!o.contains("price")) fail(where, "missing price");
    if (!o.contains("plans")) fail(where, "missing plans");
    Observation<Scalar> ob;
    ob.price = parse_vector<Scalar>(o["price"], where + ".price");
    ob.plans = parse_vector_list<Scalar>(o["plans"], where + ".plans");
    if (o.contains("set_kind")) {
      const auto& k = o["set_kind"];
      if (k == "hull")
        ob.kind = SetKind::hull;
      else if (k != "finite")
        fail(where + ".set_kind", "expected \"finite\" or \"hull\"");
    }
    ds.add(std::move(ob));
  }
  return ds;
}

template <typename Scalar>
PolytopeV<Scalar> parse_polytope_as(const Json& doc) {
  const Index n = parse_dimension(doc);
  if (n < 2) throw DomainError("polytope dimension must be at least 2");
  if (!doc.contains("generators")) fail("generators", "missing");
  auto gens = parse_vector_list<Scalar>(doc["generators"], "generators");
  if (gens.empty()) throw DomainError("polytope has no generators");
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (gens[k].size() != n)
      throw DimensionError("generators[" + std::to_string(k) + "] has " + std::to_string(gens[k].size()) +
                           " coordinates, expected " + std::to_string(n));
  return PolytopeV<Scalar>(gens);
}

}  // namespace

template <typename Scalar>
std::vector<Vector<Scalar>> parse_vector_list(const Json& doc, const std::string& where) {
  if (!doc.is_array()) fail(where, "expected a list of coordinate lists");
  std::vector<Vector<Scalar>> out;
  for (std::size_t k = 0; k < doc.size(); ++k)
    out.push_back(parse_vector<Scalar>(doc[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

AnyDataset parse_dataset(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object()) fail("document", "expected an object");
  reject_unknown_keys(doc, {"dimension", "scalar", "tolerance", "price_domain", "observations"}, "document");
  if (parse_mode(doc) == ScalarMode::rational) return parse_dataset_as<Rational>(doc);
  return parse_dataset_as<double>(doc);
}

AnyDataset load_dataset(const std::filesystem::path& path) {
  return parse_dataset(read_file(path));
}

AnyPolytope parse_polytope(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object()) fail("document", "expected an object");
  reject_unknown_keys(doc, {"dimension", "scalar", "generators"}, "document");
  if (parse_mode(doc) == ScalarMode::rational) return parse_polytope_as<Rational>(doc);
  return parse_polytope_as<double>(doc);
}

AnyPolytope load_polytope(const std::filesystem::path& path) {
  return parse_polytope(read_file(path));
}

template <typename Scalar>
Json scalar_to_json(const Scalar& v) {
  if constexpr (is_exact_v<Scalar>)
    return format_scalar(v);
  else
    return v;
}

template <typename Scalar>
Json vector_to_json(const Vector<Scalar>& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(scalar_to_json<Scalar>(v(i)));
  return out;
}

template <typename Scalar>
std::string dump_dataset(const Dataset<Scalar>& ds) {
  Json doc;
  doc["dimension"] = ds.dimension();
  doc["scalar"] = to_string(ds.mode());
  if constexpr (!is_exact_v<Scalar>) doc["tolerance"] = ds.tolerance();
  doc["price_domain"] = to_string(ds.price_domain());
  Json obs = Json::array();
  for (const auto& o : ds.observations()) {
    Json entry;
    entry["price"] = vector_to_json(o.price);
    Json plans = Json::array();
    for (const auto& z : o.plans) plans.push_back(vector_to_json(z));
    entry["plans"] = std::move(plans);
    entry["set_kind"] = to_string(o.kind);
    obs.push_back(std::move(entry));
  }
  doc["observations"] = std::move(obs);
  return render(doc);
}

template <typename Scalar>
void save_dataset(const Dataset<Scalar>& ds, const std::filesystem::path& path) {
  write_file(path, dump_dataset(ds));
}

template <typename Scalar>
std::string dump_polytope(const PolytopeV<Scalar>& body) {
  Json doc;
  doc["dimension"] = body.dimension();
  doc["scalar"] = to_string(scalar_mode<Scalar>());
  Json gens = Json::array();
  for (Index k = 0; k < body.size(); ++k) gens.push_back(vector_to_json<Scalar>(body.generator(k)));
  doc["generators"] = std::move(gens);
  return render(doc);
}

template <typename Scalar>
void save_polytope(const PolytopeV<Scalar>& body, const std::filesystem::path& path) {
  write_file(path, dump_polytope(body));
}

namespace {

Json node_json(const NodeRef& n) {
  return Json{{"node", n.node}, {"observation", n.observation}, {"plan", n.plan}};
}

template <typename Scalar>
Json witness_json(const Witness<Scalar>& w) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        Json j;
        if constexpr (std::is_same_v<T, PairWitness<Scalar>>) {
          j["kind"] = "pair";
          j["first"] = node_json(x.first);
          j["second"] = node_json(x.second);
          j["value"] = scalar_to_json(x.value);
        } else if constexpr (std::is_same_v<T, CycleWitness<Scalar>>) {
          j["kind"] = "cycle";
          Json nodes = Json::array();
          for (const auto& n : x.nodes) nodes.push_back(node_json(n));
          j["nodes"] = std::move(nodes);
          j["weight"] = scalar_to_json(x.weight);
        } else if constexpr (std::is_same_v<T, HomogeneityWitness<Scalar>>) {
          j["kind"] = "colinear_pair";
          j["observation"] = x.observation;
          j["other"] = x.other;
          j["lambda"] = scalar_to_json(x.lambda);
          j["point"] = vector_to_json(x.point);
          j["missing_from"] = x.missing_from;
        } else if constexpr (std::is_same_v<T, ProfitSpreadWitness<Scalar>>) {
          j["kind"] = "profit_spread";
          j["observation"] = x.observation;
          j["plan_a"] = x.plan_a;
          j["plan_b"] = x.plan_b;
          j["value_a"] = scalar_to_json(x.value_a);
          j["value_b"] = scalar_to_json(x.value_b);
        } else if constexpr (std::is_same_v<T, ShortfallWitness<Scalar>>) {
          j["kind"] = "shortfall";
          j["observation"] = x.observation;
          j["plan"] = x.plan;
          j["shortfall"] = scalar_to_json(x.shortfall);
        } else {
          j["kind"] = "missing_plan";
          j["observation"] = x.observation;
          j["point"] = vector_to_json(x.point);
        }
        return j;
      },
      w);
}

}  // namespace

template <typename Scalar>
Json to_json(const CheckReport<Scalar>& report) {
  Json j;
  j["check"] = report.check;
  j["passed"] = report.passed();
  Json ws = Json::array();
  for (const auto& w : report.witnesses) ws.push_back(witness_json<Scalar>(w));
  j["witnesses"] = std::move(ws);
  Json stats;
  stats["examined"] = report.stats.examined;
  stats["violations"] = report.stats.violations;
  stats["worst_margin"] = report.stats.worst_margin ? scalar_to_json(*report.stats.worst_margin) : Json();
  j["stats"] = std::move(stats);
  return j;
}

template <typename Scalar>
Json to_json(const ExtensionWitness<Scalar>& w) {
  Json j;
  j["price"] = vector_to_json(w.price);
  j["plan"] = vector_to_json(w.plan);
  j["attains_support"] = w.attains_support;
  j["monotone_consistent"] = w.monotone_consistent;
  j["structural"] = w.structural;
  j["probe"] = w.probe;
  return j;
}

Json to_json(const JacobianReport& r) {
  Json j;
  j["price"] = vector_to_json<double>(r.price);
  j["step"] = r.step;
  if (r.error) {
    j["error"] = *r.error;
    return j;
  }
  Json rows = Json::array();
  for (Index i = 0; i < r.jacobian.rows(); ++i) rows.push_back(vector_to_json<double>(r.jacobian.row(i).transpose()));
  j["jacobian"] = std::move(rows);
  j["symmetry_defect"] = r.symmetry_defect;
  j["min_eigenvalue"] = r.min_eigenvalue;
  j["euler_residual"] = r.euler_residual;
  return j;
}

std::string render(const Json& doc) {
  return doc.dump(2) + "\n";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("failed writing " + path.string());
}

#define SUPPLY_INSTANTIATE_IO(S)                                                          \
  template std::vector<Vector<S>> parse_vector_list<S>(const Json&, const std::string&); \
  template Json scalar_to_json<S>(const S&);                                              \
  template Json vector_to_json<S>(const Vector<S>&);                                      \
  template std::string dump_dataset<S>(const Dataset<S>&);                                \
  template void save_dataset<S>(const Dataset<S>&, const std::filesystem::path&);         \
  template std::string dump_polytope<S>(const PolytopeV<S>&);                             \
  template void save_polytope<S>(const PolytopeV<S>&, const std::filesystem::path&);      \
  template Json to_json<S>(const CheckReport<S>&);                                        \
  template Json to_json<S>(const ExtensionWitness<S>&);

SUPPLY_INSTANTIATE_IO(Rational)
SUPPLY_INSTANTIATE_IO(double)

}  // namespace supply
