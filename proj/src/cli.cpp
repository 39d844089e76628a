#include "supply/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <sstream>

#include "supply/checks.hpp"
#include "supply/generate.hpp"
#include "supply/io.hpp"
#include "supply/rationalize.hpp"
#include "supply/smooth.hpp"

namespace supply::cli {

namespace {

// Shown per failing check; the report file carries all stored witnesses.
constexpr std::size_t kPrintedWitnesses = 3;

class UsageError : public Error {
 public:
  using Error::Error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::pair<std::string, std::string> split_tag(const std::string& spec, const std::string& flag) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError(flag + ": expected <kind>:<argument>, got '" + spec + "'");
  return {spec.substr(0, colon), spec.substr(colon + 1)};
}

double parse_double(const std::string& text, const std::string& what) {
  double v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) throw UsageError(what + ": not a number: '" + text + "'");
  return v;
}

template <typename Scalar>
Scalar parse_number(const std::string& text, const std::string& what) {
  if constexpr (is_exact_v<Scalar>) {
    auto q = parse_rational(text);
    if (!q) throw UsageError(what + ": not a rational: '" + text + "'");
    return *q;
  } else {
    if (text.find('/') != std::string::npos) {
      auto q = parse_rational(text);
      if (!q) throw UsageError(what + ": not a number: '" + text + "'");
      return to_double(*q);
    }
    return parse_double(text, what);
  }
}

std::size_t parse_count(const std::string& text, const std::string& what) {
  std::size_t v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw UsageError(what + ": not a count: '" + text + "'");
  return v;
}

template <typename Scalar>
Vector<Scalar> to_scalar_vector(const Vector<Rational>& v) {
  if constexpr (is_exact_v<Scalar>)
    return v;
  else
    return v.unaryExpr([](const Rational& x) { return to_double(x); });
}

Dataset<double> to_float(const Dataset<Rational>& ds) {
  Dataset<double> out(ds.dimension(), kDefaultTolerance, ds.price_domain());
  for (const auto& o : ds.observations()) {
    Observation<double> f;
    f.price = to_scalar_vector<double>(o.price);
    for (const auto& z : o.plans) f.plans.push_back(to_scalar_vector<double>(z));
    f.kind = o.kind;
    out.add(std::move(f));
  }
  return out;
}

PolytopeV<double> to_float(const PolytopeV<Rational>& body) {
  std::vector<Vector<double>> gens;
  for (const auto& g : body.generator_list()) gens.push_back(to_scalar_vector<double>(g));
  return PolytopeV<double>(gens);
}

// ---------------------------------------------------------------------------
// Human-readable summaries.

std::string node_text(const NodeRef& n) {
  return "obs " + std::to_string(n.observation) + " plan " + std::to_string(n.plan);
}

template <typename Scalar>
std::string describe(const Dataset<Scalar>& ds, const Witness<Scalar>& w) {
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PairWitness<Scalar>>) {
          return node_text(x.first) + " and " + node_text(x.second) + ": value " + format_scalar(x.value);
        } else if constexpr (std::is_same_v<T, CycleWitness<Scalar>>) {
          std::string s = "cycle ";
          for (const auto& n : x.nodes) s += node_text(n) + " -> ";
          return s + node_text(x.nodes.front()) + ": weight " + format_scalar(x.weight);
        } else if constexpr (std::is_same_v<T, HomogeneityWitness<Scalar>>) {
          return "obs " + std::to_string(x.observation) + " and obs " + std::to_string(x.other) + " (lambda " +
                 format_scalar(x.lambda) + "): " + format_vector(x.point) + " missing from obs " +
                 std::to_string(x.missing_from);
        } else if constexpr (std::is_same_v<T, ProfitSpreadWitness<Scalar>>) {
          return "obs " + std::to_string(x.observation) + ": plan " + std::to_string(x.plan_a) + " earns " +
                 format_scalar(x.value_a) + ", plan " + std::to_string(x.plan_b) + " earns " +
                 format_scalar(x.value_b);
        } else if constexpr (std::is_same_v<T, ShortfallWitness<Scalar>>) {
          return "obs " + std::to_string(x.observation) + " plan " + std::to_string(x.plan) +
                 ": below the support value by " + format_scalar(x.shortfall);
        } else {
          return "obs " + std::to_string(x.observation) + " at p = " + format_vector(ds[x.observation].price) +
                 ": maximizer z = " + format_vector(x.point) + " not observed";
        }
      },
      w);
}

template <typename Scalar>
bool summarize(std::ostream& out, const Dataset<Scalar>& ds, const CheckReport<Scalar>& r) {
  if (r.passed()) {
    out << "PASS " << r.check << " (" << r.stats.examined << " examined)\n";
    return true;
  }
  out << "FAIL " << r.check << " (" << r.stats.violations << " violations in " << r.stats.examined
      << " examined)\n";
  for (std::size_t k = 0; k < r.witnesses.size() && k < kPrintedWitnesses; ++k)
    out << "  witness: " << describe(ds, r.witnesses[k]) << "\n";
  return false;
}

void write_report(const std::string& path, const Json& doc) {
  if (!path.empty()) write_file(path, render(doc));
}

// ---------------------------------------------------------------------------
// check

struct CheckArgs {
  std::string dataset;
  std::string checks = "los,h0,wapm,const,cyclic";
  std::optional<double> tol;
  std::string report;
  unsigned threads = 1;
  std::optional<std::size_t> max_cycle_len;
};

template <typename Scalar>
int run_check(Dataset<Scalar> ds, const CheckArgs& a, std::ostream& out) {
  if (a.tol && !is_exact_v<Scalar>) ds.set_tolerance(*a.tol);
  CheckOptions opts;
  opts.threads = std::max(1u, a.threads);
  opts.max_cycle_len = a.max_cycle_len;

  using Fn = std::function<CheckReport<Scalar>(const Dataset<Scalar>&, const CheckOptions&)>;
  const std::map<std::string, Fn> table = {
      {"los", check_law_of_supply<Scalar>},     {"h0", check_homogeneity<Scalar>},
      {"wapm", check_wapm<Scalar>},             {"const", check_constant_profit<Scalar>},
      {"cyclic", check_cyclic_monotonicity<Scalar>},
  };
  std::vector<std::string> selected;
  for (const auto& name : split(a.checks, ',')) {
    if (!table.count(name)) throw UsageError("--checks: unknown check '" + name + "'");
    if (std::find(selected.begin(), selected.end(), name) == selected.end()) selected.push_back(name);
  }
  if (selected.empty()) throw UsageError("--checks: nothing selected");

  bool ok = true;
  Json reports = Json::array();
  for (const auto& name : selected) {
    const auto report = table.at(name)(ds, opts);
    ok = summarize(out, ds, report) && ok;
    reports.push_back(to_json(report));
  }
  write_report(a.report, reports);
  return ok ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------
// rationalize / verify

struct RationalizeArgs {
  std::string dataset;
  std::string out;
  std::string verify;
  std::string report;
};

template <typename Scalar>
CheckReport<Scalar> verify_mode(const std::string& mode, const Dataset<Scalar>& ds, const PolytopeV<Scalar>& y) {
  if (mode == "weak") return verify_weak(ds, y);
  if (mode == "strong") return verify_strong(ds, y);
  throw UsageError("verification mode must be 'weak' or 'strong', got '" + mode + "'");
}

template <typename Scalar>
int run_rationalize(const Dataset<Scalar>& ds, const RationalizeArgs& a, std::ostream& out) {
  if (!a.verify.empty() && a.verify != "weak" && a.verify != "strong")
    throw UsageError("--verify must be 'weak' or 'strong'");
  Json reports = Json::array();
  auto outcome = rationalize_build(ds);
  if (auto* failed = std::get_if<CheckReport<Scalar>>(&outcome)) {
    summarize(out, ds, *failed);
    out << "FAIL rationalize (precondition " << failed->check << " failed)\n";
    reports.push_back(to_json(*failed));
    write_report(a.report, reports);
    return kExitFail;
  }
  const auto& result = std::get<RationalizationResult<Scalar>>(outcome);
  out << (result.weak_verified ? "PASS" : "FAIL") << " rationalize (" << result.production_set.size()
      << " generators in dimension " << ds.dimension() << ")\n";
  for (const auto& g : result.production_set.generator_list()) out << "  generator " << format_vector(g) << "\n";
  if (!a.out.empty()) save_polytope(result.production_set, a.out);
  bool ok = result.weak_verified;
  if (!a.verify.empty()) {
    const auto report = verify_mode(a.verify, ds, result.production_set);
    ok = summarize(out, ds, report) && ok;
    reports.push_back(to_json(report));
  }
  write_report(a.report, reports);
  return ok ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------
// generate

struct GenerateArgs {
  std::string oracle;
  std::string prices;
  std::optional<std::size_t> count;
  std::string dup;
  std::size_t ties = 0;
  std::optional<std::uint64_t> seed;
  std::string out;
  Index dimension = 2;
  std::string scalar;
  std::string domain = "all_reals";
};

// The scalar mode a generate/jacobian oracle spec calls for when --scalar is absent.
ScalarMode default_mode(const std::string& kind, const std::string& arg) {
  if (kind == "ball") return ScalarMode::floating;
  if (kind == "rotation") return parse_double(arg, "rotation angle") == 90.0 ? ScalarMode::rational : ScalarMode::floating;
  if (kind == "polytope")
    return std::holds_alternative<PolytopeV<Rational>>(load_polytope(arg)) ? ScalarMode::rational
                                                                          : ScalarMode::floating;
  return ScalarMode::rational;
}

template <typename Scalar>
SupplyOracle<Scalar> make_oracle(const std::string& kind, const std::string& arg, Index dimension) {
  if (kind == "ball") return SupplyOracle<Scalar>::ball(dimension, parse_double(arg, "ball radius"));
  if (kind == "rotation") return SupplyOracle<Scalar>::rotation(parse_double(arg, "rotation angle"));
  if (kind == "polytope") {
    auto any = load_polytope(arg);
    if (auto* body = std::get_if<PolytopeV<Scalar>>(&any)) return SupplyOracle<Scalar>::polytope(*body);
    if constexpr (!is_exact_v<Scalar>)
      return SupplyOracle<Scalar>::polytope(to_float(std::get<PolytopeV<Rational>>(any)));
    throw ModeError("polytope file " + arg + " is float; rational generation needs a rational polytope");
  }
  if (kind == "figure1") {
    const Json doc = [&] {
      try {
        return Json::parse(read_file(arg));
      } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(arg + ": invalid JSON: " + e.what(), e.byte);
      }
    }();
    return SupplyOracle<Scalar>::figure1(parse_vector_list<Scalar>(doc, arg));
  }
  throw UsageError("--oracle: unknown oracle kind '" + kind + "'");
}

template <typename Scalar>
std::vector<Vector<Scalar>> load_price_file(const std::string& path) {
  const std::string text = read_file(path);
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": invalid JSON: " + e.what(), e.byte);
  }
  return parse_vector_list<Scalar>(doc, path);
}

template <typename Scalar>
std::vector<Scalar> parse_dup(const std::string& spec) {
  if (spec.empty()) return {};
  const auto [count_text, list] = split_tag(spec, "--dup");
  const std::size_t k = parse_count(count_text, "--dup");
  std::vector<Scalar> multipliers;
  for (const auto& item : split(list, ',')) {
    Scalar lambda = parse_number<Scalar>(item, "--dup multiplier");
    if (!(lambda > 0)) throw UsageError("--dup: multipliers must be positive, got '" + item + "'");
    multipliers.push_back(std::move(lambda));
  }
  if (multipliers.size() != k)
    throw UsageError("--dup: announced " + std::to_string(k) + " multipliers, listed " +
                     std::to_string(multipliers.size()));
  return multipliers;
}

template <typename Scalar>
int run_generate(const GenerateArgs& a, std::ostream& out) {
  const auto [kind, arg] = split_tag(a.oracle, "--oracle");
  const auto oracle = make_oracle<Scalar>(kind, arg, a.dimension);

  GeneratorConfig<Scalar> cfg;
  cfg.seed = *a.seed;
  cfg.tie_prices = a.ties;
  cfg.multipliers = parse_dup<Scalar>(a.dup);
  if (a.domain == "nonneg_orthant")
    cfg.domain = PriceDomain::nonneg_orthant;
  else if (a.domain != "all_reals")
    throw UsageError("--domain must be 'all_reals' or 'nonneg_orthant'");

  const auto [sampler, sarg] = split_tag(a.prices, "--prices");
  if (sampler == "sphere") {
    cfg.sampler = PriceSampler::unit_sphere;
    cfg.count = parse_count(sarg, "--prices sphere");
  } else if (sampler == "grid") {
    cfg.sampler = PriceSampler::integer_grid;
    cfg.grid_radius = static_cast<int>(parse_count(sarg, "--prices grid"));
    cfg.count = a.count.value_or(0);
  } else if (sampler == "file") {
    cfg.sampler = PriceSampler::explicit_list;
    cfg.prices = load_price_file<Scalar>(sarg);
  } else {
    throw UsageError("--prices: unknown sampler '" + sampler + "'");
  }
  if (a.count && sampler != "grid") throw UsageError("--count applies to grid prices only");

  const auto result = generate(oracle, cfg);
  save_dataset(result.dataset, a.out);
  out << "generated " << result.dataset.size() << " observations (" << result.dataset.plan_count() << " plans)";
  if (result.skipped) out << ", skipped " << result.skipped << " prices with unbounded supply";
  out << " -> " << a.out << "\n";
  return kExitPass;
}

// ---------------------------------------------------------------------------
// jacobian

struct JacobianArgs {
  std::string oracle;
  std::vector<std::string> at;
  double h = 1e-5;
  Index dimension = 2;
  std::string report;
};

int run_jacobian(const JacobianArgs& a, std::ostream& out) {
  const auto [kind, arg] = split_tag(a.oracle, "--oracle");
  if (kind == "figure1") throw UsageError("jacobian: the figure1 oracle is not single-valued");
  if (!(a.h > 0)) throw UsageError("--h must be positive");
  const auto oracle = make_oracle<double>(kind, arg, a.dimension);

  std::vector<Eigen::VectorXd> prices;
  for (const auto& spec : a.at) {
    const auto coords = split(spec, ',');
    Eigen::VectorXd p(static_cast<Index>(coords.size()));
    for (std::size_t i = 0; i < coords.size(); ++i) p(static_cast<Index>(i)) = parse_number<double>(coords[i], "--at");
    if (p.size() != oracle.dimension())
      throw DimensionError("--at " + spec + ": expected " + std::to_string(oracle.dimension()) + " coordinates");
    prices.push_back(std::move(p));
  }
  const auto check = check_jacobian_conditions(oracle, prices, a.h);
  const JacobianTolerances tol;
  Json reports = Json::array();
  for (const auto& r : check.reports) {
    reports.push_back(to_json(r));
    const std::string at = format_vector<double>(r.price);
    if (r.error) {
      out << "FAIL jacobian at " << at << ": " << *r.error << "\n";
      continue;
    }
    const bool ok = r.symmetry_defect <= tol.symmetry && r.min_eigenvalue >= -tol.psd && r.euler_residual <= tol.euler;
    out << (ok ? "PASS" : "FAIL") << " jacobian at " << at << ": symmetry defect " << format_scalar(r.symmetry_defect)
        << ", min eigenvalue " << format_scalar(r.min_eigenvalue) << ", euler residual "
        << format_scalar(r.euler_residual) << "\n";
  }
  write_report(a.report, reports);
  return check.passed ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------
// demo figure1

std::vector<Vector<Rational>> demo_tie_set(const std::string& choice) {
  const Rational half(1, 2);
  std::vector<Vector<Rational>> s = {make_vector<Rational>({0, 1}), make_vector<Rational>({1, 0})};
  if (choice == "endpoints") return s;
  if (choice == "endpoints+midpoint") {
    s.push_back(make_vector<Rational>({half, half}));
    return s;
  }
  return load_price_file<Rational>(choice);
}

int run_demo(const std::string& which, const std::string& s_choice, std::ostream& out) {
  if (which != "figure1") throw UsageError("demo: unknown demo '" + which + "' (available: figure1)");
  const auto oracle = SupplyOracle<Rational>::figure1(demo_tie_set(s_choice));
  const auto& tie_set = std::get<Figure1Oracle<Rational>>(oracle.kind()).tie_set;
  out << "tie set S =";
  for (const auto& z : tie_set) out << " " << format_vector(z);
  out << "\n";

  const std::vector<Vector<Rational>> probes = {make_vector<Rational>({2, 1}), make_vector<Rational>({1, 2}),
                                                make_vector<Rational>({1, 1})};
  GeneratorConfig<Rational> cfg;
  cfg.prices = probes;
  cfg.multipliers = {Rational(2)};
  const auto ds = generate(oracle, cfg).dataset;
  out << "dataset: " << ds.size() << " observations, " << ds.plan_count() << " plans\n";

  bool ok = summarize(out, ds, check_law_of_supply(ds));
  ok = summarize(out, ds, check_homogeneity(ds)) && ok;

  auto outcome = rationalize_build(ds);
  if (auto* failed = std::get_if<CheckReport<Rational>>(&outcome)) {
    out << "FAIL rationalize (precondition " << failed->check << " failed)\n";
    return kExitFail;
  }
  const auto& y = std::get<RationalizationResult<Rational>>(outcome).production_set;
  out << "Y = conv";
  for (const auto& g : y.generator_list()) out << " " << format_vector(g);
  out << "\n  vertices:";
  for (const auto& g : remove_redundant(y).generator_list()) out << " " << format_vector(g);
  out << "\n";
  ok = summarize(out, ds, verify_weak(ds, y)) && ok;
  ok = summarize(out, ds, verify_strong(ds, y)) && ok;

  if (auto w = extension_witness(oracle, y, probes)) {
    out << "extension witness: p* = " << format_vector(w->price) << ", z* = " << format_vector(w->plan)
        << ", attains_support = " << std::boolalpha << w->attains_support
        << ", monotone_consistent = " << w->monotone_consistent << ", structural = " << w->structural << "\n";
  } else {
    out << "extension witness: none found\n";
  }

  // Supplies along p -> (1,1) from either side stay inside S.
  bool uhc = true;
  for (int k = 1; k <= 16; ++k) {
    const Rational eps(1, Integer(1) << k);
    for (const auto& p : {make_vector<Rational>({1 + eps, 1}), make_vector<Rational>({1, 1 + eps})})
      for (const auto& z : oracle_supply(oracle, p).plans)
        uhc = uhc && std::find(tie_set.begin(), tie_set.end(), z) != tie_set.end();
  }
  out << (uhc ? "PASS" : "FAIL") << " upper hemicontinuity probe at (1,1)\n";
  return ok ? kExitPass : kExitFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Producer-theory checks on finite supply data", "supplycheck"};
  app.require_subcommand(1);

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Run property checks on a dataset");
  check->add_option("dataset", check_args.dataset, "Dataset file")->required();
  check->add_option("--checks", check_args.checks, "Comma list of los,h0,wapm,const,cyclic");
  check->add_option("--tol", check_args.tol, "Comparison tolerance (float datasets)")->check(CLI::NonNegativeNumber);
  check->add_option("--report", check_args.report, "Write JSON reports here");
  check->add_option("--threads", check_args.threads, "Worker threads")->check(CLI::PositiveNumber);
  check->add_option("--max-cycle-len", check_args.max_cycle_len, "Enumerate cycles up to this length")
      ->check(CLI::Range(std::size_t{2}, std::size_t{64}));

  RationalizeArgs rat_args;
  auto* rat = app.add_subcommand("rationalize", "Build the hull of observed plans");
  rat->add_option("dataset", rat_args.dataset, "Dataset file")->required();
  rat->add_option("--out", rat_args.out, "Write the production set here");
  rat->add_option("--verify", rat_args.verify, "Also verify: weak or strong");
  rat->add_option("--report", rat_args.report, "Write JSON reports here");

  std::string verify_ds, verify_poly, verify_mode_name, verify_report;
  auto* ver = app.add_subcommand("verify", "Verify a dataset against a production set");
  ver->add_option("dataset", verify_ds, "Dataset file")->required();
  ver->add_option("--polytope", verify_poly, "Production set file")->required();
  ver->add_option("--mode", verify_mode_name, "weak or strong")->required();
  ver->add_option("--report", verify_report, "Write JSON reports here");

  GenerateArgs gen_args;
  auto* gen = app.add_subcommand("generate", "Sample a dataset from an oracle");
  gen->add_option("--oracle", gen_args.oracle, "polytope:<file> | ball:<r> | rotation:<deg> | figure1:<file>")
      ->required();
  gen->add_option("--prices", gen_args.prices, "sphere:<n> | grid:<k> | file:<f>")->required();
  gen->add_option("--count", gen_args.count, "Random grid draws (default: the whole box)");
  gen->add_option("--dup", gen_args.dup, "<k>:<l1>,...,<lk> adds l*p after each price p");
  gen->add_option("--ties", gen_args.ties, "Extra prices with tied maximizers (polytope oracle)");
  gen->add_option("--seed", gen_args.seed, "Random seed")->required();
  gen->add_option("--out", gen_args.out, "Output dataset file")->required();
  gen->add_option("--dimension", gen_args.dimension, "Dimension for the ball oracle")->check(CLI::Range(2, 1000));
  gen->add_option("--scalar", gen_args.scalar, "rational or float")->check(CLI::IsMember({"rational", "float"}));
  gen->add_option("--domain", gen_args.domain, "all_reals or nonneg_orthant");

  std::string pert_ds, pert_out;
  double noise = 0;
  std::optional<std::uint64_t> pert_seed;
  auto* pert = app.add_subcommand("perturb", "Add uniform noise to every plan");
  pert->add_option("dataset", pert_ds, "Dataset file")->required();
  pert->add_option("--noise", noise, "Noise half-width")->required()->check(CLI::NonNegativeNumber);
  pert->add_option("--seed", pert_seed, "Random seed")->required();
  pert->add_option("--out", pert_out, "Output dataset file")->required();

  JacobianArgs jac_args;
  auto* jac = app.add_subcommand("jacobian", "Finite-difference checks of a smooth supply function");
  jac->set_help_flag("--help", "Print this help message and exit");
  jac->add_option("--oracle", jac_args.oracle, "ball:<r> | rotation:<deg> | polytope:<file>")->required();
  jac->add_option("--at", jac_args.at, "Price, comma separated; repeatable")->required();
  jac->add_option("--h", jac_args.h, "Relative step");
  jac->add_option("--dimension", jac_args.dimension, "Dimension for the ball oracle")->check(CLI::Range(2, 1000));
  jac->add_option("--report", jac_args.report, "Write JSON reports here");

  std::string demo_name, demo_s = "endpoints+midpoint";
  auto* demo = app.add_subcommand("demo", "Worked counterexample");
  demo->add_option("name", demo_name, "figure1")->required();
  demo->add_option("--s", demo_s, "endpoints | endpoints+midpoint | <file>");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front())
      err << "usage: see `supplycheck " << sub->get_name() << " --help`\n";
    return kExitUsage;
  }

  try {
    if (check->parsed())
      return std::visit([&](auto&& ds) { return run_check(std::move(ds), check_args, out); },
                        load_dataset(check_args.dataset));
    if (rat->parsed()) {
      auto any = load_dataset(rat_args.dataset);
      return std::visit([&](const auto& ds) { return run_rationalize(ds, rat_args, out); }, any);
    }
    if (ver->parsed()) {
      auto any_ds = load_dataset(verify_ds);
      auto any_y = load_polytope(verify_poly);
      if (any_ds.index() != any_y.index()) throw ModeError("dataset and production set use different scalar modes");
      return std::visit(
          [&](const auto& ds) {
            using S = typename std::decay_t<decltype(ds)>::scalar_type;
            const auto report = verify_mode(verify_mode_name, ds, std::get<PolytopeV<S>>(any_y));
            write_report(verify_report, Json::array({to_json(report)}));
            return summarize(out, ds, report) ? kExitPass : kExitFail;
          },
          any_ds);
    }
    if (gen->parsed()) {
      const auto [kind, arg] = split_tag(gen_args.oracle, "--oracle");
      const ScalarMode mode = gen_args.scalar.empty()   ? default_mode(kind, arg)
                              : gen_args.scalar == "float" ? ScalarMode::floating
                                                           : ScalarMode::rational;
      return mode == ScalarMode::rational ? run_generate<Rational>(gen_args, out) : run_generate<double>(gen_args, out);
    }
    if (pert->parsed()) {
      auto any = load_dataset(pert_ds);
      const Dataset<double> ds =
          std::holds_alternative<Dataset<double>>(any) ? std::get<Dataset<double>>(any) : to_float(std::get<Dataset<Rational>>(any));
      const auto noisy = perturb(ds, noise, *pert_seed);
      save_dataset(noisy, pert_out);
      out << "perturbed " << noisy.plan_count() << " plans with noise " << format_scalar(noise) << " -> " << pert_out
          << "\n";
      return kExitPass;
    }
    if (jac->parsed()) return run_jacobian(jac_args, out);
    if (demo->parsed()) return run_demo(demo_name, demo_s, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace supply::cli
