// Acceptance suite. Prints one PASS/FAIL line per criterion; exits nonzero if
// any selected criterion fails.
//
//   supply_acceptance            all criteria
//   supply_acceptance 1 4 6      selected criteria

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "supply/checks.hpp"
#include "supply/cli.hpp"
#include "supply/generate.hpp"
#include "supply/io.hpp"
#include "supply/rationalize.hpp"
#include "supply/smooth.hpp"
#include "support/audit.hpp"
#include "support/fixtures.hpp"

using namespace supply;
using fixtures::q;
using fixtures::QV;
using fixtures::qv;

namespace {

// Corpus shape.
constexpr std::uint64_t kSeed = 1789;
constexpr int kCorpora = 500;
constexpr int kMinDimension = 2, kMaxDimension = 5;
constexpr int kMinGenerators = 3, kMaxGenerators = 12;
constexpr int kLatticeBox = 5;
constexpr int kLatticePrices = 50;
constexpr int kTiePrices = 17;
const std::vector<Rational> kMultipliers = {Rational(2), Rational(1, 3)};
constexpr std::size_t kMinPrices = 200;
constexpr double kRuntimeBudgetSeconds = 60.0;

constexpr int kMutations = 200;
constexpr int kRandomDatasets = 2000;

// Smooth-body thresholds.
constexpr int kJacobianPrices = 20;
constexpr double kStep = 1e-5;
constexpr double kSymmetryTol = 1e-6;
constexpr double kPsdTol = 1e-7;
constexpr double kEulerTol = 1e-6;
constexpr double kHalvingRatio = 3.5;
constexpr double kRoundingFloor = 1e-11;

struct Verdict {
  bool passed = false;
  std::string summary;
  std::vector<std::string> notes;
};

/// Report files of one run, and the tally of every emitted witness.
class Recorder {
 public:
  explicit Recorder(unsigned threads) { opts_.threads = threads; }

  const CheckOptions& options() const { return opts_; }

  template <typename Scalar>
  void record(const std::string& file, const Dataset<Scalar>& ds, const CheckReport<Scalar>& report,
              const PolytopeV<Scalar>* y = nullptr) {
    files_[file].push_back(to_json(report));
    witnesses_ += report.witnesses.size();
    for (auto& p : audit::check_witnesses(audit::Context<Scalar>{ds, y}, report))
      problems_.push_back(file + ": " + p);
  }

  void attach(const std::string& file, Json doc) { files_[file].push_back(std::move(doc)); }

  void attach_text(const std::string& file, const std::string& text) { texts_[file] += text; }

  /// An extension witness re-evaluated by the caller.
  void extension(bool confirmed, const std::string& what) {
    ++witnesses_;
    if (!confirmed) problems_.push_back(what);
  }

  std::size_t witnesses() const { return witnesses_; }
  const std::vector<std::string>& problems() const { return problems_; }

  void write(const std::filesystem::path& dir) const {
    for (const auto& [name, docs] : files_) write_file(dir / name, render(Json(docs)));
    for (const auto& [name, text] : texts_) write_file(dir / name, text);
  }

 private:
  CheckOptions opts_;
  std::map<std::string, std::vector<Json>> files_;
  std::map<std::string, std::string> texts_;
  std::size_t witnesses_ = 0;
  std::vector<std::string> problems_;
};

// ---------------------------------------------------------------------------
// Polytope corpora.

struct Corpus {
  PolytopeV<Rational> body;
  Dataset<Rational> dataset;
  std::size_t prices = 0;
  std::size_t ties = 0;
};

Corpus make_corpus(int k) {
  std::mt19937_64 rng(kSeed + static_cast<std::uint64_t>(k));
  const Index n = kMinDimension + k % (kMaxDimension - kMinDimension + 1);
  Corpus c{random_lattice_polytope<Rational>(n, kMinGenerators, kMaxGenerators, kLatticeBox, rng),
           Dataset<Rational>(n)};
  GeneratorConfig<Rational> cfg;
  std::uniform_int_distribution<int> coord(-kLatticeBox, kLatticeBox);
  for (int i = 0; i < kLatticePrices; ++i) {
    QV p(n);
    for (Index j = 0; j < n; ++j) p(j) = coord(rng);
    cfg.prices.push_back(std::move(p));
  }
  for (int i = 0; i < kTiePrices; ++i)
    if (auto t = tie_price(c.body, kLatticeBox, rng)) {
      cfg.prices.push_back(std::move(*t));
      ++c.ties;
    }
  cfg.multipliers = kMultipliers;
  c.prices = cfg.prices.size() * (1 + kMultipliers.size());
  c.dataset = generate(SupplyOracle<Rational>::polytope(c.body), cfg).dataset;
  return c;
}

struct Pipeline {
  explicit Pipeline(unsigned threads) : rec(threads) {}

  Recorder rec;
  std::vector<Corpus> corpora;
  std::vector<char> los_passed;
  std::vector<Dataset<Rational>> mutated;
  std::map<int, Verdict> verdicts;
};

void suite1(Pipeline& run) {
  const auto start = std::chrono::steady_clock::now();
  const auto& opts = run.rec.options();
  int failures = 0;
  std::size_t min_prices = SIZE_MAX, min_ties = SIZE_MAX;
  std::vector<std::string> notes;
  for (int k = 0; k < kCorpora; ++k) {
    Corpus c = make_corpus(k);
    const auto& ds = c.dataset;
    min_prices = std::min(min_prices, c.prices);
    min_ties = std::min(min_ties, c.ties);
    bool ok = true;
    for (const auto& report : {check_law_of_supply(ds, opts), check_homogeneity(ds, opts), check_wapm(ds, opts),
                               check_constant_profit(ds, opts), check_cyclic_monotonicity(ds, opts)}) {
      if (report.check == "law_of_supply") run.los_passed.push_back(report.passed());
      ok = ok && report.passed();
      if (!report.passed() && notes.size() < 5) notes.push_back("corpus " + std::to_string(k) + " fails " + report.check);
      run.rec.record("suite1_checks.json", ds, report);
    }
    const auto built = rationalize_build(ds, opts);
    const auto* result = std::get_if<RationalizationResult<Rational>>(&built);
    const bool weak = result && result->weak_verified;
    if (!weak && notes.size() < 5) notes.push_back("corpus " + std::to_string(k) + " not weakly rationalized");
    run.rec.attach("suite1_rationalize.json",
                   Json{{"corpus", k}, {"weak_verified", weak},
                        {"generators", result ? result->production_set.size() : 0}});
    failures += !(ok && weak);
    run.corpora.push_back(std::move(c));
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool enough_prices = min_prices >= kMinPrices && min_ties > 0;
  auto& v = run.verdicts[1];
  v.passed = failures == 0 && enough_prices && seconds < kRuntimeBudgetSeconds;
  std::ostringstream s;
  s << kCorpora << " corpora, >= " << min_prices << " prices each (>= " << min_ties << " tie prices), "
    << failures << " failures, " << std::fixed << std::setprecision(1) << seconds << " s (budget "
    << kRuntimeBudgetSeconds << " s)";
  v.summary = s.str();
  v.notes = notes;
}

/// Index of a generator of `plans` outside the hull of the others.
std::optional<std::size_t> extreme_plan(const std::vector<QV>& plans) {
  for (std::size_t k = 0; k < plans.size(); ++k) {
    std::vector<QV> others;
    for (std::size_t j = 0; j < plans.size(); ++j)
      if (j != k) others.push_back(plans[j]);
    if (!hull_membership(PolytopeV<Rational>(others), plans[k]).member) return k;
  }
  return std::nullopt;
}

void suite2(Pipeline& run) {
  const auto& opts = run.rec.options();
  int strong_failures = 0;
  for (const auto& c : run.corpora) {
    const auto report = verify_strong(c.dataset, c.body, opts);
    strong_failures += !report.passed();
    run.rec.record("suite2_strong.json", c.dataset, report, &c.body);
  }

  int flipped = 0, attempted = 0;
  std::vector<std::string> notes;
  for (std::size_t k = 0; k < run.corpora.size() && attempted < kMutations; ++k) {
    const auto& c = run.corpora[k];
    const auto& ds = c.dataset;
    std::optional<std::size_t> target, removed;
    for (std::size_t i = 0; i < ds.size() && !target; ++i) {
      if (ds[i].kind != SetKind::hull || ds[i].plans.size() < 2) continue;
      if ((removed = extreme_plan(ds[i].plans))) target = i;
    }
    if (!target) continue;
    ++attempted;
    Dataset<Rational> m(ds.dimension(), ds.tolerance(), ds.price_domain());
    for (std::size_t i = 0; i < ds.size(); ++i) {
      auto o = ds[i];
      if (i == *target) o.plans.erase(o.plans.begin() + static_cast<std::ptrdiff_t>(*removed));
      m.add(std::move(o));
    }
    const QV& gone = ds[*target].plans[*removed];
    const auto report = verify_strong(m, c.body, opts);
    const std::size_t problems_before = run.rec.problems().size();
    run.rec.record("suite2_mutations.json", m, report, &c.body);
    bool names_it = false;
    for (const auto& w : report.witnesses)
      if (const auto* mp = std::get_if<MissingPlanWitness<Rational>>(&w))
        names_it = names_it || (mp->observation == *target && mp->point == gone);
    const bool ok = !report.passed() && names_it && run.rec.problems().size() == problems_before;
    flipped += ok;
    if (!ok && notes.size() < 5)
      notes.push_back("corpus " + std::to_string(k) + ": removing " + format_vector(gone) + " not detected");
    run.mutated.push_back(std::move(m));
  }

  auto& v = run.verdicts[2];
  v.passed = strong_failures == 0 && attempted == kMutations && flipped == kMutations;
  v.summary = std::to_string(run.corpora.size() - static_cast<std::size_t>(strong_failures)) + "/" +
              std::to_string(run.corpora.size()) + " corpora strongly verified, " + std::to_string(flipped) + "/" +
              std::to_string(attempted) + " mutations caught (target " + std::to_string(kMutations) + ")";
  v.notes = notes;
}

void suite3(Pipeline& run) {
  const auto& opts = run.rec.options();
  const auto generated_los = static_cast<std::size_t>(std::count(run.los_passed.begin(), run.los_passed.end(), 1));

  std::size_t datasets = 0, wapm_passes = 0, implication_failures = 0, los_failures = 0;
  auto implication = [&](const Dataset<Rational>& ds, const std::string& file) {
    const auto wapm = check_wapm(ds, opts);
    const auto los = check_law_of_supply(ds, opts);
    run.rec.record(file, ds, wapm);
    run.rec.record(file, ds, los);
    ++datasets;
    los_failures += !los.passed();
    if (!wapm.passed()) return;
    ++wapm_passes;
    implication_failures += !los.passed();
  };
  for (const auto& c : run.corpora) implication(c.dataset, "suite3_corpora.json");
  for (const auto& m : run.mutated) implication(m, "suite3_mutations.json");
  std::mt19937_64 rng(kSeed + 3);
  for (int k = 0; k < kRandomDatasets; ++k)
    implication(fixtures::random_dataset<Rational>(rng, 2 + k % 3, 2 + k % 3, 2), "suite3_random.json");

  auto& v = run.verdicts[3];
  v.passed = generated_los == run.corpora.size() && !run.corpora.empty() && implication_failures == 0;
  v.summary = std::to_string(generated_los) + "/" + std::to_string(run.corpora.size()) +
              " generated corpora pass the law of supply; WAPM => law of supply on " + std::to_string(datasets) +
              " datasets (" + std::to_string(wapm_passes) + " WAPM passes, " + std::to_string(los_failures) +
              " law-of-supply failures, " + std::to_string(implication_failures) + " counterexamples)";
}

// ---------------------------------------------------------------------------
// Two-good counterexample.

void suite4(Pipeline& run) {
  std::vector<std::string> notes;
  auto demo = [] {
    std::ostringstream out, err;
    const int code = cli::run({"demo", "figure1", "--s", "endpoints+midpoint"}, out, err);
    return std::make_pair(code, out.str());
  };
  const auto [code, text] = demo();
  const bool repeatable = demo() == std::make_pair(code, text);
  run.rec.attach_text("suite4_demo.txt", text);
  auto has = [&, &text = text](const std::string& line) {
    const bool found = text.find(line) != std::string::npos;
    if (!found) notes.push_back("demo output lacks '" + line + "'");
    return found;
  };
  bool demo_ok = code == cli::kExitFail && repeatable;
  for (const char* line : {"PASS law_of_supply", "PASS homogeneity", "Y = conv (1,0) (0,1) (1/2,1/2)\n",
                           "PASS verify_weak", "FAIL verify_strong",
                           "extension witness: p* = (1,1), z* = (1/4,3/4), attains_support = true, "
                           "monotone_consistent = true, structural = true"})
    demo_ok = has(line) && demo_ok;

  // The same pipeline through the library.
  const std::vector<QV> s = {qv({0, 1}), qv({1, 0}), qv({q(1, 2), q(1, 2)})};
  const auto oracle = SupplyOracle<Rational>::figure1(s);
  const std::vector<QV> probes = {qv({2, 1}), qv({1, 2}), qv({1, 1})};
  GeneratorConfig<Rational> cfg;
  cfg.prices = probes;
  cfg.multipliers = {Rational(2)};
  const auto ds = generate(oracle, cfg).dataset;
  const auto& opts = run.rec.options();
  const auto los = check_law_of_supply(ds, opts), h0 = check_homogeneity(ds, opts);
  run.rec.record("suite4_figure1.json", ds, los);
  run.rec.record("suite4_figure1.json", ds, h0);
  const auto built = rationalize_build(ds, opts);
  const auto* result = std::get_if<RationalizationResult<Rational>>(&built);
  bool lib_ok = los.passed() && h0.passed() && result && result->weak_verified;
  if (result) {
    const auto& y = result->production_set;
    auto gens = y.generator_list(), expected = s;
    std::sort(gens.begin(), gens.end(), LexLess<Rational>{});
    std::sort(expected.begin(), expected.end(), LexLess<Rational>{});
    lib_ok = lib_ok && gens == expected;
    const auto weak = verify_weak(ds, y, opts), strong = verify_strong(ds, y, opts);
    run.rec.record("suite4_figure1.json", ds, weak, &y);
    run.rec.record("suite4_figure1.json", ds, strong, &y);
    lib_ok = lib_ok && weak.passed() && !strong.passed();

    const auto w = extension_witness(oracle, y, probes);
    lib_ok = lib_ok && w && w->price == qv({1, 1}) && w->plan == qv({q(1, 4), q(3, 4)}) && w->attains_support &&
             w->monotone_consistent && w->structural;
    if (w) {
      run.rec.attach("suite4_figure1.json", to_json(*w));
      // Independent re-evaluation of both certificates.
      const auto p = audit::to_q<Rational>(w->price), z = audit::to_q<Rational>(w->plan);
      bool monotone = true;
      for (const auto& pr : probes)
        for (const auto& z2 : oracle_supply(oracle, pr).plans)
          monotone = monotone && audit::qdot(audit::qsub(p, audit::to_q<Rational>(pr)),
                                             audit::qsub(z, audit::to_q<Rational>(z2))) >= 0;
      const bool attains = audit::support_q(y, p) == audit::qdot(p, z);
      const bool absent = std::find(s.begin(), s.end(), w->plan) == s.end();
      run.rec.extension(attains == w->attains_support && monotone == w->monotone_consistent && absent,
                        "suite4: extension witness certificates do not re-evaluate");
    }
  }

  auto& v = run.verdicts[4];
  v.passed = demo_ok && lib_ok;
  v.summary = std::string("demo exit ") + std::to_string(code) + (repeatable ? ", repeatable" : ", NOT repeatable") +
              "; library pipeline " + (lib_ok ? "matches" : "DIFFERS");
  v.notes = notes;
}

// ---------------------------------------------------------------------------
// Rotation corpus.

void suite5(Pipeline& run) {
  const auto& opts = run.rec.options();
  const auto oracle = SupplyOracle<Rational>::rotation(90);
  GeneratorConfig<Rational> cfg;
  cfg.prices = {qv({1, 0}), qv({0, 1}), qv({-1, 0})};
  const auto ds = generate(oracle, cfg).dataset;
  cfg.multipliers = {Rational(2)};
  const auto dup = generate(oracle, cfg).dataset;

  const auto los = check_law_of_supply(ds, opts);
  const auto h0_plain = check_homogeneity(ds, opts);
  const auto h0 = check_homogeneity(dup, opts);
  const auto los_dup = check_law_of_supply(dup, opts);
  const auto cyclic = check_cyclic_monotonicity(ds, opts);
  CheckOptions bounded = opts;
  bounded.max_cycle_len = 3;
  const auto enumerated = check_cyclic_monotonicity(ds, bounded);
  for (const auto* r : {&los, &h0_plain, &cyclic, &enumerated}) run.rec.record("suite5_rotation.json", ds, *r);
  for (const auto* r : {&h0, &los_dup}) run.rec.record("suite5_rotation.json", dup, *r);

  auto weight = [](const CheckReport<Rational>& r) -> std::optional<Rational> {
    if (r.witnesses.empty()) return std::nullopt;
    if (const auto* c = std::get_if<CycleWitness<Rational>>(&r.witnesses.front())) return c->weight;
    return std::nullopt;
  };
  const auto detected = weight(cyclic), bounded_weight = weight(enumerated);
  const auto brute = audit::min_cycle_weight(ds, 3);
  const bool agree = brute && detected && audit::to_q(*detected) == *brute && bounded_weight &&
                     *bounded_weight == *detected && cyclic.passed() == (*brute >= 0);

  auto& v = run.verdicts[5];
  v.passed = los.passed() && los_dup.passed() && !h0.passed() && !cyclic.passed() && detected &&
             *detected == -2 && agree;
  v.summary = std::string("law of supply ") + (los.passed() ? "PASS" : "FAIL") + ", homogeneity " +
              (h0.passed() ? "PASS" : "FAIL") + " (with 2p duplicates), cycle weight " +
              (detected ? format_scalar(*detected) : std::string("none")) + ", brute force (length <= 3) " +
              (brute ? brute->get_str() : std::string("none")) + (agree ? ", agree" : ", DISAGREE");
  v.notes.push_back("homogeneity on the three prices alone: " + std::string(h0_plain.passed() ? "PASS" : "FAIL") +
                    " (" + std::to_string(h0_plain.stats.examined) + " pairs examined, none on a common ray)");
}

// ---------------------------------------------------------------------------
// Smooth body.

std::vector<Eigen::VectorXd> sphere_prices(int count, Index n, std::uint64_t seed) {
  GeneratorConfig<double> cfg;
  cfg.sampler = PriceSampler::unit_sphere;
  cfg.count = static_cast<std::size_t>(count);
  cfg.seed = seed;
  const auto ds = generate(SupplyOracle<double>::ball(n, 1.0), cfg).dataset;
  std::vector<Eigen::VectorXd> out;
  for (const auto& o : ds.observations()) out.push_back(o.price);
  return out;
}

void suite6(Pipeline& run) {
  const auto oracle = SupplyOracle<double>::ball(2, 1.0);
  const auto prices = sphere_prices(kJacobianPrices, 2, kSeed + 6);
  const auto check =
      check_jacobian_conditions(oracle, prices, kStep, JacobianTolerances{kSymmetryTol, kPsdTol, kEulerTol});
  for (const auto& r : check.reports) run.rec.attach("suite6_jacobian.json", to_json(r));
  double worst_sym = 0, worst_eig = 1e300, worst_euler = 0;
  for (const auto& r : check.reports) {
    worst_sym = std::max(worst_sym, r.symmetry_defect);
    worst_eig = std::min(worst_eig, r.min_eigenvalue);
    worst_euler = std::max(worst_euler, r.euler_residual);
  }

  // Halve the default step wherever its residual is above the rounding floor.
  int pairs = 0, slow = 0;
  double worst_ratio = 1e300;
  std::vector<std::string> notes;
  for (std::size_t k = 0; k < prices.size(); ++k) {
    const double r = jacobian_report(oracle, prices[k], kStep).euler_residual;
    const double finer = jacobian_report(oracle, prices[k], kStep / 2).euler_residual;
    const bool above = r > kRoundingFloor;
    run.rec.attach("suite6_halving.json",
                   Json{{"price", k}, {"residual", r}, {"halved", finer}, {"above_floor", above}});
    if (!above) continue;
    const double ratio = r / finer;
    ++pairs;
    worst_ratio = std::min(worst_ratio, ratio);
    if (ratio >= kHalvingRatio) continue;
    ++slow;
    std::ostringstream s;
    s << "price " << k << ": residual " << r << " -> " << finer << " (ratio " << ratio << ")";
    notes.push_back(s.str());
  }

  // Same test in the truncation regime, for reference.
  double regime_min = 1e300;
  for (const auto& p : prices)
    for (double h = 1e-2; h > 2e-4; h /= 2) {
      const double coarse = jacobian_report(oracle, p, h).euler_residual;
      if (coarse < 1e-8) continue;
      regime_min = std::min(regime_min, coarse / jacobian_report(oracle, p, h / 2).euler_residual);
    }
  {
    std::ostringstream s;
    s << "truncation regime (h from 1e-2 to 5e-4): smallest halving ratio " << regime_min;
    notes.push_back(s.str());
  }

  auto& v = run.verdicts[6];
  v.passed = check.passed && worst_sym <= kSymmetryTol && worst_eig >= -kPsdTol && worst_euler <= kEulerTol &&
             pairs > 0 && slow == 0;
  std::ostringstream s;
  s << prices.size() << " prices at h = " << kStep << ": symmetry " << worst_sym << " (<= " << kSymmetryTol
    << "), min eigenvalue " << worst_eig << " (>= " << -kPsdTol << "), Euler " << worst_euler << " (<= " << kEulerTol
    << "); halving h at " << pairs << " prices above " << kRoundingFloor << ": " << pairs - slow << " reduce by >= "
    << kHalvingRatio << "x (worst " << worst_ratio << ")";
  v.summary = s.str();
  v.notes = notes;
}

void suite7(Pipeline& run) {
  auto& v = run.verdicts[7];
  const auto& problems = run.rec.problems();
  v.passed = problems.empty() && run.rec.witnesses() > 0;
  v.summary = std::to_string(run.rec.witnesses()) + " witnesses re-evaluated, " + std::to_string(problems.size()) +
              " spurious";
  for (std::size_t k = 0; k < problems.size() && k < 5; ++k) v.notes.push_back(problems[k]);
}

Pipeline run_suites(unsigned threads, const std::set<int>& suites) {
  Pipeline run(threads);
  if (suites.count(1)) suite1(run);
  if (suites.count(2)) suite2(run);
  if (suites.count(3)) suite3(run);
  if (suites.count(4)) suite4(run);
  if (suites.count(5)) suite5(run);
  if (suites.count(6)) suite6(run);
  if (suites.count(7)) suite7(run);
  return run;
}

/// Temporary directory removed on destruction.
struct TempDir {
  explicit TempDir(const std::string& tag) : path(std::filesystem::temp_directory_path() /
                                                  ("supply-acceptance-" + tag + "-" +
                                                   std::to_string(std::random_device{}()))) {
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  std::filesystem::path path;
};

std::map<std::string, std::string> read_dir(const std::filesystem::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    out[entry.path().filename().string()] = read_file(entry.path());
  return out;
}

Verdict determinism(const std::set<int>& suites, Pipeline& first) {
  const std::vector<unsigned> repeats = {1, 4};
  TempDir base("base");
  first.rec.write(base.path);
  const auto reference = read_dir(base.path);
  Verdict v;
  v.passed = !reference.empty();
  std::size_t bytes = 0;
  for (const auto& [name, text] : reference) bytes += text.size();
  for (unsigned threads : repeats) {
    TempDir dir("t" + std::to_string(threads));
    run_suites(threads, suites).rec.write(dir.path);
    const auto files = read_dir(dir.path);
    for (const auto& [name, text] : reference) {
      const auto it = files.find(name);
      if (it == files.end() || it->second != text) {
        v.passed = false;
        v.notes.push_back(name + " differs with " + std::to_string(threads) + " thread(s)");
      }
    }
    if (files.size() != reference.size()) v.passed = false;
  }
  v.summary = std::to_string(reference.size()) + " report files (" + std::to_string(bytes) +
              " bytes) byte-identical across " + std::to_string(repeats.size() + 1) +
              " runs with 2, 1 and 4 threads";
  if (!v.passed) v.summary = "report files differ: " + v.summary;
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> criteria;
  for (int i = 1; i < argc; ++i) {
    const int c = std::atoi(argv[i]);
    if (c < 1 || c > 8) {
      std::cerr << "usage: " << argv[0] << " [criterion 1-8 ...]\n";
      return 2;
    }
    criteria.insert(c);
  }
  if (criteria.empty()) criteria = {1, 2, 3, 4, 5, 6, 7, 8};

  // Suites each selected criterion depends on.
  std::set<int> suites;
  for (int c : criteria) {
    if (c == 7 || c == 8) {
      suites = {1, 2, 3, 4, 5, 6, 7};
      break;
    }
    if (c == 2 || c == 3) suites.insert(1);
    if (c == 3) suites.insert(2);
    suites.insert(c);
  }

  try {
    Pipeline run = run_suites(2, suites);
    if (criteria.count(8)) run.verdicts[8] = determinism(suites, run);

    bool all = true;
    for (int c : criteria) {
      const auto& v = run.verdicts.at(c);
      all = all && v.passed;
      std::cout << (v.passed ? "PASS" : "FAIL") << " criterion " << c << ": " << v.summary << "\n";
      for (const auto& note : v.notes) std::cout << "    " << note << "\n";
    }
    return all ? 0 : 1;
  } catch (const std::exception& e) {
    std::cout << "FAIL acceptance aborted: " << e.what() << "\n";
    return 1;
  }
}
