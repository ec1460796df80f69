#include "exotic/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "exotic/census.hpp"
#include "exotic/classify.hpp"
#include "exotic/error.hpp"
#include "exotic/io.hpp"
#include "exotic/suites.hpp"

namespace exotic {

namespace {

struct CommandConfig {
  std::string subcommand;
  int n = 1;
  std::uint64_t p = 3;
  std::string format = "json";
  std::string input;
  std::string label;
  std::string suite;
  std::string flavor = "lie";
  unsigned jobs = 1;
  std::string checkpoint;
  std::uint64_t seed = 20240601;
  bool inject_mismatch = false;
};

constexpr int kSuccess = 0;
constexpr int kCheckFailure = 1;
constexpr int kUsage = 2;

const std::vector<std::string> kSuites = {
    "restriction",    "d-diff",   "sum-squares", "determine",      "chartable", "closure-poset",
    "graded",         "stabilizer-dim", "parabolic", "invariance", "census",    "strata",
    "closure-shadow", "log-map",  "klyachko"};

Flavor flavor_of(const std::string& s) { return s == "group" ? Flavor::Group : Flavor::Lie; }

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream is(path);
  if (!is) throw Error(ErrorKind::UsageError, "cannot read " + path);
  return {std::istreambuf_iterator<char>(is), {}};
}

Json hasse_json(int n) {
  Json nodes = Json::array();
  for (const auto& label : bipartitions_of(n)) nodes.push_back(Json{{"label", label.to_string()}, {"dim", orbit_dim(label, n)}});
  Json covers = Json::array();
  for (const auto& [upper, lower] : hasse_covers(n)) covers.push_back(Json::array({upper.to_string(), lower.to_string()}));
  return Json{{"n", n}, {"nodes", nodes}, {"covers", covers}};
}

CensusOptions census_options(const CommandConfig& cfg, Flavor flavor) {
  CensusOptions opts;
  opts.jobs = cfg.jobs;
  opts.flavor = flavor;
  if (!cfg.checkpoint.empty()) opts.checkpoint = cfg.checkpoint;
  return opts;
}

int run_verify(const CommandConfig& cfg, std::ostream& out) {
  const int n = cfg.n;
  const auto p = static_cast<Scalar>(cfg.p);
  Json extra;
  Report report;
  const std::string& s = cfg.suite;
  if (s == "restriction") {
    report = verify_restriction(n);
  } else if (s == "d-diff") {
    report = d_difference_check(n);
  } else if (s == "sum-squares") {
    report = sum_squares_report(n);
  } else if (s == "determine") {
    report = determination_report(n);
  } else if (s == "chartable") {
    report = chartable_report(n);
  } else if (s == "closure-poset") {
    report = closure_poset_report(n);
  } else if (s == "graded") {
    report = graded_report(n);
  } else if (s == "stabilizer-dim") {
    report = stabilizer_dim_report(n, p);
  } else if (s == "parabolic") {
    report = parabolic_report(n, p);
  } else if (s == "invariance") {
    report = invariance_report(n, p, cfg.seed);
  } else if (s == "census" || s == "strata" || s == "closure-shadow") {
    const CensusResult census = orbit_census(n, p, census_options(cfg, flavor_of(cfg.flavor)));
    extra = census_to_json(census);
    if (s == "census") report = census_report(census);
    if (s == "strata") report = strata_check(census);
    if (s == "closure-shadow") report = closure_shadow_check(census);
  } else if (s == "log-map") {
    CensusOptions opts = census_options(cfg, Flavor::Lie);
    opts.orbit_checks = false;
    opts.checkpoint.reset();
    const CensusResult lie = orbit_census(n, p, opts);
    opts.flavor = Flavor::Group;
    const CensusResult group = orbit_census(n, p, opts);
    report = compare_censuses(lie, group);
  } else if (s == "klyachko") {
    const KlyachkoReport k = klyachko_census(n, p);
    extra = klyachko_to_json(k);
    report = klyachko_as_report(k);
  } else {
    throw Error(ErrorKind::UsageError, "unknown suite '" + s + "'");
  }
  report.suite = s;
  if (cfg.inject_mismatch) report.mismatches.push_back({"injected", "test hook", "0", "1"});
  Json doc = extra.is_object() ? extra : Json::object();
  doc["report"] = report_to_json(report);
  out << doc.dump(2) << '\n';
  return report.passed() ? kSuccess : kCheckFailure;
}

int dispatch(const CommandConfig& cfg, std::ostream& out) {
  const int n = cfg.n;
  const std::string& sub = cfg.subcommand;
  if (n < 1) throw Error(ErrorKind::UsageError, "n must be >= 1");
  require_odd_prime(cfg.p);
  if (cfg.jobs < 1) throw Error(ErrorKind::UsageError, "jobs must be >= 1");

  if (sub == "orbits") {
    if (cfg.format == "tsv") out << orbits_to_tsv(n);
    else out << orbits_to_json(n).dump(2) << '\n';
  } else if (sub == "hasse") {
    if (cfg.format == "dot") out << hasse_dot(n);
    else out << hasse_json(n).dump(2) << '\n';
  } else if (sub == "chartable") {
    const CharacterTable table = CharacterTable::build(n);
    if (cfg.format == "tsv") out << chartable_to_tsv(table);
    else out << chartable_to_json(table).dump(2) << '\n';
  } else if (sub == "springer") {
    const SpringerTable table = springer_table(n);
    if (cfg.format == "tsv") out << springer_to_tsv(table);
    else out << springer_to_json(table).dump(2) << '\n';
  } else if (sub == "branch") {
    const BranchingMatrix b = restrict_branching(n);
    if (cfg.format == "tsv") out << branching_to_tsv(b);
    else out << branching_to_json(b).dump(2) << '\n';
  } else if (sub == "classify") {
    const ExoticPair pair = pair_from_json(parse_json(read_input(cfg.input)));
    const Bipartition label = exotic_type(pair);
    const int rank = pair.space.n;
    out << Json{{"label", label.to_string()},
                {"dim_orbit", orbit_dim(label, rank)},
                {"d", fiber_dim_d(label, rank)},
                {"stab_dim", stabilizer_dim(pair, true)}}
               .dump(2)
        << '\n';
  } else if (sub == "repr") {
    const Bipartition label = Bipartition::parse(cfg.label);
    const SymplecticSpace space(n, static_cast<Scalar>(cfg.p));
    ExoticPair pair = normal_form_pair(label, space).pair;
    if (cfg.flavor == "lie") pair = ExoticPair{space, log_map(pair.x), pair.v, Flavor::Lie};
    out << pair_to_json(pair).dump(2) << '\n';
  } else if (sub == "verify") {
    return run_verify(cfg, out);
  }
  return kSuccess;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CommandConfig cfg;
  CLI::App app{"Exotic nilpotent cone: orbits, characters and finite-field checks", "exotic"};
  app.require_subcommand(1);

  auto add_n = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--n", cfg.n, "rank n");
    if (required) opt->required();
  };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(formats));
  };
  auto* orbits = app.add_subcommand("orbits", "orbit labels with dimension and d");
  add_n(orbits);
  add_format(orbits, {"json", "tsv"});
  auto* hasse = app.add_subcommand("hasse", "closure order covers");
  add_n(hasse);
  add_format(hasse, {"json", "dot"});
  auto* chartable = app.add_subcommand("chartable", "character table of W_n");
  add_n(chartable);
  add_format(chartable, {"json", "tsv"});
  auto* springer = app.add_subcommand("springer", "orbit / irrep table");
  add_n(springer);
  add_format(springer, {"json", "tsv"});
  auto* branch = app.add_subcommand("branch", "restriction multiplicities W_n to W_{n-1}");
  add_n(branch);
  add_format(branch, {"json", "tsv"});
  auto* classify = app.add_subcommand("classify", "label of an exotic pair read as JSON");
  classify->add_option("--input", cfg.input, "pair JSON file, '-' for stdin")->required();
  auto* repr = app.add_subcommand("repr", "normal-form pair for a label");
  add_n(repr);
  repr->add_option("--p", cfg.p, "odd prime");
  repr->add_option("--label", cfg.label, "bipartition, e.g. 2,1|1")->required();
  repr->add_option("--flavor", cfg.flavor, "lie or group")->check(CLI::IsMember({"lie", "group"}));
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_n(verify);
  verify->add_option("--suite", cfg.suite, "suite name")->required()->check(CLI::IsMember(kSuites));
  verify->add_option("--p", cfg.p, "odd prime");
  verify->add_option("--jobs", cfg.jobs, "census worker threads");
  verify->add_option("--checkpoint", cfg.checkpoint, "census checkpoint file");
  verify->add_option("--seed", cfg.seed, "seed for randomized suites");
  verify->add_option("--flavor", cfg.flavor, "census flavor")->check(CLI::IsMember({"lie", "group"}));
  verify->add_flag("--inject-mismatch", cfg.inject_mismatch)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  for (auto* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();

  try {
    return dispatch(cfg, out);
  } catch (const Error& e) {
    err << Json{{"error", to_string(e.kind())}, {"message", e.what()}}.dump() << '\n';
    return kUsage;
  }
}

}  // namespace exotic
