#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "broxlab/bpm.hpp"
#include "broxlab/catalog.hpp"
#include "broxlab/io.hpp"
#include "broxlab/suite.hpp"
#include "broxlab/verify.hpp"

namespace {

using namespace broxlab;

constexpr int kUsageError = 2;
constexpr int kCriterionFailure = 1;

struct Common {
  std::string objective;
  std::string geometry = "identity";
  double t = 1.0;
  std::string oracle = "auto";
  int grid_n = 2001;
  int samples = 256;
  int refine = 40;
  std::uint64_t seed = 0;
  std::string out;
};

void add_common(CLI::App* app, Common& c, bool objective_required) {
  auto* o = app->add_option("--objective", c.objective, "catalog key or path to a finite-objective JSON file");
  if (objective_required) o->required();
  app->add_option("--geometry", c.geometry, "\"identity\", inline JSON or a JSON file")->capture_default_str();
  app->add_option("--t", c.t, "ball radius")->capture_default_str();
  app->add_option("--oracle", c.oracle, "auto | exhaustive | grid1d | multistart")->capture_default_str();
  app->add_option("--grid-n", c.grid_n, "grid size for grid1d")->capture_default_str();
  app->add_option("--samples", c.samples, "samples for multistart")->capture_default_str();
  app->add_option("--refine", c.refine, "refinement rounds")->capture_default_str();
  app->add_option("--seed", c.seed, "random seed")->capture_default_str();
  app->add_option("--out", c.out, "output JSON path");
}

OracleOptions oracle_options(const Common& c) {
  OracleOptions o;
  o.kind = oracle_kind_from_string(c.oracle);
  o.grid_n = c.grid_n;
  o.samples = c.samples;
  o.refine = c.refine;
  o.seed = c.seed;
  return o;
}

void emit(const Json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    write_json_file(path, j);
  }
}

std::string sibling(const std::string& path, const std::string& name) {
  const auto slash = path.find_last_of('/');
  return slash == std::string::npos ? name : path.substr(0, slash + 1) + name;
}

int cmd_run(const Common& c, const std::string& x0_text, int max_iters, std::optional<double> opt_tol,
            const std::string& csv) {
  const Objective f = load_objective(c.objective);
  const Geometry g = load_geometry(c.geometry, f.dim());
  const Vector x0 = parse_point(x0_text);
  if (x0.size() != f.dim()) throw std::invalid_argument("--x0 has the wrong dimension");
  BpmConfig cfg;
  cfg.t = c.t;
  cfg.max_iters = max_iters;
  cfg.opt_tol = opt_tol;
  cfg.oracle = oracle_options(c);
  const Trajectory tr = run_bpm(f, g, x0, cfg);

  RunInfo info{f.name(), c.seed, to_string(resolve_oracle(f, cfg.oracle.kind)), std::nullopt};
  if (f.has_minimizers()) info.x_star = f.nearest_minimizer(g, tr.last());
  emit(trajectory_to_json(tr, info), c.out);

  if (!csv.empty()) {
    std::ofstream out(csv);
    if (!out) throw std::runtime_error("cannot write '" + csv + "'");
    write_trajectory_csv(out, tr);
    if (f.dim() == 1 && info.x_star) {
      std::ofstream land(sibling(csv, "landscape.csv"));
      write_landscape_csv(land, f, x0[0], (*info.x_star)[0], c.t);
    }
  }
  std::cerr << to_string(tr.termination) << " after " << tr.size() - 1 << " iteration(s), f = " << tr.values.back()
            << '\n';
  return tr.termination == Termination::reached_optimum ? 0 : kCriterionFailure;
}

int cmd_verify(const Common& c, const std::string& check, double t2, double zeta, double theta, std::size_t count,
               const std::string& x_star_text, int chain_depth) {
  const Objective f = load_objective(c.objective);
  const Geometry g = load_geometry(c.geometry, f.dim());
  Sampler s;
  s.count = count;
  s.seed = c.seed;
  CheckOptions opts;
  opts.oracle = oracle_options(c);
  opts.chain_depth = chain_depth;
  std::optional<Vector> x_star;
  if (!x_star_text.empty()) x_star = parse_point(x_star_text);

  VerificationReport r;
  if (check == "assumption1") {
    r = check_assumption1(f, g, c.t, x_star, s, opts);
  } else if (check == "assumption2") {
    r = check_assumption2(f, g, c.t, s, opts);
  } else if (check == "ba") {
    const auto a1 = check_assumption1(f, g, c.t, x_star, s, opts);
    const auto a2 = check_assumption2(f, g, c.t, s, opts);
    r = a1.passed() ? a2 : a1;
    r.check = "ba";
  } else if (check == "quasiconvex" || check == "strict_quasiconvex") {
    r = check_quasiconvex(f, check == "strict_quasiconvex", s, opts);
  } else if (check == "pseudoconvex") {
    r = check_pseudoconvex(f, s, opts);
  } else if (check == "quasar") {
    r = check_quasar(f, zeta, x_star, s, opts);
  } else if (check == "aiming") {
    r = check_aiming(f, theta, s, opts);
  } else if (check == "uba") {
    r = check_uba(f, g, c.t, x_star, s, opts);
  } else if (check == "f2_monotonicity") {
    r = check_F2_monotonicity(f, g, c.t, t2, s, opts);
  } else if (check == "uba_monotonicity") {
    r = check_uba_monotonicity(f, g, c.t, t2, s, opts);
  } else if (check == "f1_witnesses") {
    r = check_F1_nonmonotone_witnesses();
  } else if (check == "two_point") {
    r = check_two_point_cycle(f, g, c.t);
  } else if (check == "gradients") {
    r = check_gradient_consistency(f, s);
  } else {
    throw CLI::ValidationError("--check", "unknown check '" + check + "'");
  }
  emit(report_to_json(r), c.out);
  std::cerr << r.check << ": " << to_string(r.verdict) << '\n';
  return r.verdict == Verdict::pass ? 0 : kCriterionFailure;
}

int cmd_suite(const std::string& filter, std::uint64_t seed, const std::string& out, bool quiet) {
  SuiteOptions o;
  o.filter = filter;
  o.seed = seed;
  if (!quiet) {
    o.on_entry = [](const EntryResult& e) {
      std::cerr << (e.ok() ? "ok   " : "FAIL ") << e.key << "  " << e.outcome.detail << '\n';
    };
  }
  SuiteResult r;
  try {
    r = run_suite(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  }
  emit(suite_to_json(r), out);
  if (!out.empty()) write_json_file(out + ".meta.json", suite_meta_json(r));
  for (const auto& c : r.criteria) {
    std::cerr << "criterion " << c.id << ": " << (c.passed() ? "PASS" : "FAIL") << "  " << c.title << '\n';
  }
  return r.passed() ? 0 : kCriterionFailure;
}

int cmd_catalog() {
  Json a = Json::array();
  for (const auto& e : catalog()) {
    a.push_back(Json{{"key", e.key}, {"description", e.description}, {"ba_radii", e.ba_radii}});
  }
  std::cout << a.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ball proximal point method and broximal-alignment verifiers"};
  app.require_subcommand(1);

  Common run_c;
  std::string x0;
  int max_iters = 1000;
  double opt_tol = std::nan("");
  std::string csv;
  auto* run = app.add_subcommand("run", "run BPM from x0");
  add_common(run, run_c, true);
  run->add_option("--x0", x0, "starting point, e.g. \"3,0\"")->required();
  run->add_option("--max-iters", max_iters, "iteration cap")->capture_default_str();
  run->add_option("--opt-tol", opt_tol, "value tolerance for optimality");
  run->add_option("--csv", csv, "trajectory CSV path (landscape.csv is written next to it for 1-D runs)");

  Common ver_c;
  std::string check;
  double t2 = 0.0;
  double zeta = 1.0;
  double theta = 1.0;
  std::size_t count = 1000;
  std::string x_star;
  int chain_depth = 4;
  auto* verify = app.add_subcommand("verify", "run one verification check");
  add_common(verify, ver_c, false);
  verify->add_option("--check", check,
                     "assumption1 | assumption2 | ba | quasiconvex | strict_quasiconvex | pseudoconvex | quasar | "
                     "aiming | uba | f2_monotonicity | uba_monotonicity | f1_witnesses | two_point | gradients")
      ->required();
  verify->add_option("--t2", t2, "second radius for the monotonicity checks");
  verify->add_option("--zeta", zeta, "quasar parameter in (0, 1]")->capture_default_str();
  verify->add_option("--theta", theta, "aiming parameter > 0")->capture_default_str();
  verify->add_option("--count", count, "random samples")->capture_default_str();
  verify->add_option("--x-star", x_star, "minimizer to test first");
  verify->add_option("--chain-depth", chain_depth, "BPM steps followed from each sample")->capture_default_str();

  std::string filter;
  std::uint64_t suite_seed = 0;
  std::string suite_out;
  bool quiet = false;
  auto* suite = app.add_subcommand("suite", "run the acceptance battery");
  suite->add_option("--filter", filter, "substring filter on entry keys");
  suite->add_option("--seed", suite_seed, "random seed")->capture_default_str();
  suite->add_option("--out", suite_out, "summary JSON path (timings go to <out>.meta.json)");
  suite->add_flag("--quiet", quiet, "no per-entry progress");

  app.add_subcommand("catalog", "list builtin objectives");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*run) {
      return cmd_run(run_c, x0, max_iters, std::isnan(opt_tol) ? std::nullopt : std::optional<double>(opt_tol), csv);
    }
    if (*verify) {
      if (check == "f2_monotonicity" || check == "uba_monotonicity") {
        if (!(t2 > 0.0)) throw std::invalid_argument("--t2 is required for " + check);
      } else if (check != "f1_witnesses" && ver_c.objective.empty()) {
        throw std::invalid_argument("--objective is required");
      }
      if (check == "f1_witnesses" && ver_c.objective.empty()) ver_c.objective = "appD_F1_ex1";
      return cmd_verify(ver_c, check, t2, zeta, theta, count, x_star, chain_depth);
    }
    if (*suite) return cmd_suite(filter, suite_seed, suite_out, quiet);
    return cmd_catalog();
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCriterionFailure;
  }
}
