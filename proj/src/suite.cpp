#include "broxlab/suite.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "broxlab/bpm.hpp"
#include "broxlab/catalog.hpp"
#include "broxlab/parallel.hpp"

namespace broxlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Vector v2(double a, double b) { return (Vector(2) << a, b).finished(); }

std::string num(double v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

std::string pt(const Vector& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? "," : "") + num(v[i]);
  return s + ")";
}

EntryOutcome outcome(bool ok, std::string detail, Json data = Json::object()) {
  return EntryOutcome{ok ? Verdict::pass : Verdict::fail, std::move(detail), std::move(data)};
}

EntryOutcome from_report(const VerificationReport& r) {
  std::string detail = std::string(to_string(r.verdict)) + " (" + r.check + ")";
  if (!r.note.empty()) detail += ": " + r.note;
  return EntryOutcome{r.verdict, detail, report_to_json(r)};
}

Vector random_in_box(Rng& rng, const Box& b) {
  Vector x(b.lo.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = rng.uniform(b.lo[i], b.hi[i]);
  return x;
}

Objective normalized(const Objective& f) {
  if (f.f_star() == 0.0) return f;
  return affine_value(f, 1.0, -f.f_star());
}

Matrix rotation2(double angle) {
  Matrix r(2, 2);
  r << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  return r;
}

// ---- criterion 1 ------------------------------------------------------------

EntryOutcome certify_sin_abs_minimizer() {
  const Objective f = sin_abs();
  const double lo = -30.0;
  const double step = 1e-6;
  const auto n = static_cast<std::size_t>(std::llround(60.0 / step));
  const unsigned workers = worker_count();
  std::vector<double> best_x(workers, 0.0);
  std::vector<double> best_f(workers, kInfinity);
  const std::size_t chunk = (n + workers) / workers;
  parallel_for(workers, [&](std::size_t w) {
    Vector x(1);
    for (std::size_t i = w * chunk; i < std::min(n + 1, (w + 1) * chunk); ++i) {
      x[0] = lo + step * static_cast<double>(i);
      const double v = f.value(x);
      if (v < best_f[w]) {
        best_f[w] = v;
        best_x[w] = x[0];
      }
    }
  });
  std::size_t b = 0;
  for (std::size_t w = 1; w < workers; ++w) {
    if (best_f[w] < best_f[b]) b = w;
  }
  const double declared = sin_abs_minimizer();
  const double fd = f.value(Vector::Constant(1, declared));
  const bool ok = std::abs(best_x[b] - declared) <= step && fd <= best_f[b];
  Json data{{"grid_argmin", best_x[b]}, {"grid_min", best_f[b]}, {"declared", declared}, {"declared_value", fd}};
  return outcome(ok, "grid argmin " + num(best_x[b]) + " vs declared " + num(declared), data);
}

EntryOutcome sin_abs_from_20() {
  const Objective f = sin_abs();
  const Geometry g = Geometry::identity(1);
  BpmConfig cfg;
  cfg.t = kTwoPi;
  cfg.oracle.kind = OracleKind::grid1d;
  const Trajectory tr = run_bpm(f, g, Vector::Constant(1, 20.0), cfg);
  const double err = std::abs(tr.last()[0] - sin_abs_minimizer());
  const auto iters = tr.size() - 1;
  const bool ok = tr.termination == Termination::reached_optimum && iters <= 10 && err <= 1e-3;
  Json path = Json::array();
  for (const auto& x : tr.iterates) path.push_back(x[0]);
  return outcome(ok, std::string(to_string(tr.termination)) + " after " + std::to_string(iters) +
                         " iterations, |x_K - x*| = " + num(err),
                 Json{{"iterates", path}, {"error", err}, {"iterations", iters}});
}

// ---- criterion 3 ------------------------------------------------------------

EntryOutcome trajectory_entry(const std::string& key, double t, std::uint64_t seed, int starts) {
  const Objective f = builtin(key);
  const Geometry g = Geometry::identity(f.dim());
  Sampler s;
  s.count = 500;
  s.seed = seed;
  const VerificationReport a1 = check_assumption1(f, g, t, std::nullopt, s);
  if (!a1.passed() || !a1.certified_minimizer) {
    return outcome(false, "assumption1 not certified: " + a1.note, report_to_json(a1));
  }
  const Vector x_star = *a1.certified_minimizer;
  Rng rng(seed ^ 0xc3c3c3c3ULL);
  BpmConfig cfg;
  cfg.t = t;
  cfg.max_iters = 100000;
  cfg.oracle.seed = seed;

  std::vector<Vector> x0s;
  while (static_cast<int>(x0s.size()) < starts) {
    Vector x = random_in_box(rng, f.sample_box());
    if (f.in_domain(x)) x0s.push_back(std::move(x));
  }
  std::vector<std::string> failures(x0s.size());
  std::vector<std::size_t> lengths(x0s.size());
  parallel_for(x0s.size(), [&](std::size_t i) {
    const Trajectory tr = run_bpm(f, g, x0s[i], cfg);
    lengths[i] = tr.size() - 1;
    for (const auto& r : check_trajectory(f, g, tr, x_star)) {
      if (!r.passed()) {
        failures[i] = r.check + " from x0 = " + pt(x0s[i]);
        return;
      }
    }
  });
  std::size_t max_len = 0;
  std::string first_failure;
  int bad = 0;
  for (std::size_t i = 0; i < x0s.size(); ++i) {
    max_len = std::max(max_len, lengths[i]);
    if (!failures[i].empty()) {
      ++bad;
      if (first_failure.empty()) first_failure = failures[i];
    }
  }
  Json data{{"x_star", to_json(x_star)}, {"starts", starts}, {"max_iterations", max_len}, {"failed", bad}};
  if (bad > 0) return outcome(false, std::to_string(bad) + " trajectories fail; first: " + first_failure, data);
  return outcome(true, std::to_string(starts) + " trajectories, x* = " + pt(x_star) + ", longest " +
                           std::to_string(max_len) + " steps",
                 data);
}

// ---- criterion 4 ------------------------------------------------------------

struct ClassOutcome {
  bool strict_qc = false;
  bool pseudo = false;
  bool quasar = false;
  bool aiming = false;
  bool unique_min = false;

  bool any() const { return strict_qc || pseudo || quasar || (aiming && unique_min); }
  bool none() const { return !strict_qc && !pseudo && !quasar && !aiming; }
};

ClassOutcome class_checks(const Objective& f, std::uint64_t seed, Json& data) {
  Sampler s;
  s.count = 2000;
  s.seed = seed;
  ClassOutcome c;
  c.strict_qc = check_quasiconvex(f, true, s).passed();
  c.pseudo = check_pseudoconvex(f, s).passed();
  for (const double zeta : {1.0, 0.5, 0.25, 0.1}) {
    if (check_quasar(f, zeta, std::nullopt, s).passed()) {
      c.quasar = true;
      data["quasar_zeta"] = zeta;
      break;
    }
  }
  const Objective fn = normalized(f);
  for (const double theta : {2.0, 1.0, 0.5, 0.1}) {
    if (check_aiming(fn, theta, s).passed()) {
      c.aiming = true;
      data["aiming_theta"] = theta;
      break;
    }
  }
  c.unique_min = f.minimizers().points.size() == 1 && f.minimizers().balls.empty();
  data["strict_quasiconvex"] = c.strict_qc;
  data["pseudoconvex"] = c.pseudo;
  data["quasar"] = c.quasar;
  data["aiming"] = c.aiming;
  data["unique_minimizer"] = c.unique_min;
  return c;
}

/// Assumptions 3.1 and 3.2 at every radius; returns the failing radius list.
std::string ba_failures(const Objective& f, const std::vector<double>& radii, std::size_t samples,
                        std::uint64_t seed, Json& data) {
  const Geometry g = Geometry::identity(f.dim());
  Sampler s;
  s.count = samples;
  s.seed = seed;
  CheckOptions opts;
  opts.chain_depth = 1;
  opts.oracle.grid_n = 401;
  opts.oracle.refine = 32;
  opts.oracle.samples = 64;
  opts.oracle.starts = 2;
  std::string bad;
  for (const double t : radii) {
    const auto a1 = check_assumption1(f, g, t, std::nullopt, s, opts);
    const auto a2 = check_assumption2(f, g, t, s, opts);
    data["t=" + num(t)] = {{"assumption1", to_string(a1.verdict)}, {"assumption2", to_string(a2.verdict)}};
    if (!a1.passed()) bad += " A1@t=" + num(t);
    if (!a2.passed()) bad += " A2@t=" + num(t);
  }
  return bad;
}

EntryOutcome implication_entry(const std::string& key, std::uint64_t seed) {
  const Objective f = builtin(key);
  Json data = Json::object();
  const ClassOutcome c = class_checks(f, seed, data);
  if (!c.any()) return outcome(true, "no class check passes; implication vacuous", data);
  const std::string bad = ba_failures(f, {0.1, 1.0, kTwoPi}, 10000, seed, data);
  return outcome(bad.empty(), bad.empty() ? "class member and BA at t = 0.1, 1, 2pi" : "BA fails:" + bad, data);
}

EntryOutcome generality_entry(const std::string& key, const std::vector<double>& radii, std::uint64_t seed) {
  const Objective f = builtin(key);
  Json data = Json::object();
  const ClassOutcome c = class_checks(f, seed, data);
  const std::string bad = ba_failures(f, radii, 10000, seed, data);
  std::string detail;
  if (!c.none()) detail += "passes a class check; ";
  if (!bad.empty()) detail += "BA fails:" + bad;
  if (detail.empty()) detail = "in BA while failing all four class checks";
  return outcome(c.none() && bad.empty(), detail, data);
}

// ---- criterion 5 ------------------------------------------------------------

struct Pairing {
  const Objective* f;
  const Objective* h;
  Geometry g;
  /// Maps a point of f's space to h's space and back.
  std::function<Vector(const Vector&)> to_h;
  std::function<Vector(const Vector&)> from_h;
};

EntryOutcome invariance_entry(const Pairing& p, const Box& box, double t_lo, double t_hi, int trials,
                              std::uint64_t seed, const std::vector<Vector>& fixed_points = {}) {
  Rng rng(seed);
  std::vector<std::pair<Vector, double>> cases;
  for (int i = 0; i < trials; ++i) {
    Vector x = fixed_points.empty() ? random_in_box(rng, box) : fixed_points[i % fixed_points.size()];
    cases.emplace_back(std::move(x), rng.uniform(t_lo, t_hi));
  }
  std::vector<double> dist(cases.size(), 0.0);
  parallel_for(cases.size(), [&](std::size_t i) {
    const auto& [x, t] = cases[i];
    OracleOptions o;
    o.seed = seed + i;
    const BroxResult a = brox(*p.f, p.g, x, t, o);
    const BroxResult b = brox(*p.h, p.g, p.to_h(x), t, o);
    std::vector<Vector> mapped;
    for (const auto& c : b.candidates) mapped.push_back(p.from_h(c));
    dist[i] = hausdorff(p.g, a.candidates, mapped);
  });
  double worst = 0.0;
  std::size_t at = 0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (dist[i] > worst) {
      worst = dist[i];
      at = i;
    }
  }
  Json data{{"trials", trials}, {"max_hausdorff", worst}};
  std::string detail = std::to_string(trials) + " (x, t) pairs, max Hausdorff distance " + num(worst);
  if (worst > 1e-6) detail += " at x = " + pt(cases[at].first) + ", t = " + num(cases[at].second);
  return outcome(worst <= 1e-6, detail, data);
}

// ---- criterion 7 ------------------------------------------------------------

EntryOutcome normal_cone_entry(int dim, std::uint64_t seed) {
  const Objective f = sphere(dim);
  const Geometry g = Geometry::identity(dim);
  std::vector<std::pair<Vector, double>> cases;
  if (dim == 1) {
    cases.emplace_back(Vector::Constant(1, 5.0), 1.0);
    cases.emplace_back(Vector::Constant(1, 0.3), 1.0);
  } else {
    cases.emplace_back(Vector::Constant(dim, 0.1), 2.0);
  }
  Rng rng(seed);
  for (int i = 0; i < 20; ++i) cases.emplace_back(random_in_box(rng, f.sample_box()), rng.uniform(0.1, 3.0));
  int boundary = 0;
  for (const auto& [x, t] : cases) {
    const auto r = check_normal_cone_stationarity(f, g, x, t);
    if (!r.passed()) return outcome(false, "fails at x = " + pt(x) + ", t = " + num(t), report_to_json(r));
    boundary += r.config.at("boundary") > 0.5;
  }
  return outcome(true,
                 std::to_string(cases.size()) + " broximal points (" + std::to_string(boundary) + " on the boundary)",
                 Json{{"cases", cases.size()}, {"boundary", boundary}});
}

}  // namespace

bool CriterionResult::passed() const {
  if (!within_time()) return false;
  for (const auto& e : entries) {
    if (!e.ok()) return false;
  }
  return !entries.empty();
}

bool SuiteResult::passed() const {
  for (const auto& c : criteria) {
    if (!c.passed()) return false;
  }
  return true;
}

const std::string& criterion_title(int id) {
  static const std::vector<std::string> titles = {
      "",
      "BPM on |x| + 10 sin x (t = 2pi, x0 = 20) reaches the certified minimizer",
      "finite-domain alignment counterexamples reproduce exactly",
      "trajectory properties of BPM on broximal-aligned objectives",
      "class membership implies broximal alignment; example1/example2 are strictly more general",
      "broximal sets are invariant under the class-preserving transformations",
      "radius monotonicity of F2 and UBA; non-monotonicity of F1",
      "gradient consistency and normal-cone stationarity",
  };
  if (id < 1 || id > 7) throw std::out_of_range("criterion id");
  return titles[static_cast<std::size_t>(id)];
}

std::vector<SuiteEntry> suite_entries(std::uint64_t seed) {
  std::vector<SuiteEntry> e;
  auto add = [&](std::string key, int c, Verdict expected, std::function<EntryOutcome()> fn, double limit = 0.0) {
    e.push_back(SuiteEntry{std::move(key), c, expected, std::move(fn), limit});
  };

  // 1
  add("c1/certify_minimizer", 1, Verdict::pass, certify_sin_abs_minimizer);
  add("c1/example1_from_20", 1, Verdict::pass, sin_abs_from_20, 5.0);

  // 2
  struct Inner {
    const char* key;
    bool ex1;
    Vector x;
    double t;
    double expected;
  };
  for (const auto& c : std::vector<Inner>{{"ex1,t=1,x=(2,0)", true, v2(2, 0), 1.0, 1.0},
                                          {"ex1,t=1,x=(3,0)", true, v2(3, 0), 1.0, 2.0},
                                          {"ex1,t=1,x=(3,2)", true, v2(3, 2), 1.0, 0.0},
                                          {"ex1,t=2,x=(3,0)", true, v2(3, 0), 2.0, -4.0},
                                          {"ex2,t=1,x=(2,0)", false, v2(2, 0), 1.0, -1.0}}) {
    add(std::string("c2/inner/") + c.key, 2, Verdict::pass, [c] {
      const Objective f = c.ex1 ? five_point_domain() : three_point_domain();
      const double v = alignment_inner(f, Geometry::identity(2), c.x, c.t, v2(0, 0));
      return outcome(v == c.expected, "<x - u, u - x*> = " + num(v) + " (expected " + num(c.expected) + ")",
                     Json{{"inner", v}});
    });
  }
  struct Member {
    const char* key;
    bool ex1;
    double t;
    Verdict expected;
  };
  for (const auto& m : std::vector<Member>{{"ex1_in_F1(1)", true, 1.0, Verdict::pass},
                                           {"ex1_in_F1(2)", true, 2.0, Verdict::fail},
                                           {"ex2_in_F1(1)", false, 1.0, Verdict::fail},
                                           {"ex2_in_F1(3)", false, 3.0, Verdict::pass}}) {
    add(std::string("c2/member/") + m.key, 2, m.expected, [m] {
      const Objective f = m.ex1 ? five_point_domain() : three_point_domain();
      return from_report(check_assumption1(f, Geometry::identity(2), m.t, v2(0, 0), Sampler{}));
    });
  }

  // 3
  struct Run {
    const char* key;
    double t;
  };
  for (const auto& r : std::vector<Run>{{"example1", kTwoPi},
                                        {"example2", 0.5},
                                        {"example2", 1.0},
                                        {"sphere1", 0.1},
                                        {"sphere1", 1.0},
                                        {"sphere2", 0.1},
                                        {"sphere2", 1.0},
                                        {"sphere3", 0.1},
                                        {"sphere3", 1.0},
                                        {"patched_sphere", 0.5},
                                        {"patched_sphere", 1.0}}) {
    add(std::string("c3/") + r.key + "@t=" + num(r.t), 3, Verdict::pass,
        [r, seed] { return trajectory_entry(r.key, r.t, seed, 20); });
  }

  // 4
  for (const char* key : {"sphere1", "sphere2", "sphere3", "strictly_quasiconvex_1d", "quasar_demo",
                          "halfline_quadratic", "isolated_local_min", "patched_sphere"}) {
    add(std::string("c4/implication/") + key, 4, Verdict::pass, [key, seed] { return implication_entry(key, seed); });
  }
  add("c4/generality/example1", 4, Verdict::pass, [seed] { return generality_entry("example1", {kTwoPi}, seed); });
  add("c4/generality/example2", 4, Verdict::pass,
      [seed] { return generality_entry("example2", {0.1, 1.0, kTwoPi}, seed); });

  // 5
  add("c5/compose/example1,v^3+v", 5, Verdict::pass, [seed] {
    const Objective h = sin_abs();
    const Objective f = compose_monotone(h, MonotoneMap{[](double v) { return v * v * v + v; }, {}, "v^3+v"});
    const auto id = [](const Vector& v) { return v; };
    return invariance_entry(Pairing{&f, &h, Geometry::identity(1), id, id}, h.sample_box(), 0.5, 10.0, 100, seed);
  });
  add("c5/compose/sphere2,exp", 5, Verdict::pass, [seed] {
    const Objective h = sphere(2);
    const Objective f = compose_monotone(h, MonotoneMap{[](double v) { return std::exp(v); }, {}, "exp"});
    const auto id = [](const Vector& v) { return v; };
    return invariance_entry(Pairing{&f, &h, Geometry::identity(2), id, id}, h.sample_box(), 0.1, 3.0, 100, seed);
  });
  add("c5/affine/example1,3f+5", 5, Verdict::pass, [seed] {
    const Objective h = sin_abs();
    const Objective f = affine_value(h, 3.0, 5.0);
    const auto id = [](const Vector& v) { return v; };
    return invariance_entry(Pairing{&f, &h, Geometry::identity(1), id, id}, h.sample_box(), 0.5, 10.0, 100, seed);
  });
  add("c5/affine/appD_F1_ex1,2f-1", 5, Verdict::pass, [seed] {
    const Objective h = five_point_domain();
    const Objective f = affine_value(h, 2.0, -1.0);
    const auto id = [](const Vector& v) { return v; };
    std::vector<Vector> xs;
    for (const auto& p : h.finite_points()) xs.push_back(p.x);
    return invariance_entry(Pairing{&f, &h, Geometry::identity(2), id, id}, h.sample_box(), 0.5, 4.0, 100, seed, xs);
  });
  auto pullback = [seed](const Matrix& x_matrix, double angle, const Vector& b) {
    const Geometry g(x_matrix);
    const Matrix& l = g.cholesky();
    const Matrix q = l.transpose().triangularView<Eigen::Upper>().solve(rotation2(angle) * l.transpose());
    const Objective h = punctured_quadratic(v2(2, 0));
    const Objective f = pullback_orthogonal_affine(h, q, b, g);
    const Matrix q_inv = q.inverse();
    const Pairing p{&f, &h, g, [q, b](const Vector& y) -> Vector { return q * y + b; },
                    [q_inv, b](const Vector& z) -> Vector { return q_inv * (z - b); }};
    return invariance_entry(p, f.sample_box(), 0.1, 3.0, 100, seed);
  };
  add("c5/pullback/example2,X=I,rotation", 5, Verdict::pass,
      [pullback] { return pullback(Matrix::Identity(2, 2), std::numbers::pi / 4.0, v2(1, 0)); });
  add("c5/pullback/example2,X=[[2,0.5],[0.5,1]]", 5, Verdict::pass, [pullback] {
    Matrix x(2, 2);
    x << 2.0, 0.5, 0.5, 1.0;
    return pullback(x, 1.0, v2(0.5, -0.3));
  });

  // 6
  struct Pair {
    double t1;
    double t2;
  };
  const std::vector<Pair> f2_pairs = {{0.5, 1.0}, {1.0, kTwoPi}, {kTwoPi, 2.0 * kTwoPi}};
  for (const char* key : {"example1", "sphere1", "strictly_quasiconvex_1d", "isolated_local_min", "appD_F1_ex1"}) {
    for (const auto& p : f2_pairs) {
      add(std::string("c6/F2/") + key + "@(" + num(p.t1) + "," + num(p.t2) + ")", 6, Verdict::pass, [key, p, seed] {
        const Objective f = builtin(key);
        Sampler s;
        s.count = 1000;
        s.seed = seed;
        return from_report(check_F2_monotonicity(f, Geometry::identity(f.dim()), p.t1, p.t2, s));
      });
    }
  }
  add("c6/F1_nonmonotone", 6, Verdict::pass, [] { return from_report(check_F1_nonmonotone_witnesses()); });
  for (const char* key : {"appD_F1_ex1", "appD_F1_ex2", "halfline_quadratic", "sphere1"}) {
    for (const auto& p : std::vector<Pair>{{1.0, 2.0}, {2.0, 3.0}, {1.0, 3.0}}) {
      add(std::string("c6/uba/") + key + "@(" + num(p.t1) + "," + num(p.t2) + ")", 6, Verdict::pass, [key, p, seed] {
        const Objective f = builtin(key);
        Sampler s;
        s.count = 1000;
        s.seed = seed;
        return from_report(check_uba_monotonicity(f, Geometry::identity(f.dim()), p.t1, p.t2, s));
      });
    }
  }

  // 7
  for (const char* key : {"sphere1", "sphere2", "sphere3", "strictly_quasiconvex_1d", "quasar_demo"}) {
    add(std::string("c7/gradients/") + key, 7, Verdict::pass, [key, seed] {
      Sampler s;
      s.count = 100;
      s.seed = seed;
      s.include_special_points = false;
      return from_report(check_gradient_consistency(builtin(key), s));
    });
  }
  for (const int d : {1, 2, 3}) {
    add("c7/normal_cone/sphere" + std::to_string(d), 7, Verdict::pass, [d, seed] { return normal_cone_entry(d, seed); });
  }
  return e;
}

SuiteResult run_suite(const SuiteOptions& options) {
  std::vector<SuiteEntry> entries = suite_entries(options.seed);
  std::vector<SuiteEntry> selected;
  for (auto& e : entries) {
    if (options.filter.empty() || e.key.find(options.filter) != std::string::npos) selected.push_back(std::move(e));
  }
  if (selected.empty()) throw std::invalid_argument("suite filter '" + options.filter + "' matches no entry");

  SuiteResult result;
  result.seed = options.seed;
  for (int id = 1; id <= 7; ++id) {
    CriterionResult c;
    c.id = id;
    c.title = criterion_title(id);
    if (id == 3) c.time_limit = 60.0;
    for (auto& e : selected) {
      if (e.criterion != id) continue;
      EntryResult r;
      r.key = e.key;
      r.expected = e.expected;
      const auto start = std::chrono::steady_clock::now();
      try {
        r.outcome = e.run();
      } catch (const std::exception& ex) {
        r.outcome = EntryOutcome{Verdict::inconclusive, std::string("error: ") + ex.what(), Json::object()};
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      r.within_time = e.time_limit <= 0.0 || r.seconds <= e.time_limit;
      c.seconds += r.seconds;
      if (options.on_entry) options.on_entry(r);
      c.entries.push_back(std::move(r));
    }
    if (!c.entries.empty()) result.criteria.push_back(std::move(c));
  }
  return result;
}

Json suite_to_json(const SuiteResult& r) {
  Json crit = Json::array();
  for (const auto& c : r.criteria) {
    Json entries = Json::array();
    for (const auto& e : c.entries) {
      entries.push_back(Json{{"key", e.key},
                             {"expected", to_string(e.expected)},
                             {"verdict", to_string(e.outcome.verdict)},
                             {"ok", e.outcome.verdict == e.expected},
                             {"detail", e.outcome.detail},
                             {"data", e.outcome.data}});
    }
    crit.push_back(Json{{"id", c.id}, {"title", c.title}, {"passed", c.passed()}, {"entries", entries}});
  }
  return Json{{"seed", r.seed}, {"passed", r.passed()}, {"criteria", crit}};
}

Json suite_meta_json(const SuiteResult& r) {
  Json crit = Json::array();
  for (const auto& c : r.criteria) {
    Json entries = Json::object();
    for (const auto& e : c.entries) entries[e.key] = Json{{"seconds", e.seconds}, {"within_time", e.within_time}};
    crit.push_back(Json{{"id", c.id},
                        {"seconds", c.seconds},
                        {"time_limit", c.time_limit},
                        {"within_time", c.within_time()},
                        {"entries", entries}});
  }
  return Json{{"criteria", crit}};
}

}  // namespace broxlab
