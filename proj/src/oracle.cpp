#include "broxlab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "broxlab/sampler.hpp"

namespace broxlab {

namespace {

struct Evaluated {
  Vector z;
  double f;
};

bool lex_less(const Vector& a, const Vector& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

/// Shared reduction: epsilon-optimal set, de-duplication, selection.
BroxResult finalize(std::vector<Evaluated> pts, const Geometry& g, const Vector& x, double epsilon_rel,
                    double resolution, std::size_t evaluations) {
  double best = kInfinity;
  for (const auto& p : pts) best = std::min(best, p.f);
  if (!std::isfinite(best)) throw OracleError("broximal oracle: no point of the ball lies in dom f");

  BroxResult r;
  r.value = best;
  r.epsilon = epsilon_rel * std::max(1.0, std::abs(best));
  r.resolution = resolution;
  r.evaluations = evaluations;

  std::vector<Evaluated> near;
  for (auto& p : pts) {
    if (p.f <= best + r.epsilon) near.push_back(std::move(p));
  }
  std::sort(near.begin(), near.end(), [](const Evaluated& a, const Evaluated& b) {
    if (a.f != b.f) return a.f < b.f;
    return lex_less(a.z, b.z);
  });
  for (auto& p : near) {
    const bool dup = std::any_of(r.candidates.begin(), r.candidates.end(), [&](const Vector& c) {
      return g.distance(c, p.z) <= resolution;
    });
    if (!dup) r.candidates.push_back(std::move(p.z));
  }
  r.selected = select_farthest(r.candidates, g, x);
  return r;
}

constexpr unsigned kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

}  // namespace

const char* to_string(OracleKind kind) {
  switch (kind) {
    case OracleKind::automatic: return "auto";
    case OracleKind::exhaustive: return "exhaustive";
    case OracleKind::grid1d: return "grid1d";
    case OracleKind::multistart: return "multistart";
  }
  return "?";
}

OracleKind oracle_kind_from_string(const std::string& name) {
  if (name == "auto" || name == "automatic") return OracleKind::automatic;
  if (name == "exhaustive") return OracleKind::exhaustive;
  if (name == "grid1d") return OracleKind::grid1d;
  if (name == "multistart") return OracleKind::multistart;
  throw std::invalid_argument("unknown oracle '" + name + "'");
}

Vector select_farthest(const std::vector<Vector>& candidates, const Geometry& g, const Vector& x) {
  if (candidates.empty()) throw OracleError("broximal oracle: empty candidate set");
  std::size_t best = 0;
  double best_d = g.distance(candidates[0], x);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const double d = g.distance(candidates[i], x);
    const double tie = 1e-12 * std::max(1.0, best_d);
    if (d > best_d + tie || (std::abs(d - best_d) <= tie && lex_less(candidates[i], candidates[best]))) {
      best = i;
      best_d = d;
    }
  }
  return candidates[best];
}

BroxResult brox_exhaustive(const Objective& f, const Geometry& g, const Vector& x, double t,
                           double membership_tol) {
  if (!f.is_finite_domain()) throw std::invalid_argument("brox_exhaustive: objective has no finite domain");
  if (!(t > 0.0)) throw std::invalid_argument("brox_exhaustive: radius must be positive");
  const Ball ball{x, t, membership_tol};
  std::vector<Evaluated> pts;
  for (const auto& p : f.finite_points()) {
    if (ball.contains(g, p.x)) pts.push_back({p.x, p.f});
  }
  if (pts.empty()) throw OracleError("brox_exhaustive: ball contains no domain point");
  const std::size_t n = pts.size();
  return finalize(std::move(pts), g, x, 0.0, 0.0, n);
}

BroxResult brox_grid_1d(const Objective& f, double x, double t, int n, int refine_iters) {
  return brox_grid_1d(f, Geometry::identity(1), x, t, n, refine_iters);
}

BroxResult brox_grid_1d(const Objective& f, const Geometry& g, double x, double t, int n,
                        int refine_iters) {
  if (f.dim() != 1 || g.dim() != 1) throw std::invalid_argument("brox_grid_1d: objective must be 1-D");
  if (n < 3) throw std::invalid_argument("brox_grid_1d: need at least 3 grid points");
  if (!(t > 0.0)) throw std::invalid_argument("brox_grid_1d: radius must be positive");
  if (refine_iters < 0) throw std::invalid_argument("brox_grid_1d: negative refinement count");

  const double scale = std::sqrt(g.matrix()(0, 0));
  const double w = t / scale;
  const double lo = x - w;
  const double hi = x + w;
  auto eval = [&](double z) { return f.value(Vector::Constant(1, z)); };

  std::vector<double> zs(static_cast<std::size_t>(n));
  std::vector<double> fs(zs.size());
  for (int i = 0; i < n; ++i) {
    zs[i] = (i == n - 1) ? hi : lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    fs[i] = eval(zs[i]);
  }
  std::size_t evals = zs.size();

  std::vector<Evaluated> pts;
  pts.reserve(zs.size() + 8);
  for (std::size_t i = 0; i < zs.size(); ++i) pts.push_back({Vector::Constant(1, zs[i]), fs[i]});
  pts.push_back({Vector::Constant(1, x), eval(x)});
  ++evals;
  for (const auto& p : f.special_points()) {
    if (p[0] >= lo && p[0] <= hi) {
      pts.push_back({p, eval(p[0])});
      ++evals;
    }
  }

  // Grid local minima, excluding the interior of flat runs.
  std::vector<std::size_t> seeds;
  for (std::size_t i = 0; i < zs.size(); ++i) {
    if (!std::isfinite(fs[i])) continue;
    const bool left_ok = i == 0 || fs[i] <= fs[i - 1];
    const bool right_ok = i + 1 == zs.size() || fs[i] <= fs[i + 1];
    const bool flat = i > 0 && i + 1 < zs.size() && fs[i] == fs[i - 1] && fs[i] == fs[i + 1];
    if (left_ok && right_ok && !flat) seeds.push_back(i);
  }
  constexpr std::size_t kMaxSeeds = 64;
  if (seeds.size() > kMaxSeeds) {
    std::stable_sort(seeds.begin(), seeds.end(), [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
    seeds.resize(kMaxSeeds);
  }

  const double h = (hi - lo) / (n - 1);
  for (const std::size_t i : seeds) {
    double a = zs[i == 0 ? 0 : i - 1];
    double b = zs[i + 1 == zs.size() ? i : i + 1];
    double best_z = zs[i];
    double best_f = fs[i];
    for (int k = 0; k < refine_iters; ++k) {
      const double m1 = a + (b - a) / 3.0;
      const double m2 = b - (b - a) / 3.0;
      const double f1 = eval(m1);
      const double f2 = eval(m2);
      evals += 2;
      if (f1 < best_f) {
        best_f = f1;
        best_z = m1;
      }
      if (f2 < best_f) {
        best_f = f2;
        best_z = m2;
      }
      if (f1 <= f2) {
        b = m2;
      } else {
        a = m1;
      }
    }
    pts.push_back({Vector::Constant(1, best_z), best_f});
  }

  const double bracket = 2.0 * h * std::pow(2.0 / 3.0, refine_iters);
  const double resolution = scale * std::max(bracket, 1.5e-8 * w);
  return finalize(std::move(pts), g, Vector::Constant(1, x), 1e-9, resolution, evals);
}

BroxResult brox_multistart(const Objective& f, const Geometry& g, const Vector& x, double t,
                           const OracleOptions& options) {
  const int d = f.dim();
  if (g.dim() != d || x.size() != d) throw std::invalid_argument("brox_multistart: dimension mismatch");
  if (options.samples < 1) throw std::invalid_argument("brox_multistart: need at least one sample");
  if (!(t > 0.0)) throw std::invalid_argument("brox_multistart: radius must be positive");
  if (d > static_cast<int>(std::size(kPrimes))) {
    throw std::invalid_argument("brox_multistart: dimension too large for the Halton sequence");
  }

  std::size_t evals = 0;
  auto point = [&](const Vector& w) -> Vector { return x + t * g.unwhiten(w); };
  auto eval = [&](const Vector& z) {
    ++evals;
    return f.value(z);
  };

  std::vector<Evaluated> pts;
  std::vector<Vector> ws;  // whitened coordinates of pts, for refinement
  auto add = [&](Vector w) {
    Vector z = point(w);
    const double v = eval(z);
    pts.push_back({std::move(z), v});
    ws.push_back(std::move(w));
  };

  add(Vector::Zero(d));
  const Ball ball{x, t, options.membership_tol};
  std::vector<Vector> extras = f.special_points();
  for (const auto& b : f.minimizers().balls) extras.push_back(b.project(g, x));
  for (const auto& p : extras) {
    if (!ball.contains(g, p)) continue;
    // Evaluate the probe as given; its whitened image only seeds refinement.
    const double v = eval(p);
    pts.push_back({p, v});
    Vector w = g.whiten(p - x) / t;
    if (w.norm() > 1.0) w /= w.norm();
    ws.push_back(std::move(w));
  }

  // Cranley-Patterson rotated Halton points, rejected to the unit ball.
  Rng rng(options.seed);
  Vector shift(d);
  for (int j = 0; j < d; ++j) shift[j] = rng.uniform();
  const std::uint64_t cap = 64ULL * static_cast<std::uint64_t>(options.samples) + 100;
  int accepted = 0;
  for (std::uint64_t i = 1; i <= cap && accepted < options.samples; ++i) {
    Vector w(d);
    for (int j = 0; j < d; ++j) {
      double u = radical_inverse(i, kPrimes[j]) + shift[j];
      u -= std::floor(u);
      w[j] = 2.0 * u - 1.0;
    }
    if (w.squaredNorm() > 1.0) continue;
    add(std::move(w));
    ++accepted;
  }

  // Compass search from the best distinct starts.
  std::vector<std::size_t> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pts[a].f < pts[b].f; });
  std::vector<std::size_t> starts;
  for (const std::size_t i : order) {
    if (static_cast<int>(starts.size()) >= options.starts) break;
    if (!std::isfinite(pts[i].f)) break;
    const bool close = std::any_of(starts.begin(), starts.end(),
                                   [&](std::size_t s) { return (ws[s] - ws[i]).norm() < 1e-3; });
    if (!close) starts.push_back(i);
  }

  const std::size_t eval_cap = 4000 + 200ULL * d * static_cast<std::size_t>(std::max(options.refine, 1));
  for (const std::size_t s : starts) {
    Vector w = ws[s];
    double fw = pts[s].f;
    double step = 0.25;
    int halvings = 0;
    const std::size_t budget_end = evals + eval_cap;
    while (halvings < options.refine && evals < budget_end) {
      bool improved = false;
      for (int i = 0; i < d && !improved; ++i) {
        for (const double sign : {1.0, -1.0}) {
          Vector trial = w;
          trial[i] += sign * step;
          const double nrm = trial.norm();
          if (nrm > 1.0) trial /= nrm;
          const double ft = eval(point(trial));
          if (ft < fw) {
            w = std::move(trial);
            fw = ft;
            improved = true;
            break;
          }
        }
      }
      if (!improved) {
        step *= 0.5;
        ++halvings;
      }
    }
    pts.push_back({point(w), fw});
  }

  const double resolution = t * std::max(0.25 * std::ldexp(1.0, -options.refine), 1.5e-8);
  return finalize(std::move(pts), g, x, 1e-9, resolution, evals);
}

OracleKind resolve_oracle(const Objective& f, OracleKind kind) {
  if (kind != OracleKind::automatic) return kind;
  if (f.is_finite_domain()) return OracleKind::exhaustive;
  if (f.dim() == 1) return OracleKind::grid1d;
  return OracleKind::multistart;
}

BroxResult brox(const Objective& f, const Geometry& g, const Vector& x, double t,
                const OracleOptions& options) {
  switch (resolve_oracle(f, options.kind)) {
    case OracleKind::exhaustive: return brox_exhaustive(f, g, x, t, options.membership_tol);
    case OracleKind::grid1d: return brox_grid_1d(f, g, x[0], t, options.grid_n, options.refine);
    case OracleKind::multistart: return brox_multistart(f, g, x, t, options);
    case OracleKind::automatic: break;
  }
  throw std::logic_error("brox: unresolved oracle kind");
}

}  // namespace broxlab
