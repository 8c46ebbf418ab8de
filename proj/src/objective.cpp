#include "broxlab/objective.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "broxlab/sampler.hpp"

namespace broxlab {

namespace {

std::string where(const std::string& name) { return "objective '" + name + "': "; }

}  // namespace

bool same_point(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const double scale = std::max({1.0, std::abs(a[i]), std::abs(b[i])});
    if (std::abs(a[i] - b[i]) > 1e-9 * scale) return false;
  }
  return true;
}

Objective::Objective(ObjectiveSpec spec) : spec_(std::move(spec)) {
  if (spec_.dim <= 0) throw std::invalid_argument(where(spec_.name) + "dimension must be positive");
  if (!spec_.eval) throw std::invalid_argument(where(spec_.name) + "missing evaluation function");
  if (!(spec_.opt_tol >= 0.0)) throw std::invalid_argument(where(spec_.name) + "opt_tol < 0");
  for (const auto& m : spec_.minimizers.points) {
    if (m.size() != spec_.dim) {
      throw std::invalid_argument(where(spec_.name) + "minimizer dimension mismatch");
    }
    const double v = spec_.eval(m);
    if (!std::isfinite(v)) {
      throw std::invalid_argument(where(spec_.name) + "declared minimizer outside dom f");
    }
    if (!(std::abs(v - spec_.f_star) <= spec_.opt_tol)) {
      throw std::invalid_argument(where(spec_.name) + "declared minimizer value " +
                                  std::to_string(v) + " differs from f_star " +
                                  std::to_string(spec_.f_star));
    }
  }
  for (const auto& p : spec_.probes) {
    if (p.size() != spec_.dim) throw std::invalid_argument(where(spec_.name) + "probe dimension");
  }
}

void Objective::check_dim(const Vector& x) const {
  if (x.size() != spec_.dim) {
    throw std::invalid_argument(where(spec_.name) + "point has dimension " +
                                std::to_string(x.size()) + ", expected " +
                                std::to_string(spec_.dim));
  }
}

double Objective::value(const Vector& x) const {
  check_dim(x);
  const double v = spec_.eval(x);
  return std::isnan(v) ? kInfinity : v;
}

Vector Objective::gradient(const Vector& x) const {
  check_dim(x);
  if (spec_.grad) return spec_.grad(x);
  return finite_diff_grad(*this, x);
}

bool Objective::is_optimal(const Vector& x) const {
  if (!has_minimizers()) throw std::invalid_argument(where(spec_.name) + "no declared minimizers");
  return value(x) <= spec_.f_star + spec_.opt_tol;
}

double Objective::dist_to_minimizers(const Geometry& g, const Vector& x) const {
  return g.distance(x, nearest_minimizer(g, x));
}

Vector Objective::nearest_minimizer(const Geometry& g, const Vector& x) const {
  if (!has_minimizers()) throw std::invalid_argument(where(spec_.name) + "no declared minimizers");
  Vector best;
  double best_d = kInfinity;
  for (const auto& m : spec_.minimizers.points) {
    const double d = g.distance(x, m);
    if (d < best_d) {
      best_d = d;
      best = m;
    }
  }
  for (const auto& b : spec_.minimizers.balls) {
    Vector p = b.project(g, x);
    const double d = g.distance(x, p);
    if (d < best_d) {
      best_d = d;
      best = std::move(p);
    }
  }
  return best;
}

std::vector<Vector> Objective::nearest_minimizers(const Geometry& g, const Vector& x,
                                                  double tie_tol) const {
  const double best = dist_to_minimizers(g, x);
  const double cut = best + tie_tol * std::max(1.0, best);
  std::vector<Vector> out;
  for (const auto& m : spec_.minimizers.points) {
    if (g.distance(x, m) <= cut) out.push_back(m);
  }
  for (const auto& b : spec_.minimizers.balls) {
    Vector p = b.project(g, x);
    if (g.distance(x, p) <= cut) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Vector> Objective::special_points() const {
  std::vector<Vector> out = spec_.minimizers.points;
  for (const auto& b : spec_.minimizers.balls) out.push_back(b.center);
  for (const auto& p : spec_.probes) {
    const bool dup = std::any_of(out.begin(), out.end(), [&](const Vector& q) { return same_point(p, q); });
    if (!dup) out.push_back(p);
  }
  return out;
}

Vector finite_diff_grad(const Objective& f, const Vector& x, double h) {
  if (x.size() != f.dim()) throw std::invalid_argument("finite_diff_grad: dimension mismatch");
  if (h <= 0.0) h = 1e-6 * std::max(1.0, x.norm());
  Vector g(x.size());
  Vector probe = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + h;
    const double fp = f.value(probe);
    probe[i] = x[i] - h;
    const double fm = f.value(probe);
    probe[i] = x[i];
    if (!std::isfinite(fp) || !std::isfinite(fm)) {
      throw DomainError("finite_diff_grad: stencil leaves dom f of '" + f.name() + "'");
    }
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

Objective finite_objective(std::string name, std::vector<FinitePoint> points) {
  if (points.empty()) throw std::invalid_argument("finite objective: empty domain");
  const int dim = static_cast<int>(points.front().x.size());
  if (dim == 0) throw std::invalid_argument("finite objective: zero-dimensional point");
  double f_star = kInfinity;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].x.size() != dim) throw std::invalid_argument("finite objective: mixed dimensions");
    if (!std::isfinite(points[i].f)) throw std::invalid_argument("finite objective: non-finite value");
    for (std::size_t j = 0; j < i; ++j) {
      if (same_point(points[i].x, points[j].x)) {
        throw std::invalid_argument("finite objective: duplicate point");
      }
    }
    f_star = std::min(f_star, points[i].f);
  }
  ObjectiveSpec spec;
  spec.name = std::move(name);
  spec.dim = dim;
  spec.domain_kind = DomainKind::finite;
  spec.finite_points = points;
  spec.f_star = f_star;
  spec.opt_tol = 0.0;
  for (const auto& p : points) {
    if (p.f == f_star) spec.minimizers.points.push_back(p.x);
  }
  spec.eval = [points](const Vector& x) {
    for (const auto& p : points) {
      if (same_point(p.x, x)) return p.f;
    }
    return kInfinity;
  };
  Vector lo = points.front().x;
  Vector hi = points.front().x;
  for (const auto& p : points) {
    lo = lo.cwiseMin(p.x);
    hi = hi.cwiseMax(p.x);
  }
  spec.sample_box = Box{lo, hi};
  return Objective(std::move(spec));
}

Objective compose_monotone(const Objective& h, const MonotoneMap& g, std::size_t check_pairs,
                           std::uint64_t seed) {
  if (!g.map) throw std::invalid_argument("compose_monotone: missing map");
  // Spot check: strict increase on sampled pairs of values from the range of h.
  {
    Sampler sampler;
    sampler.count = std::max<std::size_t>(check_pairs, 2);
    sampler.seed = seed;
    std::vector<double> values;
    for (const auto& p : sampler.points(h)) {
      const double v = h.value(p);
      if (std::isfinite(v)) values.push_back(v);
    }
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::size_t k = 0; k < check_pairs && values.size() >= 2; ++k) {
      double a = values[rng.index(values.size())];
      double b = values[rng.index(values.size())];
      if (a > b) std::swap(a, b);
      // Pairs closer than rounding resolution carry no information.
      if (b - a <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)})) continue;
      if (!(g.map(a) < g.map(b))) {
        throw std::invalid_argument("compose_monotone: " + g.name + " is not strictly increasing (" +
                                    std::to_string(a) + " -> " + std::to_string(g.map(a)) + ", " +
                                    std::to_string(b) + " -> " + std::to_string(g.map(b)) + ")");
      }
    }
  }

  ObjectiveSpec spec = h.spec();
  spec.name = g.name + "(" + h.name() + ")";
  auto inner = h.spec().eval;
  auto map = g.map;
  spec.eval = [inner, map](const Vector& x) {
    const double v = inner(x);
    return std::isfinite(v) ? map(v) : kInfinity;
  };
  if (h.has_analytic_gradient() && g.derivative) {
    auto hg = h.spec().grad;
    auto dg = g.derivative;
    spec.grad = [inner, hg, dg](const Vector& x) -> Vector { return dg(inner(x)) * hg(x); };
  } else {
    spec.grad = nullptr;
  }
  if (h.has_minimizers()) {
    spec.f_star = map(h.f_star());
    // Same membership band in the new value scale.
    spec.opt_tol = map(h.f_star() + h.opt_tol()) - spec.f_star;
  }
  for (auto& p : spec.finite_points) p.f = map(p.f);
  return Objective(std::move(spec));
}

Objective pullback_orthogonal_affine(const Objective& h, const Matrix& q, const Vector& b,
                                     const Geometry& g) {
  const int d = h.dim();
  if (q.rows() != d || q.cols() != d || b.size() != d || g.dim() != d) {
    throw std::invalid_argument("pullback: dimension mismatch");
  }
  Eigen::FullPivLU<Matrix> lu(q);
  if (!lu.isInvertible()) throw std::invalid_argument("pullback: Q is singular");
  const Matrix& x = g.matrix();
  const double resid = (q.transpose() * x * q - x).norm();
  if (resid > 1e-9 * std::max(1.0, x.norm())) {
    throw std::invalid_argument("pullback: Q is not X-orthogonal (||Q^T X Q - X|| = " +
                                std::to_string(resid) + ")");
  }
  const Matrix qinv = lu.inverse();
  auto back = [qinv, b](const Vector& y) -> Vector { return qinv * (y - b); };

  ObjectiveSpec spec = h.spec();
  spec.name = "pullback(" + h.name() + ")";
  auto inner = h.spec().eval;
  spec.eval = [inner, q, b](const Vector& z) { return inner(q * z + b); };
  if (h.has_analytic_gradient()) {
    auto hg = h.spec().grad;
    spec.grad = [hg, q, b](const Vector& z) -> Vector { return q.transpose() * hg(q * z + b); };
  }
  for (auto& m : spec.minimizers.points) m = back(m);
  for (auto& ball : spec.minimizers.balls) ball.center = back(ball.center);
  for (auto& p : spec.probes) p = back(p);
  for (auto& p : spec.finite_points) p.x = back(p.x);
  const Box& box = h.sample_box();
  if (box.lo.size() == d && box.hi.size() == d) {
    // Bounding box of the preimages of the corners.
    Vector lo = Vector::Constant(d, kInfinity);
    Vector hi = Vector::Constant(d, -kInfinity);
    for (std::uint64_t mask = 0; mask < (1ULL << d); ++mask) {
      Vector corner(d);
      for (int i = 0; i < d; ++i) corner[i] = (mask >> i) & 1ULL ? box.hi[i] : box.lo[i];
      const Vector pre = back(corner);
      lo = lo.cwiseMin(pre);
      hi = hi.cwiseMax(pre);
    }
    spec.sample_box = Box{lo, hi};
  }
  return Objective(std::move(spec));
}

Objective affine_value(const Objective& g, double a, double b) {
  if (!(a > 0.0)) throw std::invalid_argument("affine_value: scale a must be positive");
  ObjectiveSpec spec = g.spec();
  spec.name = "affine(" + g.name() + ")";
  auto inner = g.spec().eval;
  spec.eval = [inner, a, b](const Vector& x) {
    const double v = inner(x);
    return std::isfinite(v) ? a * v + b : kInfinity;
  };
  if (g.has_analytic_gradient()) {
    auto gg = g.spec().grad;
    spec.grad = [gg, a](const Vector& x) -> Vector { return a * gg(x); };
  }
  if (g.has_minimizers()) {
    spec.f_star = a * g.f_star() + b;
    spec.opt_tol = a * g.opt_tol();
  }
  for (auto& p : spec.finite_points) p.f = a * p.f + b;
  return Objective(std::move(spec));
}

Objective patch_to_min(const Objective& g, const PatchSet& c, const Geometry& geometry,
                       std::uint64_t seed) {
  if (c.empty()) return g;
  if (!g.has_minimizers()) throw std::invalid_argument("patch_to_min: g has no declared minimizers");
  if (geometry.dim() != g.dim()) throw std::invalid_argument("patch_to_min: geometry dimension");
  for (const auto& p : c.points) {
    if (p.size() != g.dim()) throw std::invalid_argument("patch_to_min: point dimension");
    if (!g.in_domain(p)) throw std::invalid_argument("patch_to_min: C must lie in dom g");
    if (g.is_optimal(p)) throw std::invalid_argument("patch_to_min: C intersects the minimizers of g");
  }
  for (const auto& ball : c.balls) {
    if (ball.center.size() != g.dim()) throw std::invalid_argument("patch_to_min: ball dimension");
    for (const auto& m : g.minimizers().points) {
      if (ball.contains(geometry, m)) {
        throw std::invalid_argument("patch_to_min: C intersects the minimizers of g");
      }
    }
    // Sampled check only: a continuum cannot be decided numerically.
    Rng rng(seed);
    for (int k = 0; k < 2000; ++k) {
      Vector w(g.dim());
      for (int i = 0; i < g.dim(); ++i) w[i] = rng.uniform(-1.0, 1.0);
      if (w.norm() > 1.0) continue;
      const Vector z = ball.center + ball.radius * geometry.unwhiten(w);
      if (!g.in_domain(z)) throw std::invalid_argument("patch_to_min: C must lie in dom g");
      if (g.is_optimal(z)) throw std::invalid_argument("patch_to_min: C intersects the minimizers of g");
    }
  }

  ObjectiveSpec spec = g.spec();
  spec.name = "patch(" + g.name() + ")";
  const double g_inf = g.f_star();
  auto inner = g.spec().eval;
  auto points = c.points;
  auto balls = c.balls;
  spec.eval = [inner, points, balls, geometry, g_inf](const Vector& x) {
    for (const auto& p : points) {
      if (same_point(p, x)) return g_inf;
    }
    for (const auto& ball : balls) {
      if (geometry.distance(x, ball.center) <= ball.radius) return g_inf;
    }
    return inner(x);
  };
  // The patched function is not differentiable at C.
  spec.smooth = false;
  for (const auto& p : c.points) {
    spec.minimizers.points.push_back(p);
    spec.probes.push_back(p);
  }
  for (const auto& ball : c.balls) spec.minimizers.balls.push_back(ball);
  return Objective(std::move(spec));
}

}  // namespace broxlab
