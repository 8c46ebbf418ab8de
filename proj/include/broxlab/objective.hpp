#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "broxlab/geometry.hpp"

namespace broxlab {

/// +infinity marks points outside dom f. IEEE arithmetic gives the
/// absorbing behaviour we need (a*inf + b = inf for a > 0).
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Thrown when a finite-difference stencil leaves dom f.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown for unknown catalog keys or malformed catalog parameters.
class CatalogError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class DomainKind { continuous, finite };

struct FinitePoint {
  Vector x;
  double f = 0.0;
};

/// Declared set of global minimizers: isolated points plus closed X-balls
/// (the latter only arise from patching a ball onto the minimum level).
struct MinimizerSet {
  std::vector<Vector> points;
  std::vector<Ball> balls;

  bool empty() const { return points.empty() && balls.empty(); }
};

/// Axis-aligned window used when sampling an objective.
struct Box {
  Vector lo;
  Vector hi;
};

/// Everything needed to build an Objective. Combinators copy and edit this.
struct ObjectiveSpec {
  std::string name;
  int dim = 0;
  std::function<double(const Vector&)> eval;
  /// Optional analytic gradient; finite differences are used when empty.
  std::function<Vector(const Vector&)> grad;
  MinimizerSet minimizers;
  double f_star = std::numeric_limits<double>::quiet_NaN();
  double opt_tol = 1e-8;
  DomainKind domain_kind = DomainKind::continuous;
  std::vector<FinitePoint> finite_points;
  /// Isolated features (punctures, patched points) that sampling cannot see.
  /// Oracles evaluate these explicitly whenever they fall inside the ball.
  std::vector<Vector> probes;
  bool smooth = false;
  Box sample_box;
};

/// Extended-real objective f: R^d -> R U {+inf} with declared minimizers.
/// Immutable; eval and grad must be pure so that concurrent evaluation is safe.
class Objective {
 public:
  /// Validates the invariants: proper (declared minimizers have finite value)
  /// and |f(m) - f_star| <= opt_tol for every declared minimizer point.
  explicit Objective(ObjectiveSpec spec);

  const ObjectiveSpec& spec() const { return spec_; }
  const std::string& name() const { return spec_.name; }
  int dim() const { return spec_.dim; }
  double f_star() const { return spec_.f_star; }
  double opt_tol() const { return spec_.opt_tol; }
  const MinimizerSet& minimizers() const { return spec_.minimizers; }
  bool has_minimizers() const { return !spec_.minimizers.empty(); }
  DomainKind domain_kind() const { return spec_.domain_kind; }
  bool is_finite_domain() const { return spec_.domain_kind == DomainKind::finite; }
  const std::vector<FinitePoint>& finite_points() const { return spec_.finite_points; }
  const std::vector<Vector>& probes() const { return spec_.probes; }
  bool smooth() const { return spec_.smooth; }
  bool has_analytic_gradient() const { return static_cast<bool>(spec_.grad); }
  const Box& sample_box() const { return spec_.sample_box; }

  double operator()(const Vector& x) const { return value(x); }
  double value(const Vector& x) const;
  bool in_domain(const Vector& x) const { return value(x) < kInfinity; }

  /// Analytic gradient if provided, central differences otherwise.
  Vector gradient(const Vector& x) const;

  /// Membership in X_f decided by value: f(x) <= f_star + opt_tol.
  bool is_optimal(const Vector& x) const;

  /// X-distance from x to the declared minimizer set.
  double dist_to_minimizers(const Geometry& g, const Vector& x) const;
  /// Nearest point of the declared minimizer set (projection onto balls).
  Vector nearest_minimizer(const Geometry& g, const Vector& x) const;
  /// Nearest points of the declared set, all of them on (near-)ties.
  std::vector<Vector> nearest_minimizers(const Geometry& g, const Vector& x,
                                         double tie_tol = 1e-12) const;

  /// Declared minimizer points, probes and the centers of minimizer balls.
  std::vector<Vector> special_points() const;

 private:
  void check_dim(const Vector& x) const;

  ObjectiveSpec spec_;
};

/// True when a and b agree to 1e-9 relative in every coordinate. Used to
/// recognise isolated points (finite domains, punctures, patches) after
/// affine maps have introduced rounding.
bool same_point(const Vector& a, const Vector& b);

/// Central-difference gradient (f(x + h e_i) - f(x - h e_i)) / 2h.
/// h <= 0 selects the default 1e-6 * max(1, ||x||). Throws DomainError when
/// the stencil leaves dom f.
Vector finite_diff_grad(const Objective& f, const Vector& x, double h = 0.0);

/// Objective defined on a finite point list (+inf elsewhere). f_star and the
/// minimizer set are derived from the values.
Objective finite_objective(std::string name, std::vector<FinitePoint> points);

// ---- class-preserving transformations ------------------------------------

struct MonotoneMap {
  std::function<double(double)> map;
  /// Optional derivative for the chain rule.
  std::function<double(double)> derivative;
  std::string name = "g";
};

/// f = g o h with f = +inf where h = +inf. g must be strictly increasing on
/// the range of h; this is spot-checked on `check_pairs` sampled value pairs
/// (not proven) and a violation throws std::invalid_argument. Minimizers are
/// carried over unchanged.
Objective compose_monotone(const Objective& h, const MonotoneMap& g,
                           std::size_t check_pairs = 10000, std::uint64_t seed = 0);

/// f(x) = h(Qx + b) for an X-orthogonal Q (Q^T X Q = X to 1e-9). Minimizers,
/// probes and finite points are mapped through phi^{-1}.
Objective pullback_orthogonal_affine(const Objective& h, const Matrix& q, const Vector& b,
                                     const Geometry& g);

/// f = a * g + b, a > 0.
Objective affine_value(const Objective& g, double a, double b);

/// Closed set for patch_to_min: finite points and/or closed X-balls.
struct PatchSet {
  std::vector<Vector> points;
  std::vector<Ball> balls;

  bool empty() const { return points.empty() && balls.empty(); }
};

/// f = g_inf on C, g elsewhere; X_f = X_g U C. C must lie in dom g and be
/// disjoint from X_g (exact for finite points, sampled for balls).
Objective patch_to_min(const Objective& g, const PatchSet& c, const Geometry& geometry,
                       std::uint64_t seed = 0);

}  // namespace broxlab
