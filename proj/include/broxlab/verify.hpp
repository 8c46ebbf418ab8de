#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "broxlab/bpm.hpp"
#include "broxlab/geometry.hpp"
#include "broxlab/objective.hpp"
#include "broxlab/oracle.hpp"
#include "broxlab/sampler.hpp"

namespace broxlab {

enum class Verdict { pass, fail, inconclusive };

const char* to_string(Verdict v);

/// One violating configuration. `u` is the broximal point, the comparison
/// point z or the second point y, depending on the check. `value` is the
/// quantity that was tested (usually an inner product) and `margin` how far
/// it exceeded the allowed threshold (> 0 for a violation).
struct Witness {
  Vector x;
  Vector u;
  std::optional<double> lambda;
  double value = 0.0;
  double margin = 0.0;
  std::string note;
};

/// Result of a sampling check. A pass means that no violation was found at
/// this sampling density; it is never a proof.
struct VerificationReport {
  std::string check;
  Verdict verdict = Verdict::pass;
  std::size_t samples = 0;
  std::vector<Witness> witnesses;
  std::map<std::string, double> config;
  /// Minimizer used by the existential checks (assumption1, uba, quasar).
  std::optional<Vector> certified_minimizer;
  std::string note;

  bool passed() const { return verdict == Verdict::pass; }
  bool failed() const { return verdict == Verdict::fail; }
};

struct CheckOptions {
  OracleOptions oracle;
  /// Inner-product slack, relative to the Cauchy-Schwarz bound.
  double violation_rel = 1e-9;
  /// Points with dist(x, X_f) <= t (1 + dist_margin_rel) are exempt.
  double dist_margin_rel = 1e-6;
  /// Margin for strict inequalities, relative to max(1, scale).
  double strict_margin_rel = 1e-8;
  double grad_tol = 1e-6;
  /// Gradient tolerance at computed broximal points (their position is
  /// only known to solver resolution).
  double stationarity_tol = 1e-5;
  /// BPM steps followed from every sample in the assumption2 checks.
  int chain_depth = 4;
  std::size_t max_witnesses = 16;
};

struct ClassParams {
  double zeta = 1.0;
  double theta = 1.0;
  double t = 1.0;

  /// Throws std::invalid_argument unless 0 < zeta <= 1, theta > 0, t > 0.
  void validate() const;
};

// ---- broximal alignment ----------------------------------------------------

/// First alignment condition at radius t: for sampled x with dist(x, X_f) > t and every
/// candidate u of the oracle, <x - u, x_star - u>_X <= tol. x_star is tried
/// first, then every other declared minimizer; the report passes if any of
/// them is clean and names it in certified_minimizer.
VerificationReport check_assumption1(const Objective& f, const Geometry& g, double t,
                                     const std::optional<Vector>& x_star, const Sampler& sampler,
                                     const CheckOptions& opts = {});

/// Second alignment condition at radius t: no sampled non-optimal x (nor any point on
/// the first chain_depth BPM steps from it) has an oracle candidate set
/// that collapses to x.
VerificationReport check_assumption2(const Objective& f, const Geometry& g, double t,
                                     const Sampler& sampler, const CheckOptions& opts = {});

/// True when the oracle output at x collapses onto x (all candidates within
/// the solver's position resolution).
bool brox_is_singleton_at(const BroxResult& r, const Geometry& g, const Vector& x, double t);

// ---- generalized convexity ----------------------------------------------

VerificationReport check_quasiconvex(const Objective& f, bool strict, const Sampler& sampler,
                                     const CheckOptions& opts = {});
VerificationReport check_pseudoconvex(const Objective& f, const Sampler& sampler,
                                      const CheckOptions& opts = {});
/// Existential in x_star when not given: every declared minimizer point is
/// tried.
VerificationReport check_quasar(const Objective& f, double zeta, const std::optional<Vector>& x_star,
                                const Sampler& sampler, const CheckOptions& opts = {});
/// Requires f_star = 0 (throws std::invalid_argument otherwise); accepts the
/// inequality at any nearest declared minimizer.
VerificationReport check_aiming(const Objective& f, double theta, const Sampler& sampler,
                                const CheckOptions& opts = {});

/// The gradient checks treat f as differentiable on R^d: a sampled point
/// outside dom f, or one where a directional first-order probe disagrees
/// with the gradient, is reported as a violation.
std::optional<Witness> differentiability_violation(const Objective& f, const Vector& x,
                                                   std::uint64_t seed);

// ---- uniform alignment and radius monotonicity ----------------------------

/// Uniform broximal alignment: for x with dist(x, X_f) > t and every sampled
/// z in dom f with f(z) <= f(x), <x - z, x_star - z>_X <= tol. Existential in
/// x_star.
VerificationReport check_uba(const Objective& f, const Geometry& g, double t,
                             const std::optional<Vector>& x_star, const Sampler& sampler,
                             const CheckOptions& opts = {});

/// Fails iff some point violates the second alignment condition at t2 but not at t1.
VerificationReport check_F2_monotonicity(const Objective& f, const Geometry& g, double t1, double t2,
                                         const Sampler& sampler, const CheckOptions& opts = {});

/// Fails iff the UBA check passes at t1 and fails at t2 on the same samples.
VerificationReport check_uba_monotonicity(const Objective& f, const Geometry& g, double t1,
                                          double t2, const Sampler& sampler,
                                          const CheckOptions& opts = {});

/// Replays the two finite-domain counterexamples showing that the first alignment condition
/// alone is not monotone in t. Inner products (sign convention
/// <x - u, u - x_star>) and memberships are stored in config.
VerificationReport check_F1_nonmonotone_witnesses();

/// <x - u, u - x_star>_X for the selected exhaustive broximal point u.
double alignment_inner(const Objective& f, const Geometry& g, const Vector& x, double t,
                       const Vector& x_star);

// ---- stationarity and point pairs ----------------------------------------------

/// Optimality of u = BProx(x) for smooth f: grad f(u) ~ 0 in the interior,
/// grad f(u) = c X (x - u) with c >= 0 on the boundary.
VerificationReport check_normal_cone_stationarity(const Objective& f, const Geometry& g,
                                                  const Vector& x, double t,
                                                  const CheckOptions& opts = {});

/// Finite domains: no non-optimal pair u1 != u2 with u1 in BProx(u2) and
/// u2 in BProx(u1). Only asserted when check_assumption1 passes at t.
VerificationReport check_two_point_cycle(const Objective& f, const Geometry& g, double t);

/// Analytic versus central-difference gradients at sampled points:
/// ||g_a - g_fd|| <= rel_tol * max(1, ||g_a||).
VerificationReport check_gradient_consistency(const Objective& f, const Sampler& sampler,
                                              double rel_tol = 1e-4);

/// Symmetric Hausdorff distance between two finite point sets.
double hausdorff(const Geometry& g, const std::vector<Vector>& a, const std::vector<Vector>& b);

// ---- trajectories -----------------------------------------------------------

/// Checks a BPM trajectory against the convergence statements: the
/// optimality dichotomy of one step, distance monotonicity to x_star, the
/// t^2/3 drop over three steps (k >= 2), the iteration bound, x_{k+1} != x_k
/// and ||x_k - x_{k+3}|| > t while not optimal, and value monotonicity.
std::vector<VerificationReport> check_trajectory(const Objective& f, const Geometry& g,
                                                 const Trajectory& tr, const Vector& x_star,
                                                 const CheckOptions& opts = {});

VerificationReport check_optimality_dichotomy(const Objective& f, const Geometry& g,
                                              const Trajectory& tr, const CheckOptions& opts = {});
VerificationReport check_distance_monotone(const Objective& f, const Geometry& g, const Trajectory& tr,
                                           const Vector& x_star, const CheckOptions& opts = {});
VerificationReport check_three_step_drop(const Objective& f, const Geometry& g, const Trajectory& tr,
                                         const Vector& x_star, const CheckOptions& opts = {});
VerificationReport check_kappa(const Geometry& g, const Trajectory& tr, const Vector& x_star);
VerificationReport check_iterates_move(const Objective& f, const Geometry& g, const Trajectory& tr);
VerificationReport check_three_step_distance(const Objective& f, const Geometry& g,
                                             const Trajectory& tr, const CheckOptions& opts = {});
VerificationReport check_value_monotone(const Trajectory& tr);

}  // namespace broxlab
