#pragma once

#include <optional>
#include <string>
#include <vector>

#include "broxlab/geometry.hpp"
#include "broxlab/objective.hpp"
#include "broxlab/oracle.hpp"

namespace broxlab {

struct BpmConfig {
  double t = 1.0;
  int max_iters = 1000;
  /// Value tolerance for membership in X_f; the objective's own when unset.
  std::optional<double> opt_tol;
  OracleOptions oracle;

  /// Throws std::invalid_argument unless t > 0 and max_iters >= 1.
  void validate() const;
};

enum class Termination { reached_optimum, max_iters, oracle_failure };

const char* to_string(Termination t);

/// BPM iterates x_0..x_K with values and distances to the declared
/// minimizer set. steps[k] is the oracle output that produced x_{k+1}.
struct Trajectory {
  std::vector<Vector> iterates;
  std::vector<double> values;
  std::vector<double> dists;
  std::vector<BroxResult> steps;
  Termination termination = Termination::max_iters;
  std::string failure_reason;
  double t = 0.0;
  double opt_tol = 0.0;

  std::size_t size() const { return iterates.size(); }
  const Vector& last() const { return iterates.back(); }
  /// Largest epsilon / resolution used by any step (0 for an empty run).
  double max_epsilon() const;
  double max_resolution() const;
};

/// Runs x_{k+1} = BProx_t(x_k).selected until f(x_k) <= f_star + opt_tol or
/// max_iters steps have been taken. Oracle failures end the run with
/// Termination::oracle_failure. Throws std::invalid_argument if x0 is not in
/// dom f or the config is invalid.
Trajectory run_bpm(const Objective& f, const Geometry& g, const Vector& x0, const BpmConfig& cfg);

/// Smallest K with floor(K/3) >= 3 ||x0 - x_star||_X^2 / t^2.
long long kappa_bound(const Geometry& g, const Vector& x0, const Vector& x_star, double t);

}  // namespace broxlab
