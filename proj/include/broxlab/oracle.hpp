#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "broxlab/geometry.hpp"
#include "broxlab/objective.hpp"

namespace broxlab {

/// No point of the ball has a finite value.
class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Approximate broximal operator output: the epsilon-optimal points found in
/// B_X(x, t) and the deterministic choice of the next iterate.
///
/// Invariants: every candidate lies in the ball (up to membership_tol) with
/// f(c) <= value + epsilon; `selected` is the candidate farthest from x in
/// the X-norm, ties broken by lexicographic order, so it differs from x
/// whenever another candidate exists.
struct BroxResult {
  std::vector<Vector> candidates;
  double value = kInfinity;
  Vector selected;
  double epsilon = 0.0;
  /// Position resolution of the solver, in X-norm units.
  double resolution = 0.0;
  std::size_t evaluations = 0;
};

enum class OracleKind { automatic, exhaustive, grid1d, multistart };

const char* to_string(OracleKind kind);
/// Throws std::invalid_argument for unknown names.
OracleKind oracle_kind_from_string(const std::string& name);

struct OracleOptions {
  OracleKind kind = OracleKind::automatic;
  int grid_n = 2001;
  int samples = 256;
  int refine = 40;
  int starts = 8;
  std::uint64_t seed = 0;
  double membership_tol = 1e-10;
};

/// Exact minimization over the finite domain points inside the ball
/// (epsilon = 0).
BroxResult brox_exhaustive(const Objective& f, const Geometry& g, const Vector& x, double t,
                           double membership_tol = 1e-10);

/// Dense grid over the 1-D ball followed by `refine_iters` rounds of
/// trisection around every grid local minimum. Candidates are the points
/// within 1e-9 * max(1, |value|) of the best value.
BroxResult brox_grid_1d(const Objective& f, const Geometry& g, double x, double t, int n,
                        int refine_iters);
BroxResult brox_grid_1d(const Objective& f, double x, double t, int n, int refine_iters);

/// Halton points of the X-ball (unit Euclidean ball mapped through L^{-T},
/// scaled by t, shifted by x) plus compass-search refinement of the best
/// starts, projected back onto the ball. Deterministic for a fixed seed.
BroxResult brox_multistart(const Objective& f, const Geometry& g, const Vector& x, double t,
                           const OracleOptions& options);

/// Dispatches on options.kind; `automatic` picks exhaustive for finite
/// domains, grid1d in one dimension and multistart otherwise.
BroxResult brox(const Objective& f, const Geometry& g, const Vector& x, double t,
                const OracleOptions& options = {});

OracleKind resolve_oracle(const Objective& f, OracleKind kind);

/// Farthest candidate from x; lexicographically smallest on distance ties.
Vector select_farthest(const std::vector<Vector>& candidates, const Geometry& g, const Vector& x);

}  // namespace broxlab
