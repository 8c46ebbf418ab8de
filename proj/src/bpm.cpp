#include "broxlab/bpm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace broxlab {

void BpmConfig::validate() const {
  if (!(t > 0.0) || !std::isfinite(t)) throw std::invalid_argument("bpm: t must be positive and finite");
  if (max_iters < 1) throw std::invalid_argument("bpm: max_iters must be >= 1");
  if (opt_tol && !(*opt_tol >= 0.0)) throw std::invalid_argument("bpm: opt_tol must be nonnegative");
}

const char* to_string(Termination t) {
  switch (t) {
    case Termination::reached_optimum: return "reached_optimum";
    case Termination::max_iters: return "max_iters";
    case Termination::oracle_failure: return "oracle_failure";
  }
  return "?";
}

double Trajectory::max_epsilon() const {
  double m = 0.0;
  for (const auto& s : steps) m = std::max(m, s.epsilon);
  return m;
}

double Trajectory::max_resolution() const {
  double m = 0.0;
  for (const auto& s : steps) m = std::max(m, s.resolution);
  return m;
}

Trajectory run_bpm(const Objective& f, const Geometry& g, const Vector& x0, const BpmConfig& cfg) {
  cfg.validate();
  if (x0.size() != f.dim() || g.dim() != f.dim()) throw std::invalid_argument("bpm: dimension mismatch");
  if (!f.in_domain(x0)) throw std::invalid_argument("bpm: x0 is not in dom f");
  if (!f.has_minimizers()) throw std::invalid_argument("bpm: objective declares no minimizers");

  Trajectory tr;
  tr.t = cfg.t;
  tr.opt_tol = cfg.opt_tol.value_or(f.opt_tol());
  const double target = f.f_star() + tr.opt_tol;

  auto record = [&](const Vector& x, double v) {
    tr.iterates.push_back(x);
    tr.values.push_back(v);
    tr.dists.push_back(f.dist_to_minimizers(g, x));
  };
  record(x0, f.value(x0));

  for (int k = 0;; ++k) {
    if (tr.values.back() <= target) {
      tr.termination = Termination::reached_optimum;
      break;
    }
    if (k >= cfg.max_iters) {
      tr.termination = Termination::max_iters;
      break;
    }
    BroxResult step;
    try {
      step = brox(f, g, tr.iterates.back(), cfg.t, cfg.oracle);
    } catch (const OracleError& e) {
      tr.termination = Termination::oracle_failure;
      tr.failure_reason = e.what();
      break;
    }
    const Vector next = step.selected;
    tr.steps.push_back(std::move(step));
    record(next, f.value(next));
  }
  return tr;
}

long long kappa_bound(const Geometry& g, const Vector& x0, const Vector& x_star, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("kappa_bound: t must be positive");
  const double ratio = g.distance(x0, x_star) / t;
  const double need = 3.0 * ratio * ratio;
  // Snap values within rounding of an integer (e.g. distance exactly t).
  double c = std::ceil(need);
  if (c - need > 1.0 - 1e-12 * std::max(1.0, need)) c -= 1.0;
  return 3LL * static_cast<long long>(c);
}

}  // namespace broxlab
