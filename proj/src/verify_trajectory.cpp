#include <algorithm>
#include <cmath>

#include "broxlab/verify.hpp"

namespace broxlab {

namespace {

VerificationReport trajectory_report(std::string name, const Trajectory& tr) {
  VerificationReport r;
  r.check = std::move(name);
  r.samples = tr.size();
  r.config["t"] = tr.t;
  r.config["max_epsilon"] = tr.max_epsilon();
  r.config["max_resolution"] = tr.max_resolution();
  return r;
}

void conclude(VerificationReport& r, std::vector<Witness> w) {
  r.config["violations"] = static_cast<double>(w.size());
  if (w.empty()) {
    r.verdict = Verdict::pass;
    r.note = "no violation along this trajectory";
    return;
  }
  r.verdict = Verdict::fail;
  if (w.size() > 16) w.resize(16);
  r.witnesses = std::move(w);
}

bool optimal_value(const Objective& f, const Trajectory& tr, double v) { return v <= f.f_star() + tr.opt_tol; }

}  // namespace

VerificationReport check_optimality_dichotomy(const Objective& f, const Geometry&, const Trajectory& tr,
                                              const CheckOptions&) {
  VerificationReport r = trajectory_report("optimality_dichotomy", tr);
  // Points this close to the radius are left out of both directions.
  const double band = 1e-3 * std::max(1.0, tr.t);
  r.config["band"] = band;
  std::vector<Witness> w;
  for (std::size_t k = 0; k + 1 < tr.size(); ++k) {
    const double d = tr.dists[k];
    const double eps = tr.steps[k].epsilon;
    const double next = tr.values[k + 1];
    if (d <= tr.t - band && next > f.f_star() + tr.opt_tol + eps) {
      w.push_back(Witness{tr.iterates[k], tr.iterates[k + 1], std::nullopt, next, next - f.f_star() - tr.opt_tol,
                          "ball contains a minimizer but the step is not optimal"});
    }
    if (d > tr.t + band && optimal_value(f, tr, next)) {
      w.push_back(Witness{tr.iterates[k], tr.iterates[k + 1], std::nullopt, next, d - tr.t,
                          "ball misses X_f but the step is optimal"});
    }
  }
  conclude(r, std::move(w));
  return r;
}

VerificationReport check_distance_monotone(const Objective&, const Geometry& g, const Trajectory& tr,
                                           const Vector& x_star, const CheckOptions& opts) {
  VerificationReport r = trajectory_report("distance_monotone", tr);
  const double slack_rel = opts.violation_rel;
  std::vector<Witness> w;
  for (std::size_t k = 0; k + 1 < tr.size(); ++k) {
    if (!(tr.dists[k] > tr.t)) continue;
    const double a = g.distance(tr.iterates[k], x_star);
    const double b = g.distance(tr.iterates[k + 1], x_star);
    const double slack = slack_rel * std::max(1.0, a) + 2.0 * tr.steps[k].resolution;
    if (b > a + slack) {
      w.push_back(Witness{tr.iterates[k], tr.iterates[k + 1], std::nullopt, b - a, b - a - slack,
                          "distance to x_star increased"});
    }
  }
  conclude(r, std::move(w));
  return r;
}

VerificationReport check_three_step_drop(const Objective&, const Geometry& g, const Trajectory& tr,
                                         const Vector& x_star, const CheckOptions& opts) {
  VerificationReport r = trajectory_report("three_step_drop", tr);
  std::vector<Witness> w;
  const double drop = tr.t * tr.t / 3.0;
  for (std::size_t k = 2; k + 1 < tr.size(); ++k) {
    if (!(tr.dists[k] > tr.t)) continue;
    const double a = g.distance(tr.iterates[k - 2], x_star);
    const double b = g.distance(tr.iterates[k + 1], x_star);
    const double res = std::max({tr.steps[k - 2].resolution, tr.steps[k - 1].resolution, tr.steps[k].resolution});
    const double slack = opts.violation_rel * std::max(1.0, a * a) + 2.0 * res * (a + b);
    const double lhs = b * b;
    const double rhs = a * a - drop;
    if (lhs > rhs + slack) {
      w.push_back(Witness{tr.iterates[k - 2], tr.iterates[k + 1], std::nullopt, lhs - a * a, lhs - rhs - slack,
                          "||x_{k+1} - x*||^2 > ||x_{k-2} - x*||^2 - t^2/3"});
    }
  }
  conclude(r, std::move(w));
  return r;
}

VerificationReport check_kappa(const Geometry& g, const Trajectory& tr, const Vector& x_star) {
  VerificationReport r = trajectory_report("kappa_bound", tr);
  const long long bound = kappa_bound(g, tr.iterates.front(), x_star, tr.t);
  const auto steps = static_cast<long long>(tr.size()) - 1;
  r.config["kappa"] = static_cast<double>(bound);
  r.config["iterations"] = static_cast<double>(steps);
  std::vector<Witness> w;
  if (tr.termination != Termination::reached_optimum) {
    w.push_back(Witness{tr.iterates.front(), tr.last(), std::nullopt, static_cast<double>(steps), 0.0,
                        std::string("run ended with ") + to_string(tr.termination)});
  } else if (steps > bound) {
    w.push_back(Witness{tr.iterates.front(), tr.last(), std::nullopt, static_cast<double>(steps),
                        static_cast<double>(steps - bound), "more iterations than the bound"});
  }
  conclude(r, std::move(w));
  return r;
}

VerificationReport check_iterates_move(const Objective& f, const Geometry& g, const Trajectory& tr) {
  VerificationReport r = trajectory_report("iterates_move", tr);
  std::vector<Witness> w;
  for (std::size_t k = 0; k + 1 < tr.size(); ++k) {
    if (optimal_value(f, tr, tr.values[k])) continue;
    const double tol = std::max(1e-12 * std::max(1.0, tr.t), 10.0 * tr.steps[k].resolution);
    const double d = g.distance(tr.iterates[k], tr.iterates[k + 1]);
    if (d <= tol) {
      w.push_back(Witness{tr.iterates[k], tr.iterates[k + 1], std::nullopt, d, tol - d,
                          "non-optimal iterate did not move"});
    }
  }
  conclude(r, std::move(w));
  return r;
}

VerificationReport check_three_step_distance(const Objective& f, const Geometry& g,
                                             const Trajectory& tr, const CheckOptions& opts) {
  VerificationReport r = trajectory_report("three_step_distance", tr);
  std::vector<Witness> w;
  std::size_t tested = 0;
  for (std::size_t k = 0; k + 3 < tr.size(); ++k) {
    if (optimal_value(f, tr, tr.values[k + 1])) continue;
    ++tested;
    const double res = std::max({tr.steps[k].resolution, tr.steps[k + 1].resolution, tr.steps[k + 2].resolution});
    const double slack = opts.strict_margin_rel * std::max(1.0, tr.t) + 3.0 * res;
    const double d = g.distance(tr.iterates[k], tr.iterates[k + 3]);
    if (!(d > tr.t - slack)) {
      w.push_back(Witness{tr.iterates[k], tr.iterates[k + 3], std::nullopt, d, tr.t - slack - d,
                          "||x_k - x_{k+3}|| <= t while x_{k+1} is not optimal"});
    }
  }
  r.config["tested"] = static_cast<double>(tested);
  conclude(r, std::move(w));
  return r;
}

VerificationReport check_value_monotone(const Trajectory& tr) {
  VerificationReport r = trajectory_report("value_monotone", tr);
  std::vector<Witness> w;
  for (std::size_t k = 0; k + 1 < tr.size(); ++k) {
    const double allowed = tr.values[k] + tr.steps[k].epsilon;
    if (tr.values[k + 1] > allowed) {
      w.push_back(Witness{tr.iterates[k], tr.iterates[k + 1], std::nullopt, tr.values[k + 1],
                          tr.values[k + 1] - allowed, "value increased"});
    }
  }
  conclude(r, std::move(w));
  return r;
}

std::vector<VerificationReport> check_trajectory(const Objective& f, const Geometry& g,
                                                 const Trajectory& tr, const Vector& x_star,
                                                 const CheckOptions& opts) {
  return {check_optimality_dichotomy(f, g, tr, opts),
          check_distance_monotone(f, g, tr, x_star, opts),
          check_three_step_drop(f, g, tr, x_star, opts),
          check_kappa(g, tr, x_star),
          check_iterates_move(f, g, tr),
          check_three_step_distance(f, g, tr, opts),
          check_value_monotone(tr)};
}

}  // namespace broxlab
