#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "broxlab/catalog.hpp"
#include "broxlab/sampler.hpp"
#include "broxlab/verify.hpp"

using namespace broxlab;

namespace {

Vector v1(double a) { return Vector::Constant(1, a); }
Vector v2(double a, double b) { return (Vector(2) << a, b).finished(); }

/// Hand-built 1-D trajectory on sphere(1) with exact steps.
Trajectory synthetic(const Objective& f, std::vector<double> xs, double t, Termination term) {
  Trajectory tr;
  tr.t = t;
  tr.opt_tol = f.opt_tol();
  tr.termination = term;
  const Geometry g = Geometry::identity(1);
  for (double x : xs) {
    tr.iterates.push_back(v1(x));
    tr.values.push_back(f.value(v1(x)));
    tr.dists.push_back(f.dist_to_minimizers(g, v1(x)));
  }
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    BroxResult r;
    r.selected = v1(xs[k + 1]);
    r.candidates = {r.selected};
    r.value = f.value(r.selected);
    tr.steps.push_back(r);
  }
  return tr;
}

}  // namespace

TEST(TrajectoryChecks, SinAbsFromTwentyPassesAll) {
  const Objective f = sin_abs();
  BpmConfig cfg;
  cfg.t = 2 * std::numbers::pi;
  const Trajectory tr = run_bpm(f, Geometry::identity(1), v1(20.0), cfg);
  for (const auto& r : check_trajectory(f, Geometry::identity(1), tr, v1(sin_abs_minimizer()))) {
    EXPECT_TRUE(r.passed()) << r.check;
  }
}

TEST(TrajectoryChecks, RandomSphereStartsPass) {
  Rng rng(21);
  const Objective f = sphere(2);
  const Geometry g = Geometry::identity(2);
  for (int i = 0; i < 10; ++i) {
    BpmConfig cfg;
    cfg.t = 1.0;
    const Vector x0 = v2(rng.uniform(-5, 5), rng.uniform(-5, 5));
    const Trajectory tr = run_bpm(f, g, x0, cfg);
    for (const auto& r : check_trajectory(f, g, tr, v2(0, 0))) EXPECT_TRUE(r.passed()) << r.check;
  }
}

TEST(TrajectoryChecks, ExactSphereTrajectory) {
  // x_{k+1} = x_k - 1 down to 0.4 then 0.
  const Objective f = sphere(1);
  const Trajectory tr = synthetic(f, {4.4, 3.4, 2.4, 1.4, 0.4, 0.0}, 1.0, Termination::reached_optimum);
  for (const auto& r : check_trajectory(f, Geometry::identity(1), tr, v1(0.0))) EXPECT_TRUE(r.passed()) << r.check;
}

TEST(TrajectoryChecks, ValueIncreaseIsCaught) {
  const Objective f = sphere(1);
  const Trajectory tr = synthetic(f, {2.0, 2.5, 1.5}, 1.0, Termination::max_iters);
  const auto r = check_value_monotone(tr);
  ASSERT_TRUE(r.failed());
  EXPECT_EQ(r.witnesses.front().u, v1(2.5));
}

TEST(TrajectoryChecks, DistanceIncreaseIsCaught) {
  const Objective f = sphere(1);
  const Trajectory tr = synthetic(f, {3.0, 3.5}, 1.0, Termination::max_iters);
  EXPECT_TRUE(check_distance_monotone(f, Geometry::identity(1), tr, v1(0.0)).failed());
}

TEST(TrajectoryChecks, ShortStepsBreakThreeStepDrop) {
  const Objective f = sphere(1);
  const Trajectory tr = synthetic(f, {5.0, 4.99, 4.98, 4.97, 4.96}, 1.0, Termination::max_iters);
  EXPECT_TRUE(check_three_step_drop(f, Geometry::identity(1), tr, v1(0.0)).failed());
  EXPECT_TRUE(check_three_step_distance(f, Geometry::identity(1), tr).failed());
}

TEST(TrajectoryChecks, StationaryIterateIsCaught) {
  const Objective f = sphere(1);
  const Trajectory tr = synthetic(f, {3.0, 3.0}, 1.0, Termination::max_iters);
  EXPECT_TRUE(check_iterates_move(f, Geometry::identity(1), tr).failed());
}

TEST(TrajectoryChecks, DichotomyViolations) {
  const Objective f = sphere(1);
  // Minimizer inside the first ball but the step stops short.
  const Trajectory a = synthetic(f, {0.5, 0.2}, 1.0, Termination::max_iters);
  EXPECT_TRUE(check_optimality_dichotomy(f, Geometry::identity(1), a).failed());
  // Ball misses the minimizer but the step lands on it.
  const Trajectory b = synthetic(f, {3.0, 0.0}, 1.0, Termination::reached_optimum);
  EXPECT_TRUE(check_optimality_dichotomy(f, Geometry::identity(1), b).failed());
}

TEST(TrajectoryChecks, KappaBound) {
  const Objective f = sphere(1);
  std::vector<double> xs;
  for (int k = 0; k <= 12; ++k) xs.push_back(1.0 - 0.01 * k);
  xs.push_back(0.0);
  const Trajectory tr = synthetic(f, xs, 1.0, Termination::reached_optimum);
  const auto r = check_kappa(Geometry::identity(1), tr, v1(0.0));
  EXPECT_EQ(r.config.at("kappa"), 9.0);
  EXPECT_TRUE(r.failed());
  const Trajectory ok = synthetic(f, {1.0, 0.0}, 1.0, Termination::reached_optimum);
  EXPECT_TRUE(check_kappa(Geometry::identity(1), ok, v1(0.0)).passed());
  const Trajectory stuck = synthetic(f, {3.0, 2.0}, 1.0, Termination::max_iters);
  EXPECT_TRUE(check_kappa(Geometry::identity(1), stuck, v1(0.0)).failed());
}
