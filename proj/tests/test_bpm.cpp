#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "broxlab/bpm.hpp"
#include "broxlab/catalog.hpp"
#include "broxlab/oracle.hpp"

using namespace broxlab;

namespace {

Vector v1(double a) { return Vector::Constant(1, a); }
Vector v2(double a, double b) { return (Vector(2) << a, b).finished(); }

}  // namespace

TEST(Kappa, ZeroDistance) { EXPECT_EQ(kappa_bound(Geometry::identity(1), v1(2.0), v1(2.0), 1.0), 0); }

TEST(Kappa, DistanceEqualsRadius) {
  for (double t : {0.1, 1.0, 2 * std::numbers::pi, 7.3}) {
    EXPECT_EQ(kappa_bound(Geometry::identity(1), v1(0.0), v1(t), t), 9) << t;
  }
}

TEST(Kappa, SinAbsFromTwenty) {
  const double t = 2 * std::numbers::pi;
  const double d = 20.0 - sin_abs_minimizer();
  const auto expected = 3 * static_cast<long long>(std::ceil(3.0 * d * d / (t * t)));
  EXPECT_EQ(kappa_bound(Geometry::identity(1), v1(20.0), v1(sin_abs_minimizer()), t), expected);
  EXPECT_EQ(expected, 108);
}

TEST(Kappa, UsesXNorm) {
  Matrix x(2, 2);
  x << 4.0, 0.0, 0.0, 1.0;
  EXPECT_EQ(kappa_bound(Geometry(x), v2(1, 0), v2(0, 0), 2.0), 9);
}

TEST(Run, SinAbsFromTwenty) {
  const Objective f = sin_abs();
  BpmConfig cfg;
  cfg.t = 2 * std::numbers::pi;
  const Trajectory tr = run_bpm(f, Geometry::identity(1), v1(20.0), cfg);
  EXPECT_EQ(tr.termination, Termination::reached_optimum);
  EXPECT_LE(tr.size() - 1, 10u);
  EXPECT_LE(std::abs(tr.last()[0] - sin_abs_minimizer()), 1e-3);
  EXPECT_LE(tr.values.back(), f.f_star() + 1e-8);
  for (std::size_t k = 0; k + 1 < tr.size(); ++k) {
    EXPECT_LE(std::abs(tr.iterates[k + 1][0] - tr.iterates[k][0]), cfg.t + 1e-9);
    EXPECT_LE(tr.values[k + 1], tr.values[k]);
  }
  EXPECT_EQ(tr.steps.size(), tr.size() - 1);
}

TEST(Run, SphereOneStep) {
  BpmConfig cfg;
  const Trajectory tr = run_bpm(sphere(1), Geometry::identity(1), v1(0.5), cfg);
  ASSERT_EQ(tr.size(), 2u);
  EXPECT_NEAR(tr.iterates[1][0], 0.0, 1e-9);
  EXPECT_EQ(tr.termination, Termination::reached_optimum);
}

TEST(Run, FivePointDomainPath) {
  BpmConfig cfg;
  const Trajectory tr = run_bpm(five_point_domain(), Geometry::identity(2), v2(3, 0), cfg);
  ASSERT_EQ(tr.size(), 4u);
  EXPECT_EQ(tr.iterates[1], v2(2, 0));
  EXPECT_EQ(tr.iterates[2], v2(1, 0));
  EXPECT_EQ(tr.iterates[3], v2(0, 0));
  EXPECT_EQ(tr.termination, Termination::reached_optimum);
}

TEST(Run, StartAtOptimumTakesNoStep) {
  const Trajectory tr = run_bpm(sphere(2), Geometry::identity(2), v2(0, 0), BpmConfig{});
  EXPECT_EQ(tr.size(), 1u);
  EXPECT_EQ(tr.termination, Termination::reached_optimum);
}

TEST(Run, StuckAtLocalMinimumHitsIterationCap) {
  BpmConfig cfg;
  cfg.t = 0.5;
  cfg.max_iters = 5;
  const Trajectory tr = run_bpm(builtin("isolated_local_min"), Geometry::identity(1), v1(5.2), cfg);
  EXPECT_EQ(tr.termination, Termination::max_iters);
  EXPECT_EQ(tr.size(), 6u);
  EXPECT_NEAR(tr.last()[0], 5.0, 1e-6);
}

TEST(Run, OracleFailureIsRecorded) {
  // Evaluator that gives up beyond x = 2, as an external solver might.
  ObjectiveSpec s;
  s.name = "failing";
  s.dim = 1;
  s.eval = [](const Vector& x) {
    if (x[0] > 2.0) throw OracleError("evaluator gave up");
    return x[0] * x[0];
  };
  s.minimizers.points = {v1(0.0)};
  s.f_star = 0.0;
  s.sample_box = Box{v1(-1), v1(1)};
  const Objective f(s);
  BpmConfig cfg;
  cfg.t = 0.5;
  const Trajectory tr = run_bpm(f, Geometry::identity(1), v1(1.8), cfg);
  EXPECT_EQ(tr.termination, Termination::oracle_failure);
  EXPECT_EQ(tr.size(), 1u);
  EXPECT_NE(tr.failure_reason.find("gave up"), std::string::npos);
  EXPECT_THROW(run_bpm(halfline_quadratic(), Geometry::identity(1), v1(-1.0), cfg), std::invalid_argument);
}

TEST(Run, InvalidConfig) {
  BpmConfig cfg;
  cfg.t = 0.0;
  EXPECT_THROW(run_bpm(sphere(1), Geometry::identity(1), v1(1.0), cfg), std::invalid_argument);
  cfg.t = 1.0;
  cfg.max_iters = 0;
  EXPECT_THROW(run_bpm(sphere(1), Geometry::identity(1), v1(1.0), cfg), std::invalid_argument);
  EXPECT_THROW(run_bpm(sphere(2), Geometry::identity(1), v1(1.0), BpmConfig{}), std::invalid_argument);
}

TEST(Run, Deterministic) {
  BpmConfig cfg;
  cfg.t = 0.7;
  const Trajectory a = run_bpm(builtin("patched_sphere"), Geometry::identity(2), v2(-3, 4), cfg);
  const Trajectory b = run_bpm(builtin("patched_sphere"), Geometry::identity(2), v2(-3, 4), cfg);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(a.iterates[k], b.iterates[k]);
}

TEST(Termination, Names) {
  EXPECT_STREQ(to_string(Termination::reached_optimum), "reached_optimum");
  EXPECT_STREQ(to_string(Termination::max_iters), "max_iters");
  EXPECT_STREQ(to_string(Termination::oracle_failure), "oracle_failure");
}
