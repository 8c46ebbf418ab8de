#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "broxlab/catalog.hpp"
#include "broxlab/verify.hpp"

using namespace broxlab;

namespace {

Vector v1(double a) { return Vector::Constant(1, a); }
Vector v2(double a, double b) { return (Vector(2) << a, b).finished(); }

Objective one_d(std::string name, std::function<double(double)> f, std::function<double(double)> df,
                std::vector<double> mins, double f_star, bool smooth) {
  ObjectiveSpec s;
  s.name = std::move(name);
  s.dim = 1;
  s.eval = [f](const Vector& x) { return f(x[0]); };
  if (df) s.grad = [df](const Vector& x) -> Vector { return Vector::Constant(1, df(x[0])); };
  for (double m : mins) s.minimizers.points.push_back(v1(m));
  s.f_star = f_star;
  s.smooth = smooth;
  s.sample_box = Box{v1(-5), v1(5)};
  return Objective(s);
}

Objective abs_fn() {
  return one_d("abs", [](double x) { return std::abs(x); }, {}, {0.0}, 0.0, false);
}

Objective constant_fn() {
  return one_d("constant", [](double) { return 2.0; }, [](double) { return 0.0; }, {0.0}, 2.0, true);
}

Sampler sampler(std::size_t count, std::uint64_t seed = 1) {
  Sampler s;
  s.count = count;
  s.seed = seed;
  return s;
}

/// Independent replay of a witness: the inner product from its coordinates.
double replay_inner(const Witness& w, const Vector& x_star) { return (w.x - w.u).dot(x_star - w.u); }

}  // namespace

// ---- assumption1 ------------------------------------------------------------

TEST(Assumption1, FivePointDomainPassesAtOne) {
  const auto r = check_assumption1(five_point_domain(), Geometry::identity(2), 1.0, v2(0, 0), Sampler{});
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.config.at("tested"), 3.0);
}

TEST(Assumption1, FivePointDomainFailsAtTwo) {
  const auto r = check_assumption1(five_point_domain(), Geometry::identity(2), 2.0, v2(0, 0), Sampler{});
  ASSERT_TRUE(r.failed());
  ASSERT_FALSE(r.witnesses.empty());
  const Witness& w = r.witnesses.front();
  EXPECT_EQ(w.x, v2(3, 0));
  EXPECT_EQ(w.u, v2(3, 2));
  // With the other sign convention, <x - u, u - x*> = -4.
  EXPECT_EQ(-replay_inner(w, v2(0, 0)), -4.0);
  EXPECT_EQ(alignment_inner(five_point_domain(), Geometry::identity(2), v2(3, 0), 2.0, v2(0, 0)), -4.0);
}

TEST(Assumption1, PuncturedQuadraticFarPoints) {
  const Objective f = builtin("example2");
  const auto r = check_assumption1(f, Geometry::identity(2), 0.5, v2(0, 0), sampler(300));
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.config.at("tested"), 0.0);
  // Closed form <x - u, u - 0> = t(||x|| - t) for u = x - t x/||x||.
  const Vector x = v2(-3, 1);
  const double t = 0.5;
  const Vector u = x - t * x / x.norm();
  EXPECT_NEAR((x - u).dot(u), t * (x.norm() - t), 1e-12);
}

TEST(Assumption1, SinAbsAtTwoPi) {
  const auto r = check_assumption1(sin_abs(), Geometry::identity(1), 2 * std::numbers::pi,
                                   v1(sin_abs_minimizer()), sampler(300));
  EXPECT_TRUE(r.passed());
}

TEST(Assumption1, WitnessesReplay) {
  const Objective f = builtin("isolated_local_min");
  const auto r = check_assumption1(f, Geometry::identity(1), 0.5, v1(0.0), sampler(300));
  ASSERT_TRUE(r.failed());
  for (const auto& w : r.witnesses) {
    EXPECT_GT(replay_inner(w, v1(0.0)), 0.0);
    EXPECT_GT(w.margin, 0.0);
    EXPECT_LE(std::abs(w.x[0] - w.u[0]), 0.5 + 1e-9);
  }
}

// ---- assumption2 ------------------------------------------------------------

TEST(Assumption2, SinAbsAtTwoPi) {
  CheckOptions o;
  o.chain_depth = 2;
  EXPECT_TRUE(check_assumption2(sin_abs(), Geometry::identity(1), 2 * std::numbers::pi, sampler(100), o).passed());
}

TEST(Assumption2, IsolatedLocalMinimumFails) {
  const auto r = check_assumption2(builtin("isolated_local_min"), Geometry::identity(1), 0.5, sampler(200));
  ASSERT_TRUE(r.failed());
  bool near_c = false;
  for (const auto& w : r.witnesses) near_c = near_c || std::abs(w.x[0] - 5.0) < 1e-3;
  EXPECT_TRUE(near_c);
}

TEST(Assumption2, OptimalPointsAreExempt) {
  Sampler s;
  s.explicit_points = {v1(0.0)};
  s.include_special_points = false;
  const auto r = check_assumption2(sphere(1), Geometry::identity(1), 1.0, s);
  EXPECT_TRUE(r.passed());
}

TEST(Alignment, PatchedSphereStillAligned) {
  PatchSet c;
  c.points = {v1(3.0)};
  const Objective f = patch_to_min(sphere(1), c, Geometry::identity(1));
  CheckOptions o;
  o.chain_depth = 2;
  EXPECT_TRUE(check_assumption1(f, Geometry::identity(1), 0.5, std::nullopt, sampler(300), o).passed());
  EXPECT_TRUE(check_assumption2(f, Geometry::identity(1), 0.5, sampler(300), o).passed());
}

// ---- generalized convexity -----------------------------------------------------

TEST(Quasiconvex, AbsoluteValueStrict) {
  EXPECT_TRUE(check_quasiconvex(abs_fn(), true, sampler(500)).passed());
}

TEST(Quasiconvex, SinAbsFails) {
  const auto r = check_quasiconvex(sin_abs(), false, sampler(500));
  ASSERT_TRUE(r.failed());
  const Objective f = sin_abs();
  for (const auto& w : r.witnesses) {
    ASSERT_TRUE(w.lambda.has_value());
    const Vector z = (1 - *w.lambda) * w.x + *w.lambda * w.u;
    EXPECT_GT(f.value(z), std::max(f.value(w.x), f.value(w.u)));
  }
}

TEST(Quasiconvex, ConstantIsNotStrict) {
  EXPECT_TRUE(check_quasiconvex(constant_fn(), false, sampler(200)).passed());
  EXPECT_TRUE(check_quasiconvex(constant_fn(), true, sampler(200)).failed());
}

TEST(Pseudoconvex, Sphere) { EXPECT_TRUE(check_pseudoconvex(sphere(2), sampler(500)).passed()); }

TEST(Pseudoconvex, SinAbsFails) { EXPECT_TRUE(check_pseudoconvex(sin_abs(), sampler(500)).failed()); }

TEST(Pseudoconvex, CubeAtOrigin) {
  ObjectiveSpec s;
  s.name = "cube";
  s.dim = 1;
  s.eval = [](const Vector& x) { return x[0] * x[0] * x[0]; };
  s.grad = [](const Vector& x) -> Vector { return Vector::Constant(1, 3 * x[0] * x[0]); };
  s.probes = {v1(0.0)};
  s.smooth = true;
  const Objective f(s);
  Sampler smp;
  smp.explicit_points = {v1(-1.0)};
  const auto r = check_pseudoconvex(f, smp);
  ASSERT_TRUE(r.failed());
  bool found = false;
  for (const auto& w : r.witnesses) found = found || (w.x == v1(0.0) && w.u == v1(-1.0));
  EXPECT_TRUE(found);
}

TEST(Quasar, SphereZetaOne) { EXPECT_TRUE(check_quasar(sphere(1), 1.0, v1(0.0), sampler(500)).passed()); }

TEST(Quasar, SinAbsFails) {
  EXPECT_TRUE(check_quasar(sin_abs(), 1.0, v1(sin_abs_minimizer()), sampler(500)).failed());
}

TEST(Quasar, ZetaOutOfRange) {
  EXPECT_THROW(check_quasar(sphere(1), 2.0, v1(0.0), sampler(10)), std::invalid_argument);
  EXPECT_THROW(check_quasar(sphere(1), 0.0, v1(0.0), sampler(10)), std::invalid_argument);
}

TEST(Quasar, DemoFunctionIsQuasarButNotConvexLike) {
  EXPECT_TRUE(check_quasar(quasar_demo(), 0.4, std::nullopt, sampler(1000)).passed());
  EXPECT_TRUE(check_quasar(quasar_demo(), 1.0, std::nullopt, sampler(1000)).failed());
}

TEST(Aiming, SphereThetaTwo) { EXPECT_TRUE(check_aiming(sphere(2), 2.0, sampler(500)).passed()); }

TEST(Aiming, SphereThetaTwoAndAHalf) {
  const auto r = check_aiming(sphere(2), 2.5, sampler(500));
  ASSERT_TRUE(r.failed());
  for (const auto& w : r.witnesses) EXPECT_GT(w.x.norm(), 0.0);
}

TEST(Aiming, RequiresZeroMinimum) {
  EXPECT_THROW(check_aiming(affine_value(sphere(2), 1.0, 1.0), 2.0, sampler(10)), std::invalid_argument);
}

TEST(Differentiability, KinkIsDetected) {
  EXPECT_TRUE(differentiability_violation(abs_fn(), v1(0.0), 3).has_value());
  EXPECT_FALSE(differentiability_violation(sphere(1), v1(0.3), 3).has_value());
  EXPECT_TRUE(differentiability_violation(halfline_quadratic(), v1(-1.0), 3).has_value());
}

// ---- uniform alignment and radius monotonicity -----------------------------------

TEST(Uba, TrivialDiagonal) {
  // x = z gives <x - z, x* - z> = 0, never a violation.
  Sampler s;
  s.explicit_points = {v1(3.0)};
  s.include_special_points = false;
  EXPECT_TRUE(check_uba(halfline_quadratic(), Geometry::identity(1), 1.0, v1(0.0), s).passed());
}

TEST(Uba, FivePointDomainFailsAtTwo) {
  const auto r = check_uba(five_point_domain(), Geometry::identity(2), 2.0, v2(0, 0), Sampler{});
  ASSERT_TRUE(r.failed());
  bool found = false;
  for (const auto& w : r.witnesses) found = found || (w.x == v2(3, 0) && w.u == v2(3, 2));
  EXPECT_TRUE(found);
}

TEST(Uba, SphereOneFailsAcrossTheMinimizer) {
  // x = 5, z = -1: f(z) <= f(x) and <x - z, 0 - z> = 6 > 0.
  Sampler s;
  s.explicit_points = {v1(5.0), v1(-1.0)};
  s.include_special_points = false;
  const auto r = check_uba(sphere(1), Geometry::identity(1), 1.0, v1(0.0), s);
  ASSERT_TRUE(r.failed());
  EXPECT_EQ(replay_inner(r.witnesses.front(), v1(0.0)), 6.0);
}

TEST(F2Monotonicity, EqualRadiiPass) {
  EXPECT_TRUE(check_F2_monotonicity(builtin("isolated_local_min"), Geometry::identity(1), 1.0, 1.0, sampler(100))
                  .passed());
}

TEST(F2Monotonicity, SinAbsLargeRadii) {
  CheckOptions o;
  o.chain_depth = 1;
  const auto r = check_F2_monotonicity(sin_abs(), Geometry::identity(1), 2 * std::numbers::pi,
                                       4 * std::numbers::pi, sampler(100), o);
  EXPECT_TRUE(r.passed());
}

TEST(F2Monotonicity, IsolatedMinimumSmallThenLarge) {
  CheckOptions o;
  o.chain_depth = 1;
  const Objective f = builtin("isolated_local_min");
  const auto r = check_F2_monotonicity(f, Geometry::identity(1), 0.5, 5.0, sampler(200), o);
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.config.at("assumption2_violations_t1"), 0.0);
  EXPECT_EQ(r.config.at("assumption2_violations_t2"), 0.0);
}

TEST(UbaMonotonicity, FiniteDomains) {
  const Geometry g = Geometry::identity(2);
  EXPECT_TRUE(check_uba_monotonicity(five_point_domain(), g, 1.0, 3.0, Sampler{}).passed());
  EXPECT_TRUE(check_uba_monotonicity(three_point_domain(), g, 1.0, 2.0, Sampler{}).passed());
}

TEST(F1Witnesses, ExactReplay) {
  const auto r = check_F1_nonmonotone_witnesses();
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.config.at("inner_ex1_t1_x(2,0)"), 1.0);
  EXPECT_EQ(r.config.at("inner_ex1_t1_x(3,0)"), 2.0);
  EXPECT_EQ(r.config.at("inner_ex1_t1_x(3,2)"), 0.0);
  EXPECT_EQ(r.config.at("inner_ex1_t2_x(3,0)"), -4.0);
  EXPECT_EQ(r.config.at("inner_ex2_t1_x(2,0)"), -1.0);
  EXPECT_EQ(r.config.at("ex1_in_F1(1)"), 1.0);
  EXPECT_EQ(r.config.at("ex1_in_F1(2)"), 0.0);
  EXPECT_EQ(r.config.at("ex2_in_F1(1)"), 0.0);
  EXPECT_EQ(r.config.at("ex2_in_F1(3)"), 1.0);
}

TEST(F1Witnesses, VacuousAtThree) {
  const auto r = check_assumption1(three_point_domain(), Geometry::identity(2), 3.0, v2(0, 0), Sampler{});
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.config.at("tested"), 0.0);
}

// ---- stationarity, point pairs, gradients -------------------------------------------

TEST(NormalCone, SphereBoundary) {
  const auto r = check_normal_cone_stationarity(sphere(1), Geometry::identity(1), v1(5.0), 1.0);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.config.at("boundary"), 1.0);
  EXPECT_NEAR(r.config.at("c"), 8.0, 1e-5);
}

TEST(NormalCone, SphereInterior) {
  const auto r = check_normal_cone_stationarity(sphere(2), Geometry::identity(2), v2(0.1, -0.2), 3.0);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.config.at("boundary"), 0.0);
}

TEST(NormalCone, SinAbsBoundaryStep) {
  const auto r = check_normal_cone_stationarity(sin_abs(), Geometry::identity(1), v1(20.0), 2 * std::numbers::pi);
  EXPECT_TRUE(r.passed());
}

TEST(TwoPointCycle, FiniteDomains) {
  EXPECT_TRUE(check_two_point_cycle(five_point_domain(), Geometry::identity(2), 1.0).passed());
  EXPECT_TRUE(check_two_point_cycle(three_point_domain(), Geometry::identity(2), 3.0).passed());
}

TEST(Gradients, AnalyticMatchesFiniteDifferences) {
  EXPECT_TRUE(check_gradient_consistency(sphere(3), sampler(100)).passed());
  EXPECT_TRUE(check_gradient_consistency(quasar_demo(), sampler(100)).passed());
}

TEST(Gradients, WrongGradientIsCaught) {
  const Objective f = one_d("wrong", [](double x) { return x * x; }, [](double x) { return 3 * x; }, {0.0}, 0.0, true);
  EXPECT_TRUE(check_gradient_consistency(f, sampler(50)).failed());
}

TEST(Hausdorff, FiniteSets) {
  const Geometry g = Geometry::identity(2);
  EXPECT_EQ(hausdorff(g, {v2(0, 0)}, {v2(0, 0)}), 0.0);
  EXPECT_EQ(hausdorff(g, {v2(0, 0), v2(3, 4)}, {v2(0, 0)}), 5.0);
}

TEST(ClassParams, Validation) {
  EXPECT_NO_THROW((ClassParams{1.0, 1.0, 1.0}.validate()));
  EXPECT_THROW((ClassParams{1.5, 1.0, 1.0}.validate()), std::invalid_argument);
  EXPECT_THROW((ClassParams{0.5, 0.0, 1.0}.validate()), std::invalid_argument);
  EXPECT_THROW((ClassParams{0.5, 1.0, -1.0}.validate()), std::invalid_argument);
}

TEST(Verdict, Names) {
  EXPECT_STREQ(to_string(Verdict::pass), "pass");
  EXPECT_STREQ(to_string(Verdict::fail), "fail");
  EXPECT_STREQ(to_string(Verdict::inconclusive), "inconclusive");
}
