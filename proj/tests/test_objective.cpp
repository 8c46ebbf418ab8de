#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "broxlab/catalog.hpp"
#include "broxlab/objective.hpp"

using namespace broxlab;

namespace {

Vector v1(double a) { return Vector::Constant(1, a); }
Vector v2(double a, double b) { return (Vector(2) << a, b).finished(); }

Matrix rotation(double a) {
  Matrix r(2, 2);
  r << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
  return r;
}

/// Independent oracle: argmin of a 1-D objective on a uniform grid.
double grid_argmin(const Objective& f, double lo, double hi, double step) {
  double best = kInfinity;
  double at = lo;
  const auto n = static_cast<long>(std::llround((hi - lo) / step));
  Vector x(1);
  for (long i = 0; i <= n; ++i) {
    x[0] = lo + step * static_cast<double>(i);
    const double v = f.value(x);
    if (v < best) {
      best = v;
      at = x[0];
    }
  }
  return at;
}

}  // namespace

TEST(FiniteDiff, SphereGradient) {
  const Vector g = finite_diff_grad(sphere(2), v2(1, 2));
  EXPECT_NEAR(g[0], 2.0, 1e-5);
  EXPECT_NEAR(g[1], 4.0, 1e-5);
}

TEST(FiniteDiff, SinAbsAtThree) {
  EXPECT_NEAR(finite_diff_grad(sin_abs(), v1(3.0))[0], 1.0 + 10.0 * std::cos(3.0), 1e-5);
}

TEST(FiniteDiff, ConstantIsZero) {
  ObjectiveSpec s;
  s.name = "constant";
  s.dim = 3;
  s.eval = [](const Vector&) { return 7.0; };
  s.minimizers.points = {Vector::Zero(3)};
  s.f_star = 7.0;
  const Objective f(s);
  EXPECT_EQ(finite_diff_grad(f, Vector::Ones(3)).norm(), 0.0);
}

TEST(FiniteDiff, StencilLeavingDomainThrows) {
  EXPECT_THROW(finite_diff_grad(halfline_quadratic(), v1(0.0)), DomainError);
}

TEST(Objective, ValidatesDeclaredMinimizers) {
  ObjectiveSpec s;
  s.name = "bad";
  s.dim = 1;
  s.eval = [](const Vector& x) { return x[0] * x[0]; };
  s.minimizers.points = {v1(1.0)};
  s.f_star = 0.0;
  EXPECT_THROW(Objective{s}, std::invalid_argument);
  s.minimizers.points = {v1(0.0)};
  EXPECT_NO_THROW(Objective{s});
  s.dim = 0;
  EXPECT_THROW(Objective{s}, std::invalid_argument);
}

TEST(Objective, OptimalityIsByValue) {
  const Objective f = builtin("example2");
  EXPECT_TRUE(f.is_optimal(v2(0, 0)));
  EXPECT_TRUE(f.is_optimal(v2(2, 1)));
  EXPECT_FALSE(f.is_optimal(v2(2, 1.001)));
  EXPECT_NEAR(f.dist_to_minimizers(Geometry::identity(2), v2(2, 2)), 1.0, 1e-15);
}

TEST(FiniteObjective, OffDomainIsInfinite) {
  const Objective f = five_point_domain();
  EXPECT_EQ(f.value(v2(3, 2)), 0.5);
  EXPECT_EQ(f.value(v2(1, 1)), kInfinity);
  EXPECT_EQ(f.f_star(), 0.0);
  EXPECT_THROW(finite_objective("dup", {{v2(0, 0), 1.0}, {v2(0, 0), 2.0}}), std::invalid_argument);
  EXPECT_THROW(finite_objective("nan", {{v2(0, 0), std::nan("")}}), std::invalid_argument);
}

TEST(ComposeMonotone, ExpOnSphere) {
  const Objective f = compose_monotone(sphere(1), MonotoneMap{[](double v) { return std::exp(v); }, {}, "exp"});
  EXPECT_EQ(f.value(v1(0.0)), 1.0);
  ASSERT_EQ(f.minimizers().points.size(), 1u);
  EXPECT_EQ(f.minimizers().points[0][0], 0.0);
  EXPECT_EQ(f.f_star(), 1.0);
}

TEST(ComposeMonotone, CubicKeepsGridArgmin) {
  const Objective h = sin_abs();
  const Objective f = compose_monotone(h, MonotoneMap{[](double v) { return v * v * v + v; }, {}, "cubic"});
  const double a = grid_argmin(h, -30, 30, 1e-4);
  const double b = grid_argmin(f, -30, 30, 1e-4);
  EXPECT_EQ(a, b);
  EXPECT_NEAR(b, sin_abs_minimizer(), 1e-4);
}

TEST(ComposeMonotone, ScalesFiniteValues) {
  const Objective f = compose_monotone(three_point_domain(), MonotoneMap{[](double v) { return 2 * v; }, {}, "2v"});
  EXPECT_EQ(f.value(v2(0, 0)), 0.0);
  EXPECT_EQ(f.value(v2(2, 0)), 2.0);
  EXPECT_EQ(f.value(v2(2, 1)), 0.2);
}

TEST(ComposeMonotone, RejectsDecreasingMap) {
  EXPECT_THROW(compose_monotone(sphere(1), MonotoneMap{[](double v) { return -v; }, {}, "neg"}),
               std::invalid_argument);
  EXPECT_THROW(compose_monotone(sin_abs(), MonotoneMap{[](double v) { return std::cos(v); }, {}, "cos"}),
               std::invalid_argument);
}

TEST(Pullback, IdentityIsUnchanged) {
  const Objective h = builtin("example2");
  const Geometry g = Geometry::identity(2);
  const Objective f = pullback_orthogonal_affine(h, Matrix::Identity(2, 2), Vector::Zero(2), g);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-4, 4);
  for (int i = 0; i < 100; ++i) {
    const Vector x = v2(u(rng), u(rng));
    EXPECT_EQ(f.value(x), h.value(x));
  }
}

TEST(Pullback, RotationFixesOrigin) {
  const Objective f =
      pullback_orthogonal_affine(sphere(2), rotation(std::numbers::pi / 2), Vector::Zero(2), Geometry::identity(2));
  ASSERT_EQ(f.minimizers().points.size(), 1u);
  EXPECT_LT(f.minimizers().points[0].norm(), 1e-15);
}

TEST(Pullback, RotatedPuncturedQuadratic) {
  const Matrix q = rotation(std::numbers::pi / 4);
  const Vector b = v2(1, 0);
  const Vector a = v2(2, 0);
  const Objective f = pullback_orthogonal_affine(punctured_quadratic(a), q, b, Geometry::identity(2));
  // Preimages computed by hand: Q^{-1} = Q^T.
  const Vector p0 = q.transpose() * (Vector::Zero(2) - b);
  const Vector pa = q.transpose() * (a - b);
  EXPECT_NEAR(f.value(p0), 0.0, 1e-12);
  EXPECT_EQ(f.value(pa), 0.0);
  ASSERT_EQ(f.minimizers().points.size(), 2u);
  EXPECT_LT((f.minimizers().points[0] - p0).norm(), 1e-12);
  EXPECT_LT((f.minimizers().points[1] - pa).norm(), 1e-12);
}

TEST(Pullback, IsometryUnderNonIdentityX) {
  Matrix x(2, 2);
  x << 2.0, 0.5, 0.5, 1.0;
  const Geometry g(x);
  const Matrix l = g.cholesky();
  const Matrix q = l.transpose().inverse() * rotation(0.7) * l.transpose();
  EXPECT_LT((q.transpose() * x * q - x).norm(), 1e-12);
  const Vector b = v2(0.3, -1.0);
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int i = 0; i < 1000; ++i) {
    const Vector y = v2(u(rng), u(rng));
    const Vector z = v2(u(rng), u(rng));
    EXPECT_NEAR(g.distance(q * y + b, q * z + b), g.distance(y, z), 1e-9);
  }
  EXPECT_NO_THROW(pullback_orthogonal_affine(sphere(2), q, b, g));
  EXPECT_THROW(pullback_orthogonal_affine(sphere(2), rotation(0.7), b, g), std::invalid_argument);
}

TEST(AffineValue, Basics) {
  const Objective s = sphere(1);
  const Objective same = affine_value(s, 1.0, 0.0);
  EXPECT_EQ(same.value(v1(1.5)), s.value(v1(1.5)));
  EXPECT_EQ(affine_value(s, 2.0, -1.0).f_star(), -1.0);
  EXPECT_THROW(affine_value(s, 0.0, 1.0), std::invalid_argument);
  EXPECT_THROW(affine_value(s, -2.0, 1.0), std::invalid_argument);
}

TEST(AffineValue, KeepsArgminAndOrder) {
  const Objective h = sin_abs();
  const Objective f = affine_value(h, 3.0, 5.0);
  EXPECT_EQ(grid_argmin(h, -30, 30, 1e-4), grid_argmin(f, -30, 30, 1e-4));
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-30, 30);
  for (int i = 0; i < 1000; ++i) {
    const Vector a = v1(u(rng));
    const Vector b = v1(u(rng));
    EXPECT_EQ(f.value(a) <= f.value(b), h.value(a) <= h.value(b));
  }
}

TEST(PatchToMin, AddsPointMinimizer) {
  PatchSet c;
  c.points = {v2(5, 5)};
  const Objective f = patch_to_min(sphere(2), c, Geometry::identity(2));
  EXPECT_EQ(f.value(v2(5, 5)), 0.0);
  EXPECT_EQ(f.value(v2(5, 5.1)), 5 * 5 + 5.1 * 5.1);
  ASSERT_EQ(f.minimizers().points.size(), 2u);
  EXPECT_TRUE(f.is_optimal(v2(0, 0)));
  EXPECT_TRUE(f.is_optimal(v2(5, 5)));
}

TEST(PatchToMin, EmptySetIsIdentity) {
  const Objective g = sphere(2);
  const Objective f = patch_to_min(g, PatchSet{}, Geometry::identity(2));
  EXPECT_EQ(f.value(v2(1, 2)), g.value(v2(1, 2)));
  EXPECT_EQ(f.minimizers().points.size(), 1u);
}

TEST(PatchToMin, RejectsOverlapWithMinimizers) {
  PatchSet c;
  c.points = {v2(0, 0)};
  EXPECT_THROW(patch_to_min(sphere(2), c, Geometry::identity(2)), std::invalid_argument);
  PatchSet b;
  b.balls = {Ball{v2(0.5, 0), 1.0}};
  EXPECT_THROW(patch_to_min(sphere(2), b, Geometry::identity(2)), std::invalid_argument);
}

TEST(PatchToMin, BallPatchAndLowerSemicontinuity) {
  PatchSet c;
  c.balls = {Ball{v2(3, 0), 0.5}};
  const Objective f = patch_to_min(sphere(2), c, Geometry::identity(2));
  EXPECT_EQ(f.value(v2(3.2, 0.1)), 0.0);
  // Approaching C from outside: liminf f >= g_inf = 0.
  for (int k = 1; k < 30; ++k) {
    const double r = 0.5 + std::pow(0.5, k);
    EXPECT_GE(f.value(v2(3 + r, 0)), 0.0);
  }
  const Objective p = patch_to_min(sphere(1), PatchSet{{v1(3.0)}, {}}, Geometry::identity(1));
  for (int k = 1; k < 40; ++k) EXPECT_GE(p.value(v1(3.0 + std::pow(0.5, k))), p.f_star());
}

TEST(Objective, GradientConsistencyOnSmoothEntries) {
  std::mt19937_64 rng(8);
  for (const char* key : {"sphere1", "sphere2", "sphere3", "strictly_quasiconvex_1d", "quasar_demo"}) {
    const Objective f = builtin(key);
    ASSERT_TRUE(f.smooth()) << key;
    for (int i = 0; i < 100; ++i) {
      Vector x(f.dim());
      for (int j = 0; j < f.dim(); ++j) {
        x[j] = std::uniform_real_distribution<double>(f.sample_box().lo[j], f.sample_box().hi[j])(rng);
      }
      const Vector ga = f.gradient(x);
      const Vector gf = finite_diff_grad(f, x);
      EXPECT_LE((ga - gf).norm(), 1e-4 * std::max(1.0, ga.norm())) << key;
    }
  }
}
