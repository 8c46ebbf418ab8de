#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace broxlab {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Inner product, norm and balls induced by a symmetric positive definite
/// matrix X:  <u, v>_X = u^T X v,  ||v||_X = sqrt(<v, v>_X).
///
/// Everything is evaluated through the lower Cholesky factor L (X = L L^T),
/// i.e. <u, v>_X = (L^T u) . (L^T v), so norms are nonnegative and the inner
/// product is symmetric bit-for-bit. Immutable after construction.
class Geometry {
 public:
  /// Throws std::invalid_argument if X is not square, not symmetric to 1e-12
  /// (relative), or not positive definite. Asymmetric input is never
  /// symmetrized.
  explicit Geometry(Matrix x);

  static Geometry identity(int dim);

  int dim() const { return static_cast<int>(x_.rows()); }
  const Matrix& matrix() const { return x_; }
  /// Lower-triangular factor L with X = L L^T.
  const Matrix& cholesky() const { return chol_; }
  bool is_identity() const { return identity_; }

  double inner(const Vector& u, const Vector& v) const;
  double norm(const Vector& v) const;
  double squared_norm(const Vector& v) const;
  double distance(const Vector& a, const Vector& b) const;

  /// L^T v: maps the X-ball of radius t onto the Euclidean ball of radius t.
  Vector whiten(const Vector& v) const;
  /// L^{-T} w: inverse of whiten().
  Vector unwhiten(const Vector& w) const;

  /// min_{s in set} ||x - s||_X. Throws on an empty set.
  double dist_to_set(const Vector& x, std::span<const Vector> set) const;

  /// Index of the nearest element of `set` (first one on exact ties).
  std::size_t nearest(const Vector& x, std::span<const Vector> set) const;

 private:
  void check_dim(const Vector& v) const;

  Matrix x_;
  Matrix chol_;
  bool identity_ = false;
};

/// Closed X-ball {z : ||z - center||_X <= radius}.
struct Ball {
  Vector center;
  double radius = 0.0;
  double membership_tol = 1e-10;

  bool contains(const Geometry& g, const Vector& z) const;
  /// X-distance from z to the ball (0 inside).
  double distance(const Geometry& g, const Vector& z) const;
  /// Nearest point of the ball to z (z itself when inside).
  Vector project(const Geometry& g, const Vector& z) const;
};

}  // namespace broxlab
