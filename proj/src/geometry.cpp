#include "broxlab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace broxlab {

Geometry::Geometry(Matrix x) : x_(std::move(x)) {
  if (x_.rows() == 0 || x_.rows() != x_.cols()) {
    throw std::invalid_argument("geometry: X must be a non-empty square matrix");
  }
  const double scale = std::max(1.0, x_.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < x_.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < x_.cols(); ++j) {
      if (std::abs(x_(i, j) - x_(j, i)) > 1e-12 * scale) {
        throw std::invalid_argument("geometry: X is not symmetric at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
      }
    }
  }
  // Only the lower triangle is read by the factorization.
  Eigen::LLT<Matrix> llt(x_);
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument("geometry: X is not positive definite");
  }
  chol_ = llt.matrixL();
  for (Eigen::Index i = 0; i < chol_.rows(); ++i) {
    if (!(chol_(i, i) > 0.0)) {
      throw std::invalid_argument("geometry: X is not positive definite");
    }
  }
  identity_ = x_.isIdentity(0.0);
}

Geometry Geometry::identity(int dim) {
  if (dim <= 0) throw std::invalid_argument("geometry: dimension must be positive");
  return Geometry(Matrix::Identity(dim, dim));
}

void Geometry::check_dim(const Vector& v) const {
  if (v.size() != x_.rows()) {
    throw std::invalid_argument("geometry: dimension mismatch (expected " +
                                std::to_string(x_.rows()) + ", got " + std::to_string(v.size()) +
                                ")");
  }
}

Vector Geometry::whiten(const Vector& v) const {
  check_dim(v);
  if (identity_) return v;
  return chol_.transpose().triangularView<Eigen::Upper>() * v;
}

Vector Geometry::unwhiten(const Vector& w) const {
  check_dim(w);
  if (identity_) return w;
  return chol_.transpose().triangularView<Eigen::Upper>().solve(w);
}

double Geometry::inner(const Vector& u, const Vector& v) const {
  return whiten(u).dot(whiten(v));
}

double Geometry::squared_norm(const Vector& v) const { return whiten(v).squaredNorm(); }

double Geometry::norm(const Vector& v) const { return whiten(v).norm(); }

double Geometry::distance(const Vector& a, const Vector& b) const {
  check_dim(a);
  return norm(a - b);
}

double Geometry::dist_to_set(const Vector& x, std::span<const Vector> set) const {
  if (set.empty()) throw std::invalid_argument("dist_to_set: empty set");
  return distance(x, set[nearest(x, set)]);
}

std::size_t Geometry::nearest(const Vector& x, std::span<const Vector> set) const {
  if (set.empty()) throw std::invalid_argument("nearest: empty set");
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < set.size(); ++i) {
    const double d = distance(x, set[i]);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

bool Ball::contains(const Geometry& g, const Vector& z) const {
  return g.distance(z, center) <= radius + membership_tol;
}

double Ball::distance(const Geometry& g, const Vector& z) const {
  return std::max(0.0, g.distance(z, center) - radius);
}

Vector Ball::project(const Geometry& g, const Vector& z) const {
  const double d = g.distance(z, center);
  if (d <= radius) return z;
  return center + (radius / d) * (z - center);
}

}  // namespace broxlab
