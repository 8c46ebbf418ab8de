#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "broxlab/objective.hpp"

namespace broxlab {

/// Portable deterministic generator: mt19937_64 with explicit conversion to
/// doubles (std::uniform_real_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Radical inverse of i in the given base (one Halton coordinate).
double radical_inverse(std::uint64_t i, unsigned base);

/// Point source for the verification checks. Continuous objectives get
/// `count` uniform points in the box (the objective's own sample_box when
/// unset) preceded by the objective's special points; finite-domain
/// objectives are enumerated exhaustively. An explicit point list replaces
/// the random part.
struct Sampler {
  std::size_t count = 1000;
  std::uint64_t seed = 0;
  std::optional<Box> box;
  bool include_special_points = true;
  std::vector<Vector> explicit_points;

  std::vector<Vector> points(const Objective& f) const;
  Box effective_box(const Objective& f) const;
};

}  // namespace broxlab
