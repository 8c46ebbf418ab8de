#include "broxlab/sampler.hpp"

#include <stdexcept>

namespace broxlab {

double radical_inverse(std::uint64_t i, unsigned base) {
  double inv = 1.0 / base;
  double f = inv;
  double r = 0.0;
  while (i > 0) {
    r += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return r;
}

Box Sampler::effective_box(const Objective& f) const {
  if (box) return *box;
  const Box& b = f.sample_box();
  if (b.lo.size() == f.dim() && b.hi.size() == f.dim()) return b;
  return Box{Vector::Constant(f.dim(), -5.0), Vector::Constant(f.dim(), 5.0)};
}

std::vector<Vector> Sampler::points(const Objective& f) const {
  std::vector<Vector> out;
  if (f.is_finite_domain()) {
    for (const auto& p : f.finite_points()) out.push_back(p.x);
    return out;
  }
  if (include_special_points) out = f.special_points();
  if (!explicit_points.empty()) {
    out.insert(out.end(), explicit_points.begin(), explicit_points.end());
    return out;
  }
  const Box b = effective_box(f);
  if (b.lo.size() != f.dim() || b.hi.size() != f.dim()) {
    throw std::invalid_argument("sampler: box dimension does not match objective");
  }
  Rng rng(seed);
  out.reserve(out.size() + count);
  for (std::size_t k = 0; k < count; ++k) {
    Vector p(f.dim());
    for (int i = 0; i < f.dim(); ++i) p[i] = rng.uniform(b.lo[i], b.hi[i]);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace broxlab
