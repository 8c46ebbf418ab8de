#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "broxlab/objective.hpp"

namespace broxlab {

/// Global minimizer of |x| + 10 sin(x): the root of 10 cos(x) = 1 in the
/// first negative well, x = -acos(0.1). Certified against a dense grid over
/// [-30, 30] in the test suite.
double sin_abs_minimizer();

struct CatalogEntry {
  std::string key;
  std::string description;
  /// Membership in the broximal-aligned class is claimed for these radii
  /// (empty: every t > 0; negative entry: t >= |value|).
  std::string ba_radii;
};

/// Keys understood by builtin(). Parameterised keys take a parenthesised,
/// comma-separated argument list, e.g. "sphere(3)" or
/// "example2_punctured_quadratic(9,9)".
std::vector<CatalogEntry> catalog();

/// Throws CatalogError for unknown keys or bad arguments.
Objective builtin(std::string_view key);

Objective sphere(int dim);
Objective sin_abs();
Objective punctured_quadratic(const Vector& a);
Objective five_point_domain();
Objective three_point_domain();
Objective log_bowl();
Objective quasar_demo();
Objective halfline_quadratic();
Objective isolated_local_min(const Vector& c);

}  // namespace broxlab
