#include "broxlab/catalog.hpp"

#include <charconv>
#include <cmath>
#include <string>

namespace broxlab {

namespace {

Vector scalar(double v) { return Vector::Constant(1, v); }

Box cube(int dim, double half) {
  return Box{Vector::Constant(dim, -half), Vector::Constant(dim, half)};
}

struct ParsedKey {
  std::string name;
  std::vector<double> args;
  bool has_args = false;
};

ParsedKey parse_key(std::string_view key) {
  ParsedKey out;
  const auto open = key.find('(');
  if (open == std::string_view::npos) {
    out.name = std::string(key);
    return out;
  }
  if (key.back() != ')') throw CatalogError("catalog: malformed key '" + std::string(key) + "'");
  out.name = std::string(key.substr(0, open));
  out.has_args = true;
  std::string_view body = key.substr(open + 1, key.size() - open - 2);
  while (!body.empty()) {
    const auto comma = body.find(',');
    std::string token(body.substr(0, comma));
    try {
      std::size_t used = 0;
      out.args.push_back(std::stod(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw CatalogError("catalog: bad argument '" + token + "' in '" + std::string(key) + "'");
    }
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return out;
}

Vector to_vector(const std::vector<double>& v) {
  return Eigen::Map<const Vector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

}  // namespace

double sin_abs_minimizer() { return -std::acos(0.1); }

Objective sphere(int dim) {
  if (dim <= 0) throw CatalogError("sphere: dimension must be positive");
  ObjectiveSpec s;
  s.name = "sphere(" + std::to_string(dim) + ")";
  s.dim = dim;
  s.eval = [](const Vector& x) { return x.squaredNorm(); };
  s.grad = [](const Vector& x) -> Vector { return 2.0 * x; };
  s.minimizers.points = {Vector::Zero(dim)};
  s.f_star = 0.0;
  s.smooth = true;
  s.sample_box = cube(dim, 5.0);
  return Objective(std::move(s));
}

Objective sin_abs() {
  ObjectiveSpec s;
  s.name = "example1_sin_abs";
  s.dim = 1;
  s.eval = [](const Vector& x) { return std::abs(x[0]) + 10.0 * std::sin(x[0]); };
  // One-sided choice at the kink x = 0.
  s.grad = [](const Vector& x) -> Vector {
    const double sign = x[0] < 0.0 ? -1.0 : 1.0;
    return scalar(sign + 10.0 * std::cos(x[0]));
  };
  const double xs = sin_abs_minimizer();
  s.minimizers.points = {scalar(xs)};
  s.f_star = std::abs(xs) + 10.0 * std::sin(xs);
  s.smooth = false;
  s.sample_box = cube(1, 40.0);
  return Objective(std::move(s));
}

Objective punctured_quadratic(const Vector& a) {
  if (a.size() == 0 || a.isZero(0.0)) throw CatalogError("example2: a must be nonzero");
  const int dim = static_cast<int>(a.size());
  ObjectiveSpec s;
  s.name = "example2_punctured_quadratic";
  s.dim = dim;
  s.eval = [a](const Vector& x) { return same_point(x, a) ? 0.0 : x.squaredNorm(); };
  s.grad = [](const Vector& x) -> Vector { return 2.0 * x; };
  s.minimizers.points = {Vector::Zero(dim), a};
  s.probes = {a};
  s.f_star = 0.0;
  s.smooth = false;
  s.sample_box = cube(dim, std::max(4.0, 2.0 * a.cwiseAbs().maxCoeff()));
  return Objective(std::move(s));
}

Objective five_point_domain() {
  auto p = [](double x, double y) { return (Vector(2) << x, y).finished(); };
  return finite_objective("appD_F1_ex1", {{p(0, 0), 0.0},
                                          {p(1, 0), 1.0},
                                          {p(2, 0), 2.0},
                                          {p(3, 0), 3.0},
                                          {p(3, 2), 0.5}});
}

Objective three_point_domain() {
  auto p = [](double x, double y) { return (Vector(2) << x, y).finished(); };
  return finite_objective("appD_F1_ex2", {{p(0, 0), 0.0}, {p(2, 0), 1.0}, {p(2, 1), 0.1}});
}

Objective log_bowl() {
  // log(1 + (x - 1)^2): strictly quasiconvex and pseudoconvex, concave for
  // |x - 1| > 1. Quasar convex only on bounded windows (the admissible zeta
  // shrinks as the window grows).
  ObjectiveSpec s;
  s.name = "strictly_quasiconvex_1d";
  s.dim = 1;
  s.eval = [](const Vector& x) {
    const double u = x[0] - 1.0;
    return std::log1p(u * u);
  };
  s.grad = [](const Vector& x) -> Vector {
    const double u = x[0] - 1.0;
    return scalar(2.0 * u / (1.0 + u * u));
  };
  s.minimizers.points = {scalar(1.0)};
  s.f_star = 0.0;
  s.smooth = true;
  s.sample_box = cube(1, 10.0);
  return Objective(std::move(s));
}

Objective quasar_demo() {
  // x^2 + 3 sin^2 x: non-convex, quasar convex about 0 with zeta ~ 0.49.
  ObjectiveSpec s;
  s.name = "quasar_demo";
  s.dim = 1;
  s.eval = [](const Vector& x) {
    const double sn = std::sin(x[0]);
    return x[0] * x[0] + 3.0 * sn * sn;
  };
  s.grad = [](const Vector& x) -> Vector { return scalar(2.0 * x[0] + 3.0 * std::sin(2.0 * x[0])); };
  s.minimizers.points = {scalar(0.0)};
  s.f_star = 0.0;
  s.smooth = true;
  s.sample_box = cube(1, 8.0);
  return Objective(std::move(s));
}

Objective halfline_quadratic() {
  ObjectiveSpec s;
  s.name = "halfline_quadratic";
  s.dim = 1;
  s.eval = [](const Vector& x) { return x[0] >= 0.0 ? x[0] * x[0] : kInfinity; };
  s.grad = [](const Vector& x) -> Vector { return scalar(2.0 * x[0]); };
  s.minimizers.points = {scalar(0.0)};
  s.f_star = 0.0;
  s.smooth = false;
  s.sample_box = Box{scalar(-2.0), scalar(10.0)};
  return Objective(std::move(s));
}

Objective isolated_local_min(const Vector& c) {
  if (c.size() == 0) throw CatalogError("isolated_local_min: empty center");
  if (c.squaredNorm() <= 1.0) throw CatalogError("isolated_local_min: need ||c|| > 1");
  const int dim = static_cast<int>(c.size());
  ObjectiveSpec s;
  s.name = "isolated_local_min";
  s.dim = dim;
  s.eval = [c](const Vector& x) { return std::min(x.squaredNorm(), (x - c).squaredNorm() + 1.0); };
  s.grad = [c](const Vector& x) -> Vector {
    return x.squaredNorm() <= (x - c).squaredNorm() + 1.0 ? Vector(2.0 * x) : Vector(2.0 * (x - c));
  };
  s.minimizers.points = {Vector::Zero(dim)};
  s.f_star = 0.0;
  s.smooth = false;
  s.sample_box = cube(dim, std::max(5.0, 1.5 * c.cwiseAbs().maxCoeff()));
  return Objective(std::move(s));
}

std::vector<CatalogEntry> catalog() {
  return {
      {"example1_sin_abs", "|x| + 10 sin(x), local minima every 2pi", "t >= 2pi"},
      {"example2_punctured_quadratic(a...)", "||x||^2 with f(a) = 0; X_f = {0, a}; default a = (2,1)",
       "all t"},
      {"appD_F1_ex1", "five-point domain in R^2, in F1(1) but not F1(2)", "-"},
      {"appD_F1_ex2", "three-point domain in R^2, in F1(3) but not F1(1)", "-"},
      {"sphere(d)", "||x||^2 in R^d (aliases sphere1, sphere2, sphere3)", "all t"},
      {"strictly_quasiconvex_1d", "log(1 + (x-1)^2)", "all t"},
      {"quasar_demo", "x^2 + 3 sin^2 x (0.4-quasar convex, non-convex)", "all t"},
      {"halfline_quadratic", "x^2 on [0, inf), +inf elsewhere", "all t"},
      {"isolated_local_min(c...)", "min(||x||^2, ||x-c||^2 + 1); default c = 5 (1-D)", "t >= ||c|| - 1"},
      {"patched_sphere", "sphere(2) patched to its minimum at C = {(2,2)}", "all t"},
  };
}

Objective builtin(std::string_view key) {
  const ParsedKey k = parse_key(key);
  const auto& n = k.name;
  auto no_args = [&] {
    if (k.has_args) throw CatalogError("catalog: '" + n + "' takes no arguments");
  };
  if (n == "example1_sin_abs" || n == "example1") {
    no_args();
    return sin_abs();
  }
  if (n == "example2_punctured_quadratic" || n == "example2") {
    if (!k.has_args) return punctured_quadratic((Vector(2) << 2.0, 1.0).finished());
    return punctured_quadratic(to_vector(k.args));
  }
  if (n == "appD_F1_ex1") {
    no_args();
    return five_point_domain();
  }
  if (n == "appD_F1_ex2") {
    no_args();
    return three_point_domain();
  }
  if (n == "sphere") {
    if (!k.has_args) return sphere(2);
    if (k.args.size() != 1 || k.args[0] != std::floor(k.args[0]) || k.args[0] < 1) {
      throw CatalogError("catalog: sphere(d) needs one positive integer");
    }
    return sphere(static_cast<int>(k.args[0]));
  }
  if (n.rfind("sphere", 0) == 0 && n.size() > 6 && !k.has_args) {
    int d = 0;
    const auto* first = n.data() + 6;
    const auto* last = n.data() + n.size();
    auto [ptr, ec] = std::from_chars(first, last, d);
    if (ec == std::errc() && ptr == last && d > 0) return sphere(d);
  }
  if (n == "strictly_quasiconvex_1d") {
    no_args();
    return log_bowl();
  }
  if (n == "quasar_demo") {
    no_args();
    return quasar_demo();
  }
  if (n == "halfline_quadratic") {
    no_args();
    return halfline_quadratic();
  }
  if (n == "isolated_local_min") {
    if (!k.has_args) return isolated_local_min(Vector::Constant(1, 5.0));
    return isolated_local_min(to_vector(k.args));
  }
  if (n == "patched_sphere") {
    no_args();
    PatchSet c;
    c.points.push_back((Vector(2) << 2.0, 2.0).finished());
    return patch_to_min(sphere(2), c, Geometry::identity(2));
  }
  throw CatalogError("catalog: unknown objective '" + std::string(key) + "'");
}

}  // namespace broxlab
