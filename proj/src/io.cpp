#include "broxlab/io.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "broxlab/catalog.hpp"

namespace broxlab {

namespace {

Json number(double v) {
  if (std::isfinite(v)) return v;
  return v > 0 ? Json("inf") : v < 0 ? Json("-inf") : Json("nan");
}

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw std::invalid_argument("invalid JSON in '" + path + "': " + e.what());
  }
}

}  // namespace

Json to_json(const Vector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(number(v[i]));
  return a;
}

Geometry geometry_from_json(const Json& j, int dim) {
  if (j.is_string()) {
    if (j.get<std::string>() == "identity") return Geometry::identity(dim);
    throw std::invalid_argument("geometry: unknown shorthand '" + j.get<std::string>() + "'");
  }
  if (j.is_array()) return geometry_from_json(Json{{"X", j}}, dim);
  if (!j.is_object() || !j.contains("X")) throw std::invalid_argument("geometry: expected {\"dim\", \"X\"}");
  const int n = j.value("dim", dim);
  if (n != dim) throw std::invalid_argument("geometry: dimension does not match the objective");
  const Json& x = j.at("X");
  if (x.is_string() && x.get<std::string>() == "identity") return Geometry::identity(n);
  std::vector<double> flat;
  if (x.is_array() && !x.empty() && x.front().is_array()) {
    for (const auto& row : x) {
      for (const auto& v : row) flat.push_back(v.get<double>());
    }
  } else {
    flat = x.get<std::vector<double>>();
  }
  if (flat.size() != static_cast<std::size_t>(n) * n) throw std::invalid_argument("geometry: X must have dim^2 entries");
  Matrix m(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m(r, c) = flat[static_cast<std::size_t>(r) * n + c];
  }
  return Geometry(m);
}

Json geometry_to_json(const Geometry& g) {
  Json x = Json::array();
  for (int r = 0; r < g.dim(); ++r) {
    for (int c = 0; c < g.dim(); ++c) x.push_back(g.matrix()(r, c));
  }
  return Json{{"dim", g.dim()}, {"X", x}};
}

Geometry load_geometry(const std::string& spec, int dim) {
  if (spec.empty() || spec == "identity") return Geometry::identity(dim);
  const auto first = spec.find_first_not_of(" \t\n");
  if (first != std::string::npos && (spec[first] == '{' || spec[first] == '[')) {
    try {
      return geometry_from_json(Json::parse(spec), dim);
    } catch (const Json::exception& e) {
      throw std::invalid_argument(std::string("geometry: ") + e.what());
    }
  }
  return geometry_from_json(read_json_file(spec), dim);
}

Objective finite_objective_from_json(const Json& j, std::string name) {
  if (!j.is_object() || !j.contains("points") || !j.at("points").is_array()) {
    throw std::invalid_argument("objective JSON: expected {\"points\": [...]}");
  }
  std::vector<FinitePoint> pts;
  try {
    for (const auto& p : j.at("points")) {
      const auto x = p.at("x").get<std::vector<double>>();
      pts.push_back({Eigen::Map<const Vector>(x.data(), static_cast<Eigen::Index>(x.size())), p.at("f").get<double>()});
    }
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("objective JSON: ") + e.what());
  }
  if (j.contains("name") && j.at("name").is_string()) name = j.at("name").get<std::string>();
  return finite_objective(std::move(name), std::move(pts));
}

Objective load_objective(const std::string& key_or_path) {
  std::error_code ec;
  const std::filesystem::path p(key_or_path);
  if (p.extension() == ".json" || std::filesystem::is_regular_file(p, ec)) {
    return finite_objective_from_json(read_json_file(key_or_path), p.stem().string());
  }
  return builtin(key_or_path);
}

Vector parse_point(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto b = tok.find_first_not_of(" \t");
    const auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty coordinate in '" + text + "'");
    tok = tok.substr(b, e - b + 1);
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw std::invalid_argument("bad coordinate '" + tok + "'");
    v.push_back(x);
  }
  if (v.empty()) throw std::invalid_argument("empty point");
  return Eigen::Map<const Vector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

Json trajectory_to_json(const Trajectory& tr, const RunInfo& info) {
  Json it = Json::array();
  for (const auto& x : tr.iterates) it.push_back(to_json(x));
  Json vals = Json::array();
  for (const double v : tr.values) vals.push_back(number(v));
  Json dists = Json::array();
  for (const double d : tr.dists) dists.push_back(number(d));
  Json j{{"objective", info.objective},
         {"t", tr.t},
         {"seed", info.seed},
         {"oracle", info.oracle},
         {"opt_tol", tr.opt_tol},
         {"iterates", it},
         {"values", vals},
         {"dists", dists},
         {"iterations", tr.size() - 1},
         {"termination", to_string(tr.termination)},
         {"margins", {{"max_epsilon", tr.max_epsilon()}, {"max_resolution", tr.max_resolution()}}}};
  if (!tr.failure_reason.empty()) j["failure_reason"] = tr.failure_reason;
  if (info.x_star) j["x_star"] = to_json(*info.x_star);
  return j;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& tr) {
  const Eigen::Index d = tr.iterates.empty() ? 1 : tr.iterates.front().size();
  out << "k";
  if (d == 1) {
    out << ",x";
  } else {
    for (Eigen::Index i = 0; i < d; ++i) out << ",x" << (i + 1);
  }
  out << ",f,dist\n";
  for (std::size_t k = 0; k < tr.size(); ++k) {
    out << k;
    for (Eigen::Index i = 0; i < d; ++i) out << ',' << fmt(tr.iterates[k][i]);
    out << ',' << fmt(tr.values[k]) << ',' << fmt(tr.dists[k]) << '\n';
  }
}

void write_landscape_csv(std::ostream& out, const Objective& f, double x0, double x_star, double t, int n) {
  if (f.dim() != 1) throw std::invalid_argument("landscape: objective must be 1-D");
  if (n < 2) throw std::invalid_argument("landscape: need at least 2 samples");
  const double lo = std::min(x_star - 5.0 * t, x0 - t);
  const double hi = std::max(x0 + t, x_star + t);
  out << "x,f\n";
  for (int i = 0; i < n; ++i) {
    const double x = i == n - 1 ? hi : lo + (hi - lo) * i / (n - 1);
    out << fmt(x) << ',' << fmt(f.value(Vector::Constant(1, x))) << '\n';
  }
}

Json report_to_json(const VerificationReport& r) {
  Json w = Json::array();
  for (const auto& x : r.witnesses) {
    Json e{{"x", to_json(x.x)}, {"u", to_json(x.u)}, {"inner", number(x.value)}, {"margin", number(x.margin)}};
    if (x.lambda) e["lambda"] = *x.lambda;
    if (!x.note.empty()) e["note"] = x.note;
    w.push_back(std::move(e));
  }
  Json cfg = Json::object();
  for (const auto& [k, v] : r.config) cfg[k] = number(v);
  Json j{{"check", r.check},
         {"verdict", to_string(r.verdict)},
         {"samples", r.samples},
         {"witnesses", w},
         {"config", cfg},
         {"note", r.note}};
  if (r.certified_minimizer) j["certified_minimizer"] = to_json(*r.certified_minimizer);
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

}  // namespace broxlab
