#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "broxlab/bpm.hpp"
#include "broxlab/geometry.hpp"
#include "broxlab/objective.hpp"
#include "broxlab/verify.hpp"

namespace broxlab {

using Json = nlohmann::json;

/// {"dim": n, "X": [...]} (flat row-major or nested rows), a bare X array, or
/// the string "identity".
Geometry geometry_from_json(const Json& j, int dim);
Json geometry_to_json(const Geometry& g);
/// "identity", an inline JSON document, or a path to a JSON file.
Geometry load_geometry(const std::string& spec, int dim);

/// {"points": [{"x": [...], "f": v}, ...]}
Objective finite_objective_from_json(const Json& j, std::string name);
/// A catalog key, or a path to a finite-objective JSON file.
Objective load_objective(const std::string& key_or_path);

/// "3,0" or "20" -> vector. Throws std::invalid_argument on junk.
Vector parse_point(const std::string& text);

Json to_json(const Vector& v);

struct RunInfo {
  std::string objective;
  std::uint64_t seed = 0;
  std::string oracle;
  std::optional<Vector> x_star;
};

/// {"objective", "t", "seed", "oracle", "iterates", "values", "dists",
///  "termination", "margins": {"max_epsilon", "max_resolution"}}
Json trajectory_to_json(const Trajectory& tr, const RunInfo& info);

/// Header "k,x1,...,xd,f,dist" ("k,x,f,dist" in one dimension).
void write_trajectory_csv(std::ostream& out, const Trajectory& tr);

/// Header "x,f"; n samples of a 1-D objective over
/// [min(x_star - 5t, x0 - t), max(x0 + t, x_star + t)].
void write_landscape_csv(std::ostream& out, const Objective& f, double x0, double x_star, double t,
                         int n = 4001);

/// {"check", "verdict", "samples", "witnesses": [{"x", "u", "inner", "margin"}],
///  "config", "note"}
Json report_to_json(const VerificationReport& r);

/// Writes `j` with two-space indentation and a trailing newline. Throws
/// std::runtime_error when the file cannot be opened.
void write_json_file(const std::string& path, const Json& j);

}  // namespace broxlab
