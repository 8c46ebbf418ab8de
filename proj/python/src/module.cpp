#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "broxlab/bpm.hpp"
#include "broxlab/catalog.hpp"
#include "broxlab/io.hpp"
#include "broxlab/oracle.hpp"
#include "broxlab/suite.hpp"
#include "broxlab/verify.hpp"

namespace py = pybind11;
using namespace broxlab;

namespace {

OracleOptions oracle_options(const std::string& kind, int grid_n, int samples, int refine, int starts,
                             std::uint64_t seed) {
  OracleOptions o;
  o.kind = oracle_kind_from_string(kind);
  o.grid_n = grid_n;
  o.samples = samples;
  o.refine = refine;
  o.starts = starts;
  o.seed = seed;
  return o;
}

Geometry geometry_or_identity(const std::optional<Geometry>& g, int dim) {
  return g ? *g : Geometry::identity(dim);
}

Sampler make_sampler(std::size_t count, std::uint64_t seed, const std::vector<Vector>& points) {
  Sampler s;
  s.count = count;
  s.seed = seed;
  s.explicit_points = points;
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Ball proximal point method and broximal alignment checks";

  py::register_exception<OracleError>(m, "OracleError", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<CatalogError>(m, "CatalogError", PyExc_ValueError);

  py::class_<Geometry>(m, "Geometry")
      .def(py::init<Matrix>(), py::arg("X"))
      .def_static("identity", &Geometry::identity, py::arg("dim"))
      .def_property_readonly("dim", &Geometry::dim)
      .def_property_readonly("matrix", &Geometry::matrix)
      .def("inner", &Geometry::inner)
      .def("norm", &Geometry::norm)
      .def("distance", &Geometry::distance);

  py::class_<Objective>(m, "Objective")
      .def_property_readonly("name", &Objective::name)
      .def_property_readonly("dim", &Objective::dim)
      .def_property_readonly("f_star", &Objective::f_star)
      .def_property_readonly("minimizers", [](const Objective& f) { return f.minimizers().points; })
      .def_property_readonly("is_finite_domain", &Objective::is_finite_domain)
      .def("__call__", &Objective::value)
      .def("value", &Objective::value)
      .def("gradient", &Objective::gradient)
      .def("is_optimal", &Objective::is_optimal)
      .def("__repr__", [](const Objective& f) { return "<Objective " + f.name() + ">"; });

  m.def("builtin", &builtin, py::arg("key"));
  m.def("catalog", [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& e : catalog()) out.emplace_back(e.key, e.description);
    return out;
  });
  m.def("sin_abs_minimizer", &sin_abs_minimizer);
  m.def(
      "finite_objective",
      [](std::string name, const std::vector<std::pair<Vector, double>>& pts) {
        std::vector<FinitePoint> fp;
        for (const auto& [x, v] : pts) fp.push_back(FinitePoint{x, v});
        return finite_objective(std::move(name), std::move(fp));
      },
      py::arg("name"), py::arg("points"));
  m.def("affine_value", &affine_value, py::arg("f"), py::arg("a"), py::arg("b"));
  m.def("pullback_orthogonal_affine", &pullback_orthogonal_affine, py::arg("f"), py::arg("Q"), py::arg("b"),
        py::arg("geometry"));

  py::class_<BroxResult>(m, "BroxResult")
      .def_readonly("candidates", &BroxResult::candidates)
      .def_readonly("value", &BroxResult::value)
      .def_readonly("selected", &BroxResult::selected)
      .def_readonly("epsilon", &BroxResult::epsilon)
      .def_readonly("resolution", &BroxResult::resolution)
      .def_readonly("evaluations", &BroxResult::evaluations);

  m.def(
      "brox",
      [](const Objective& f, const Vector& x, double t, const std::optional<Geometry>& g, const std::string& oracle,
         int grid_n, int samples, int refine, int starts, std::uint64_t seed) {
        const Geometry geo = geometry_or_identity(g, f.dim());
        const OracleOptions o = oracle_options(oracle, grid_n, samples, refine, starts, seed);
        py::gil_scoped_release release;
        return brox(f, geo, x, t, o);
      },
      py::arg("f"), py::arg("x"), py::arg("t"), py::arg("geometry") = py::none(), py::arg("oracle") = "auto",
      py::arg("grid_n") = 2001, py::arg("samples") = 256, py::arg("refine") = 40, py::arg("starts") = 8,
      py::arg("seed") = 0);

  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("iterates", &Trajectory::iterates)
      .def_readonly("values", &Trajectory::values)
      .def_readonly("dists", &Trajectory::dists)
      .def_readonly("t", &Trajectory::t)
      .def_readonly("failure_reason", &Trajectory::failure_reason)
      .def_property_readonly("termination", [](const Trajectory& tr) { return std::string(to_string(tr.termination)); })
      .def("__len__", &Trajectory::size);

  m.def(
      "run_bpm",
      [](const Objective& f, const Vector& x0, double t, const std::optional<Geometry>& g, int max_iters,
         std::optional<double> opt_tol, const std::string& oracle, std::uint64_t seed) {
        const Geometry geo = geometry_or_identity(g, f.dim());
        BpmConfig cfg;
        cfg.t = t;
        cfg.max_iters = max_iters;
        cfg.opt_tol = opt_tol;
        cfg.oracle.kind = oracle_kind_from_string(oracle);
        cfg.oracle.seed = seed;
        py::gil_scoped_release release;
        return run_bpm(f, geo, x0, cfg);
      },
      py::arg("f"), py::arg("x0"), py::arg("t"), py::arg("geometry") = py::none(), py::arg("max_iters") = 1000,
      py::arg("opt_tol") = py::none(), py::arg("oracle") = "auto", py::arg("seed") = 0);
  m.def("kappa_bound", &kappa_bound, py::arg("geometry"), py::arg("x0"), py::arg("x_star"), py::arg("t"));

  py::class_<Witness>(m, "Witness")
      .def_readonly("x", &Witness::x)
      .def_readonly("u", &Witness::u)
      .def_readonly("lam", &Witness::lambda)
      .def_readonly("value", &Witness::value)
      .def_readonly("margin", &Witness::margin)
      .def_readonly("note", &Witness::note);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("check", &VerificationReport::check)
      .def_property_readonly("verdict", [](const VerificationReport& r) { return std::string(to_string(r.verdict)); })
      .def_readonly("samples", &VerificationReport::samples)
      .def_readonly("witnesses", &VerificationReport::witnesses)
      .def_readonly("config", &VerificationReport::config)
      .def_readonly("certified_minimizer", &VerificationReport::certified_minimizer)
      .def_readonly("note", &VerificationReport::note)
      .def_property_readonly("passed", &VerificationReport::passed)
      .def("__repr__", [](const VerificationReport& r) {
        return "<VerificationReport " + r.check + ": " + to_string(r.verdict) + ">";
      });

  m.def(
      "check_assumption1",
      [](const Objective& f, double t, std::optional<Vector> x_star, const std::optional<Geometry>& g,
         std::size_t count, std::uint64_t seed, const std::vector<Vector>& points) {
        const Geometry geo = geometry_or_identity(g, f.dim());
        const Sampler s = make_sampler(count, seed, points);
        py::gil_scoped_release release;
        return check_assumption1(f, geo, t, x_star, s);
      },
      py::arg("f"), py::arg("t"), py::arg("x_star") = py::none(), py::arg("geometry") = py::none(),
      py::arg("count") = 1000, py::arg("seed") = 0, py::arg("points") = std::vector<Vector>{});
  m.def(
      "check_assumption2",
      [](const Objective& f, double t, const std::optional<Geometry>& g, std::size_t count, std::uint64_t seed,
         const std::vector<Vector>& points, int chain_depth) {
        const Geometry geo = geometry_or_identity(g, f.dim());
        const Sampler s = make_sampler(count, seed, points);
        CheckOptions o;
        o.chain_depth = chain_depth;
        py::gil_scoped_release release;
        return check_assumption2(f, geo, t, s, o);
      },
      py::arg("f"), py::arg("t"), py::arg("geometry") = py::none(), py::arg("count") = 1000, py::arg("seed") = 0,
      py::arg("points") = std::vector<Vector>{}, py::arg("chain_depth") = 4);
  m.def(
      "check_uba",
      [](const Objective& f, double t, std::optional<Vector> x_star, const std::optional<Geometry>& g,
         std::size_t count, std::uint64_t seed, const std::vector<Vector>& points) {
        const Geometry geo = geometry_or_identity(g, f.dim());
        const Sampler s = make_sampler(count, seed, points);
        py::gil_scoped_release release;
        return check_uba(f, geo, t, x_star, s);
      },
      py::arg("f"), py::arg("t"), py::arg("x_star") = py::none(), py::arg("geometry") = py::none(),
      py::arg("count") = 1000, py::arg("seed") = 0, py::arg("points") = std::vector<Vector>{});
  m.def(
      "check_quasiconvex",
      [](const Objective& f, bool strict, std::size_t count, std::uint64_t seed) {
        const Sampler s = make_sampler(count, seed, {});
        py::gil_scoped_release release;
        return check_quasiconvex(f, strict, s);
      },
      py::arg("f"), py::arg("strict") = false, py::arg("count") = 1000, py::arg("seed") = 0);
  m.def(
      "check_pseudoconvex",
      [](const Objective& f, std::size_t count, std::uint64_t seed) {
        const Sampler s = make_sampler(count, seed, {});
        py::gil_scoped_release release;
        return check_pseudoconvex(f, s);
      },
      py::arg("f"), py::arg("count") = 1000, py::arg("seed") = 0);
  m.def(
      "check_quasar",
      [](const Objective& f, double zeta, std::optional<Vector> x_star, std::size_t count, std::uint64_t seed) {
        const Sampler s = make_sampler(count, seed, {});
        py::gil_scoped_release release;
        return check_quasar(f, zeta, x_star, s);
      },
      py::arg("f"), py::arg("zeta"), py::arg("x_star") = py::none(), py::arg("count") = 1000, py::arg("seed") = 0);
  m.def(
      "check_aiming",
      [](const Objective& f, double theta, std::size_t count, std::uint64_t seed) {
        const Sampler s = make_sampler(count, seed, {});
        py::gil_scoped_release release;
        return check_aiming(f, theta, s);
      },
      py::arg("f"), py::arg("theta"), py::arg("count") = 1000, py::arg("seed") = 0);
  m.def("check_F1_nonmonotone_witnesses", &check_F1_nonmonotone_witnesses);
  m.def(
      "check_trajectory",
      [](const Objective& f, const Trajectory& tr, const Vector& x_star, const std::optional<Geometry>& g) {
        const Geometry geo = geometry_or_identity(g, f.dim());
        py::gil_scoped_release release;
        return check_trajectory(f, geo, tr, x_star);
      },
      py::arg("f"), py::arg("trajectory"), py::arg("x_star"), py::arg("geometry") = py::none());

  m.def(
      "run_suite_json",
      [](const std::string& filter, std::uint64_t seed) {
        SuiteOptions o;
        o.filter = filter;
        o.seed = seed;
        std::string out;
        {
          py::gil_scoped_release release;
          out = suite_to_json(run_suite(o)).dump();
        }
        return out;
      },
      py::arg("filter") = "", py::arg("seed") = 0);
}
