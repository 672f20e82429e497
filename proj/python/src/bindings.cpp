#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "cylcover/config.hpp"
#include "cylcover/coverage.hpp"
#include "cylcover/errors.hpp"
#include "cylcover/experiments.hpp"
#include "cylcover/processes.hpp"
#include "cylcover/theory.hpp"

namespace py = pybind11;
using namespace cylcover;

namespace {

DilationKind parse_kind(const std::string& kind) {
  if (kind == "ball") return DilationKind::kFullBall;
  if (kind == "disk") return DilationKind::kBaseDisk;
  throw py::value_error("dilation kind must be 'ball' or 'disk'");
}

Box make_box(const std::vector<double>& lo, const std::vector<double>& hi) {
  if (lo.size() != hi.size()) throw py::value_error("lo and hi differ in length");
  return Box{lo, hi};
}

py::dict radius_dict(const CertifiedRadius& r) {
  py::dict out;
  out["lower"] = r.lower;
  out["upper"] = r.upper;
  out["evaluations"] = r.evaluations;
  switch (r.status) {
    case RadiusStatus::kCertified: out["status"] = "certified"; break;
    case RadiusStatus::kEmptyModel: out["status"] = "empty_model"; break;
    case RadiusStatus::kBudgetExhausted: out["status"] = "budget_exhausted"; break;
  }
  return out;
}

std::vector<double> coords(std::span<const double> s) { return {s.begin(), s.end()}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Coverage of the unit cube by Poisson rays and Brownian cylinders";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ZeroVerticalComponent>(m, "ZeroVerticalComponent", error);
  py::register_exception<InvalidIntensity>(m, "InvalidIntensity", error);
  py::register_exception<InvalidSteps>(m, "InvalidSteps", error);
  py::register_exception<UnsupportedCombination>(m, "UnsupportedCombination", error);
  py::register_exception<InvalidDistance>(m, "InvalidDistance", error);
  py::register_exception<DegenerateHeight>(m, "DegenerateHeight", error);
  py::register_exception<ConfigError>(m, "ConfigError", error);
  py::register_exception<IOFailure>(m, "IOFailure", error);

  py::class_<LineModelSample>(m, "LineModelSample")
      .def_readonly("d", &LineModelSample::d)
      .def_readonly("rho", &LineModelSample::rho)
      .def("__len__", [](const LineModelSample& s) { return s.rays.size(); })
      .def_property_readonly("bases",
                             [](const LineModelSample& s) {
                               std::vector<std::vector<double>> out;
                               for (const auto& ray : s.rays) out.push_back(coords(ray.base.coords()));
                               return out;
                             })
      .def_property_readonly("directions", [](const LineModelSample& s) {
        std::vector<std::vector<double>> out;
        for (const auto& ray : s.rays) out.push_back(coords(ray.dir.coords()));
        return out;
      });

  py::class_<BrownianModelSample>(m, "BrownianModelSample")
      .def_readonly("d", &BrownianModelSample::d)
      .def_readonly("rho", &BrownianModelSample::rho)
      .def_readonly("n_steps", &BrownianModelSample::n_steps)
      .def("__len__", [](const BrownianModelSample& s) { return s.paths.size(); })
      .def("position", [](const BrownianModelSample& s, std::size_t i, double t) {
        return s.paths.at(i).position(t);
      });

  m.def(
      "sample_line_model",
      [](std::size_t d, double rho, std::uint64_t seed, std::uint64_t stream,
         const std::string& law) {
        return sample_line_model(d, rho, parse_law(law, d), SeedSpec{seed, stream});
      },
      py::arg("d"), py::arg("rho"), py::arg("seed") = 0, py::arg("stream") = 0,
      py::arg("law") = "uniform");
  m.def(
      "sample_brownian_model",
      [](std::size_t d, double rho, std::size_t n_steps, std::uint64_t seed,
         std::uint64_t stream) {
        return sample_brownian_model(d, rho, n_steps, SeedSpec{seed, stream});
      },
      py::arg("d"), py::arg("rho"), py::arg("n_steps") = kDefaultBrownianSteps,
      py::arg("seed") = 0, py::arg("stream") = 0);

  m.def(
      "min_distance",
      [](const LineModelSample& s, const std::vector<double>& x, const std::string& kind) {
        return min_distance(s, parse_kind(kind), PointD(x));
      },
      py::arg("sample"), py::arg("x"), py::arg("kind") = "ball");
  m.def(
      "min_distance",
      [](const BrownianModelSample& s, const std::vector<double>& x, const std::string& kind) {
        return min_distance(s, parse_kind(kind), PointD(x));
      },
      py::arg("sample"), py::arg("x"), py::arg("kind") = "disk");
  m.def(
      "cover_count",
      [](const LineModelSample& s, const std::vector<double>& x, double r,
         const std::string& kind) { return cover_count(s, {parse_kind(kind), r}, PointD(x)); },
      py::arg("sample"), py::arg("x"), py::arg("r"), py::arg("kind") = "ball");
  m.def(
      "cover_count",
      [](const BrownianModelSample& s, const std::vector<double>& x, double r,
         const std::string& kind) { return cover_count(s, {parse_kind(kind), r}, PointD(x)); },
      py::arg("sample"), py::arg("x"), py::arg("r"), py::arg("kind") = "disk");

  m.def(
      "coverage_radius",
      [](const LineModelSample& s, const std::string& kind, double tol) {
        CertifiedRadius r;
        {
          py::gil_scoped_release release;
          r = coverage_radius(s, parse_kind(kind), tol);
        }
        return radius_dict(r);
      },
      py::arg("sample"), py::arg("kind") = "ball", py::arg("tol") = 1e-4);
  m.def(
      "coverage_radius",
      [](const BrownianModelSample& s, const std::string& kind, double tol) {
        CertifiedRadius r;
        {
          py::gil_scoped_release release;
          r = coverage_radius(s, parse_kind(kind), tol);
        }
        return radius_dict(r);
      },
      py::arg("sample"), py::arg("kind") = "disk", py::arg("tol") = 1e-4);

  m.def(
      "uncovered_volume_estimate",
      [](const LineModelSample& s, double r, const std::vector<double>& lo,
         const std::vector<double>& hi, std::size_t n_points, std::uint64_t seed,
         std::uint64_t stream, const std::string& kind) {
        const VolumeEstimate v = uncovered_volume_estimate(s, {parse_kind(kind), r},
                                                           make_box(lo, hi), n_points,
                                                           SeedSpec{seed, stream});
        return py::make_tuple(v.estimate, v.std_error);
      },
      py::arg("sample"), py::arg("r"), py::arg("lo"), py::arg("hi"), py::arg("n_points"),
      py::arg("seed") = 0, py::arg("stream") = 0, py::arg("kind") = "ball");

  m.def("unit_ball_volume", &unit_ball_volume, py::arg("n"));
  m.def("crossing_constant", &crossing_constant, py::arg("d"));
  m.def(
      "crossing_probability",
      [](double dist, double r, std::size_t d) {
        const CrossingProbability p = crossing_probability(dist, r, d);
        py::dict out;
        out["leading"] = p.leading;
        out["lower"] = p.lower;
        out["upper"] = p.upper;
        out["exact_2d"] = p.exact_2d ? py::cast(*p.exact_2d) : py::none();
        return out;
      },
      py::arg("dist"), py::arg("r"), py::arg("d"));
  m.def(
      "phi",
      [](const std::vector<double>& x, std::optional<double> tol) {
        const PointD p(x);
        return phi_d(p, tol.value_or(default_phi_tol(p.dim()))).value;
      },
      py::arg("x"), py::arg("tol") = py::none());
  m.def(
      "c_star",
      [](std::size_t d, double tol) {
        const CStar c = c_star(d, tol);
        py::dict out;
        out["inf_phi"] = c.inf_phi;
        out["c_star"] = c.value;
        out["limit"] = c.limit;
        out["argmin"] = coords(c.argmin.coords());
        return out;
      },
      py::arg("d"), py::arg("tol") = 1e-8);
  m.def(
      "expected_cover_count",
      [](const std::vector<double>& x, double rho, double r, double tol) {
        return expected_cover_count(PointD(x), rho, r, tol);
      },
      py::arg("x"), py::arg("rho"), py::arg("r"), py::arg("tol") = 1e-9);
  m.def(
      "expected_uncovered_volume",
      [](const std::vector<double>& lo, const std::vector<double>& hi, double c, double rho,
         double tol) {
        return expected_uncovered_volume(make_box(lo, hi), c, rho, lo.size(), tol);
      },
      py::arg("lo"), py::arg("hi"), py::arg("c"), py::arg("rho"), py::arg("tol") = 1e-9);
  m.def("radius_at_intensity", &radius_at_intensity, py::arg("c"), py::arg("rho"), py::arg("d"));

  m.def(
      "condition_probability",
      [](std::size_t d, const std::string& law, const std::vector<int>& cone,
         std::size_t n_samples, std::uint64_t seed) {
        const ProbabilityEstimate p = condition_probability(
            d, parse_law(law, d), OrthantCone(cone), n_samples, SeedSpec{seed, 0});
        return py::make_tuple(p.estimate, p.std_error);
      },
      py::arg("d"), py::arg("law"), py::arg("cone"), py::arg("n_samples"), py::arg("seed") = 0);

  m.def(
      "run_sweep",
      [](const std::string& config_text, std::size_t threads) {
        const ExperimentConfig cfg = parse_config(config_text);
        std::vector<SweepRecord> records;
        {
          py::gil_scoped_release release;
          records = run_sweep(cfg, threads);
        }
        return format_sweep_csv(records);
      },
      py::arg("config_text"), py::arg("threads") = 1,
      "Runs a sweep described by key = value text and returns the results CSV.");
  m.def(
      "theory_report", [](std::size_t d, double tol) { return to_json(compute_theory(d, tol)); },
      py::arg("d"), py::arg("tol") = 1e-8);
}
