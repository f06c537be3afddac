#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <sommerfeld/cli.hpp>
#include <sommerfeld/elements.hpp>
#include <sommerfeld/errors.hpp>
#include <sommerfeld/geometry.hpp>
#include <sommerfeld/io.hpp>
#include <sommerfeld/model.hpp>
#include <sommerfeld/reference_tables.hpp>

namespace py = pybind11;
using namespace sommerfeld;

namespace {

OrbitParameters params(int z, int n_r, int n_theta) {
  return orbit_parameters(IonSpec{z, {n_r, n_theta}});
}

std::vector<std::tuple<double, double, double, double>> trajectory(int z, int revolutions,
                                                                   int samples, int n_r,
                                                                   int n_theta) {
  const auto poly = sample_trajectory(params(z, n_r, n_theta), revolutions, samples);
  std::vector<std::tuple<double, double, double, double>> out;
  out.reserve(poly.points().size());
  for (const auto& p : poly.points()) out.emplace_back(p.theta, p.r, p.x, p.y);
  return out;
}

int count_loops(int z, int samples, int n_r, int n_theta) {
  return count_self_intersections(sample_trajectory(params(z, n_r, n_theta), 1, samples)).loops;
}

std::string svg(int z, std::optional<int> revolutions, int samples, int n_r, int n_theta) {
  const auto p = params(z, n_r, n_theta);
  RenderOptions opts;
  opts.revolutions = revolutions;
  std::ostringstream out;
  render_svg(sample_trajectory(p, revolutions.value_or(default_render_revolutions(p)), samples),
             opts, out);
  return out.str();
}

std::string table(int z_from, int z_to, const std::string& format, int n_r, int n_theta) {
  const auto fmt = parse_table_format(format);
  if (!fmt) throw ArgumentError("format must be text, csv or json");
  std::vector<ParameterRow> rows;
  for (int z = z_from; z <= z_to; ++z) rows.push_back(make_parameter_row(IonSpec{z, {n_r, n_theta}}));
  std::ostringstream out;
  write_parameter_table(rows, *fmt, out);
  return out.str();
}

py::dict element_dict(int z) {
  const auto& e = element_info(z);
  py::dict d;
  d["z"] = e.z;
  d["symbol"] = std::string(e.symbol);
  d["name"] = std::string(e.name);
  d["hypothetical"] = e.hypothetical;
  d["ion"] = e.ion_label();
  return d;
}

std::tuple<int, std::string, std::string> cli_entry(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bohr-Sommerfeld relativistic orbit parameters";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NotFoundError>(m, "NotFoundError", PyExc_KeyError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ArgumentError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const IoError& e) {
      PyErr_SetString(PyExc_OSError, e.what());
    }
  });

  m.attr("ALPHA") = kConstants.alpha;
  m.attr("INVERSE_ALPHA") = kConstants.inv_alpha;

  py::class_<OrbitParameters>(m, "OrbitParameters")
      .def_property_readonly("z", [](const OrbitParameters& p) { return p.ion.z; })
      .def_property_readonly("n_r", [](const OrbitParameters& p) { return p.ion.qn.n_r; })
      .def_property_readonly("n_theta", [](const OrbitParameters& p) { return p.ion.qn.n_theta; })
      .def_readonly("omega", &OrbitParameters::omega)
      .def_readonly("epsilon", &OrbitParameters::epsilon)
      .def_readonly("a_over_a0", &OrbitParameters::a_over_a0)
      .def_readonly("r_min", &OrbitParameters::r_min)
      .def_readonly("r_max", &OrbitParameters::r_max)
      .def_readonly("delta_theta", &OrbitParameters::delta_theta)
      .def_readonly("energy_ratio", &OrbitParameters::energy_ratio)
      .def_readonly("winding_raw", &OrbitParameters::winding_raw)
      .def_readonly("winding", &OrbitParameters::winding)
      .def_readonly("ground_speed", &OrbitParameters::ground_speed)
      .def("__repr__", [](const OrbitParameters& p) {
        return "OrbitParameters(z=" + std::to_string(p.ion.z) +
               ", omega=" + std::to_string(p.omega) + ", epsilon=" + std::to_string(p.epsilon) +
               ", winding=" + std::to_string(p.winding) + ")";
      });

  m.def("orbit_parameters", &params, py::arg("z"), py::arg("n_r") = 1, py::arg("n_theta") = 1);
  m.def("trajectory", &trajectory, "List of (theta, r, x, y) samples", py::arg("z"),
        py::arg("revolutions") = 1, py::arg("samples") = 1024, py::arg("n_r") = 1,
        py::arg("n_theta") = 1);
  m.def("count_loops", &count_loops, "Self-crossings within one radial period", py::arg("z"),
        py::arg("samples") = 4096, py::arg("n_r") = 1, py::arg("n_theta") = 1);
  m.def("render_svg", &svg, py::arg("z"), py::arg("revolutions") = py::none(),
        py::arg("samples") = 1024, py::arg("n_r") = 1, py::arg("n_theta") = 1);
  m.def("parameter_table", &table, py::arg("z_from") = kFirstTransuranic,
        py::arg("z_to") = kLastTransuranic, py::arg("format") = "text", py::arg("n_r") = 1,
        py::arg("n_theta") = 1);
  m.def("classify", [](int z) { return classify(z).display(); }, py::arg("z"));
  m.def("element", &element_dict, py::arg("z"));
  m.def(
      "validate",
      [] {
        const auto all = validate_all();
        return std::make_tuple(errata_report(all), !has_new_discrepancies(all));
      },
      "Errata report and whether it is free of new discrepancies");
  m.def("run_cli", &cli_entry, "Run the command line in-process: (exit code, stdout, stderr)",
        py::arg("args"));
}
