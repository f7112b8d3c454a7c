#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "topress/analysis.hpp"
#include "topress/driver.hpp"
#include "topress/element.hpp"
#include "topress/filter.hpp"
#include "topress/io/checkpoint.hpp"
#include "topress/io/config.hpp"
#include "topress/io/vtk.hpp"
#include "topress/material.hpp"
#include "topress/problems.hpp"
#include "topress/threads.hpp"

namespace py = pybind11;
using namespace topress;

namespace {

// Python values are converted with str(); booleans become 0/1.
io::ConfigValues to_config(const py::dict& d) {
  io::ConfigValues out;
  for (const auto& [k, v] : d) {
    const std::string key = py::str(k);
    if (py::isinstance<py::bool_>(v)) {
      out[key] = v.cast<bool>() ? "1" : "0";
    } else {
      out[key] = py::str(v);
    }
  }
  return out;
}

py::dict record_dict(const IterationRecord& r) {
  py::dict d;
  d["iter"] = r.iter;
  d["compliance"] = r.compliance;
  d["compliance_normalized"] = r.compliance_normalized;
  d["volfrac"] = r.volfrac;
  d["change"] = r.change;
  d["seconds"] = r.seconds;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Pressure-loaded 3D topology optimization";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  m.attr("elastic_backend") = elastic_backend_name();
  m.attr("recommended_isovalue") = io::kRecommendedIsovalue;

  m.def("darcy_matrix", [] { return Eigen::MatrixXd(darcy_matrix()); });
  m.def("drainage_matrix", [] { return Eigen::MatrixXd(drainage_matrix()); });
  m.def("transformation_matrix", [] { return Eigen::MatrixXd(transformation_matrix()); });
  m.def("stiffness_matrix", [](double nu) { return Eigen::MatrixXd(stiffness_matrix(nu)); },
        py::arg("nu") = 0.3);

  m.def("heaviside", &heaviside, py::arg("x"), py::arg("beta"), py::arg("eta"));
  m.def("heaviside_derivative", &heaviside_derivative, py::arg("x"), py::arg("beta"),
        py::arg("eta"));

  m.def(
      "filter_forward",
      [](int nelx, int nely, int nelz, double rmin, const Vector& x, const std::string& backend) {
        const GridMesh mesh(nelx, nely, nelz);
        return make_filter(parse_filter_backend(backend), mesh, rmin)->forward(x);
      },
      py::arg("nelx"), py::arg("nely"), py::arg("nelz"), py::arg("rmin"), py::arg("x"),
      py::arg("backend") = "convolution");
  m.def(
      "filter_backward",
      [](int nelx, int nely, int nelz, double rmin, const Vector& s, const std::string& backend) {
        const GridMesh mesh(nelx, nely, nelz);
        return make_filter(parse_filter_backend(backend), mesh, rmin)->backward(s);
      },
      py::arg("nelx"), py::arg("nely"), py::arg("nelz"), py::arg("rmin"), py::arg("s"),
      py::arg("backend") = "convolution");

  m.def(
      "preset",
      [](const std::string& name, int nelx, int nely, int nelz, double pin) {
        const GridMesh mesh(nelx, nely, nelz);
        const ProblemPreset p = make_preset(parse_preset_name(name), mesh, pin);
        py::dict d;
        d["pressure_dofs"] = p.pressure_bc.fixed_dofs;
        d["pressure_values"] = p.pressure_bc.fixed_values;
        d["fixed_displacement_dofs"] = p.displacement_bc.fixed_dofs;
        d["passive_solid"] = p.passive_solid;
        d["passive_void"] = p.passive_void;
        std::vector<std::string> mirror;
        for (Axis a : p.mirror) mirror.emplace_back(io::axis_name(a));
        d["mirror"] = mirror;
        return d;
      },
      py::arg("name"), py::arg("nelx"), py::arg("nely"), py::arg("nelz"), py::arg("pin") = 1.0);

  m.def(
      "analyze",
      [](const std::string& name, int nelx, int nely, int nelz, const Vector& xphys, bool lst) {
        const GridMesh mesh(nelx, nely, nelz);
        const ProblemPreset p = make_preset(parse_preset_name(name), mesh);
        const Analysis a(mesh, p.pressure_bc, p.displacement_bc, FlowModel{}, ElasticModel{});
        const AnalysisState s = a.solve(xphys);
        const SensitivityBundle b = a.sensitivities(s, xphys, 0.5, lst);
        py::dict d;
        d["pressure"] = s.p;
        d["load"] = s.f;
        d["displacement"] = s.u;
        d["compliance"] = s.compliance;
        d["gradient"] = b.obj_grad;
        return d;
      },
      py::arg("preset"), py::arg("nelx"), py::arg("nely"), py::arg("nelz"), py::arg("xphys"),
      py::arg("lst") = true,
      "Pressure, displacement, compliance and its gradient for a fixed design, default models.");

  m.def("config_keys", [] {
    std::vector<py::dict> out;
    for (const io::ConfigKey& k : io::config_keys()) {
      py::dict d;
      d["section"] = k.section;
      d["name"] = k.name;
      d["help"] = k.help;
      d["required"] = k.required;
      out.push_back(d);
    }
    return out;
  });

  m.def(
      "run",
      [](const py::dict& config, const std::function<void(py::dict)>& progress) {
        RunConfig cfg = io::make_run_config(to_config(config));
        cfg.quiet = true;
        RunResult r;
        {
          ProgressFn fn;
          if (progress) {
            fn = [&](const IterationRecord& rec) {
              py::gil_scoped_acquire gil;
              progress(record_dict(rec));
            };
          }
          py::gil_scoped_release release;
          r = run(cfg, fn);
        }
        py::dict d;
        d["x"] = r.x;
        d["xphys"] = r.xphys;
        d["pressure"] = r.p;
        d["displacement"] = r.u;
        d["normf"] = r.normf;
        py::list hist;
        for (const auto& rec : r.history) hist.append(record_dict(rec));
        d["history"] = hist;
        d["active"] = r.preset.active_elements(static_cast<Index>(r.xphys.size()));
        return d;
      },
      py::arg("config"), py::arg("progress") = nullptr,
      "Runs the optimization for a dict of configuration fields (same names as the CLI flags).");

  m.def(
      "export_checkpoint",
      [](const std::string& checkpoint, const std::string& vtk, bool mirror) {
        const io::Checkpoint cp = io::read_checkpoint(checkpoint);
        const Vector* p = cp.pressure.size() > 0 ? &cp.pressure : nullptr;
        const Vector* u = cp.displacement.size() > 0 ? &cp.displacement : nullptr;
        io::write_vtk(io::make_voxel_export(cp.mesh(), cp.xphys,
                                            mirror ? cp.mirror : std::vector<Axis>{}, p, u),
                      vtk);
      },
      py::arg("checkpoint"), py::arg("vtk"), py::arg("mirror") = true);

  m.def("configure_threads", &configure_threads);
  m.def("max_threads", &max_threads);
}
