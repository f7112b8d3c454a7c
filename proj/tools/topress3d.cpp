// topress3d: pressure-loaded 3D topology optimization from the command line.
//
//   topress3d run [--config FILE] [--preset lid --nelx 48 ...]
//   topress3d check-gradient [--preset lid --nelx 3 --nely 2 --nelz 2]
//   topress3d export --checkpoint FILE --vtk FILE
//
// TOPRESS3D_NUM_THREADS sets the OpenMP thread count.
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "topress/analysis.hpp"
#include "topress/driver.hpp"
#include "topress/io/checkpoint.hpp"
#include "topress/io/config.hpp"
#include "topress/io/vtk.hpp"
#include "topress/linsolve.hpp"
#include "topress/problems.hpp"
#include "topress/threads.hpp"

using namespace topress;

namespace {

// Registers one --name option per configuration field. Only flags given on the
// command line end up in the returned values.
struct ConfigFlags {
  std::map<std::string, std::string> storage;
  std::map<std::string, CLI::Option*> options;
  std::string config_file;
  bool quiet = false;

  void attach(CLI::App& app) {
    app.add_option("--config", config_file, "INI file with [problem], [optimization], ... sections")
        ->check(CLI::ExistingFile);
    app.add_flag("--quiet", quiet, "suppress progress output");
    for (const io::ConfigKey& k : io::config_keys()) {
      std::string help = std::string("[") + k.section + "] " + k.help;
      if (k.required) help += " (required)";
      options[k.name] = app.add_option(std::string("--") + k.name, storage[k.name], help);
    }
  }

  RunConfig resolve() const {
    io::ConfigValues flags;
    for (const auto& [name, opt] : options) {
      if (opt->count() > 0) flags[name] = storage.at(name);
    }
    io::ConfigValues base;
    if (!config_file.empty()) base = io::read_config_file(config_file);
    RunConfig cfg = io::make_run_config(io::merge_config(base, flags));
    cfg.quiet = quiet;
    return cfg;
  }
};

int cmd_run(const ConfigFlags& flags) {
  const RunConfig cfg = flags.resolve();
  if (!cfg.quiet) {
    std::printf("topress3d: %s on %dx%dx%d, %d thread(s), %s Cholesky\n", to_string(cfg.preset),
                cfg.nelx, cfg.nely, cfg.nelz, max_threads(), elastic_backend_name());
  }
  const RunResult res = run(cfg, [&](const IterationRecord& r) {
    if (!cfg.quiet) std::printf("%s\n", format_progress(r).c_str());
    std::fflush(stdout);
  });
  if (!cfg.quiet) {
    const GridMesh mesh(cfg.nelx, cfg.nely, cfg.nelz);
    std::printf("done: %zu iterations, compliance %.6g, active volume fraction %.4f\n",
                res.history.size(), res.history.back().compliance,
                active_mean(res.xphys, res.preset.active_elements(mesh.nel())));
  }
  return 0;
}

struct GradientOptions {
  std::string preset = "lid";
  int nelx = 3, nely = 2, nelz = 2;
  double step = 1e-6;
  double tol = 1e-4;
  double lo = 0.2, hi = 0.8;
  unsigned seed = 1;
};

// Central differences of the compliance against the adjoint gradient, with
// and without load sensitivities (the latter against frozen-load differences).
int cmd_check_gradient(const GradientOptions& o) {
  const GridMesh mesh(o.nelx, o.nely, o.nelz);
  const ProblemPreset preset = make_preset(parse_preset_name(o.preset), mesh);
  const Analysis a(mesh, preset.pressure_bc, preset.displacement_bc, FlowModel{}, ElasticModel{});
  std::mt19937 gen(o.seed);
  std::uniform_real_distribution<double> dist(o.lo, o.hi);
  Vector x(mesh.nel());
  for (Index e = 0; e < mesh.nel(); ++e) x[e] = dist(gen);

  const AnalysisState s = a.solve(x);
  const Vector g1 = a.sensitivities(s, x, 0.5, true).obj_grad;
  const Vector g0 = a.sensitivities(s, x, 0.5, false).obj_grad;
  double err1 = 0.0, err0 = 0.0;
  std::printf("%6s %16s %16s %16s %16s\n", "elem", "adjoint", "fd", "adjoint(frozen)",
              "fd(frozen)");
  for (Index e = 0; e < mesh.nel(); ++e) {
    Vector xp = x, xm = x;
    xp[e] += o.step;
    xm[e] -= o.step;
    const double fd1 = (a.solve(xp).compliance - a.solve(xm).compliance) / (2 * o.step);
    const double fd0 =
        (a.solve_with_load(xp, s.f).compliance - a.solve_with_load(xm, s.f).compliance) /
        (2 * o.step);
    err1 = std::max(err1, std::abs(g1[e] - fd1) / std::abs(fd1));
    err0 = std::max(err0, std::abs(g0[e] - fd0) / std::abs(fd0));
    std::printf("%6d %16.8e %16.8e %16.8e %16.8e\n", e, g1[e], fd1, g0[e], fd0);
  }
  const bool ok = err1 < o.tol && err0 < o.tol;
  std::printf("max relative error: with load sensitivities %.3e, frozen load %.3e (tol %.1e): %s\n",
              err1, err0, o.tol, ok ? "OK" : "FAILED");
  return ok ? 0 : 1;
}

struct ExportOptions {
  std::string checkpoint, vtk;
  bool no_mirror = false;
  bool density_only = false;
};

int cmd_export(const ExportOptions& o) {
  const io::Checkpoint cp = io::read_checkpoint(o.checkpoint);
  const GridMesh mesh = cp.mesh();
  const Vector* p = (!o.density_only && cp.pressure.size() > 0) ? &cp.pressure : nullptr;
  const Vector* u = (!o.density_only && cp.displacement.size() > 0) ? &cp.displacement : nullptr;
  const std::vector<Axis> mirror = o.no_mirror ? std::vector<Axis>{} : cp.mirror;
  io::write_vtk(io::make_voxel_export(mesh, cp.xphys, mirror, p, u), o.vtk);
  std::printf("wrote %s (%s, iteration %d)\n", o.vtk.c_str(), to_string(cp.preset), cp.iteration);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topology optimization of pressure-loaded 3D structures"};
  app.require_subcommand(1);

  ConfigFlags run_flags;
  CLI::App* run_cmd = app.add_subcommand("run", "Optimize a benchmark problem");
  run_flags.attach(*run_cmd);

  GradientOptions grad;
  CLI::App* grad_cmd =
      app.add_subcommand("check-gradient", "Compare adjoint and finite-difference gradients");
  grad_cmd->add_option("--preset", grad.preset, "lid, extpress, dam or hull")
      ->capture_default_str();
  grad_cmd->add_option("--nelx", grad.nelx)->capture_default_str()->check(CLI::PositiveNumber);
  grad_cmd->add_option("--nely", grad.nely)->capture_default_str()->check(CLI::PositiveNumber);
  grad_cmd->add_option("--nelz", grad.nelz)->capture_default_str()->check(CLI::PositiveNumber);
  grad_cmd->add_option("--step", grad.step, "finite-difference step")->capture_default_str();
  grad_cmd->add_option("--tol", grad.tol, "max relative error")->capture_default_str();
  grad_cmd->add_option("--seed", grad.seed, "random design seed")->capture_default_str();

  ExportOptions exp;
  CLI::App* exp_cmd = app.add_subcommand("export", "Write a VTK file from a saved checkpoint");
  exp_cmd->add_option("--checkpoint", exp.checkpoint, "checkpoint JSON from `run`")
      ->required()
      ->check(CLI::ExistingFile);
  exp_cmd->add_option("--vtk", exp.vtk, "output .vtk path")->required();
  exp_cmd->add_flag("--no-mirror", exp.no_mirror, "export the computed half domain only");
  exp_cmd->add_flag("--density-only", exp.density_only, "omit pressure and displacement");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    configure_threads();
    if (*run_cmd) return cmd_run(run_flags);
    if (*grad_cmd) return cmd_check_gradient(grad);
    if (*exp_cmd) return cmd_export(exp);
  } catch (const ConfigError& e) {
    std::cerr << "topress3d: configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "topress3d: error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
