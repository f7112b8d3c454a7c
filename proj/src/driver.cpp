#include "topress/driver.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <memory>
#include <optional>

#include "topress/analysis.hpp"
#include "topress/io/checkpoint.hpp"
#include "topress/io/history.hpp"
#include "topress/io/vtk.hpp"

namespace topress {

void RunConfig::validate() const {
  auto require = [](bool ok, const char* field, const std::string& msg) {
    if (!ok) throw ConfigError(field, msg);
  };
  require(nelx >= 1, "nelx", "must be >= 1");
  require(nely >= 1, "nely", "must be >= 1");
  require(nelz >= 1, "nelz", "must be >= 1");
  require(volfrac > 0.0 && volfrac <= 1.0, "volfrac", "must lie in (0, 1]");
  require(std::isfinite(rmin) && rmin > 0.0, "rmin", "must be > 0");
  require(maxit >= 1, "maxit", "must be >= 1");
  require(std::isfinite(pin), "pin", "must be finite");
  require(move_limit > 0.0 && move_limit <= 1.0, "move", "must lie in (0, 1]");
  require(change_tol >= 0.0, "tol", "must be >= 0");
  require(norm_target > 0.0 && std::isfinite(norm_target), "norm-target", "must be > 0");
  require(elastic.penal >= 1.0, "penal", "must be >= 1");
  require(flow.eta > 0.0 && flow.eta < 1.0, "etaf", "must lie in (0, 1)");
  require(flow.beta > 0.0, "betaf", "must be > 0");
  require(flow.kv > 0.0, "kv", "must be > 0");
  require(flow.epsf > 0.0 && flow.epsf <= 1.0, "epsf", "must lie in (0, 1]");
  require(flow.r > 0.0 && flow.r < 1.0, "r", "must lie in (0, 1)");
  require(flow.dels > 0.0, "dels", "must be > 0");
  require(elastic.e1 > 0.0, "e1", "must be > 0");
  require(elastic.emin > 0.0 && elastic.emin < elastic.e1, "emin", "must lie in (0, e1)");
  require(elastic.nu >= 0.0 && elastic.nu < 0.5, "nu", "must lie in [0, 0.5)");
  try {
    mma.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError("mma", e.what());
  }
}

std::string format_progress(const IterationRecord& r) {
  char buf[128];
  std::snprintf(buf, sizeof buf, " It.:%4i Obj.:%8.4f Vol.:%6.4f ch.:%6.4f", r.iter,
                r.compliance_normalized, r.volfrac, r.change);
  return buf;
}

double effective_volfrac(const GridMesh& mesh, const ProblemPreset& preset, double volfrac) {
  const auto nact = static_cast<double>(preset.active_elements(mesh.nel()).size());
  return (volfrac * static_cast<double>(mesh.nel()) -
          static_cast<double>(preset.passive_solid.size())) /
         nact;
}

double active_mean(const Vector& xphys, const std::vector<Index>& active) {
  if (active.empty()) return 0.0;
  double s = 0.0;
  for (Index e : active) s += xphys[e];
  return s / static_cast<double>(active.size());
}

namespace {

Vector gather(const Vector& v, const std::vector<Index>& idx) {
  Vector out(static_cast<Eigen::Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) out[static_cast<Eigen::Index>(k)] = v[idx[k]];
  return out;
}

}  // namespace

RunResult run(const RunConfig& cfg, const ProgressFn& progress) {
  cfg.validate();
  using Clock = std::chrono::steady_clock;

  const GridMesh mesh(cfg.nelx, cfg.nely, cfg.nelz);
  RunResult res;
  res.preset = make_preset(cfg.preset, mesh, cfg.pin);
  const ProblemPreset& preset = res.preset;
  const Analysis analysis(mesh, preset.pressure_bc, preset.displacement_bc, cfg.flow,
                          cfg.elastic);
  const auto filter = make_filter(cfg.filter, mesh, cfg.rmin);
  const std::vector<Index> act = preset.active_elements(mesh.nel());
  const auto nact = static_cast<Index>(act.size());

  Vector x = initial_design(mesh, preset, cfg.volfrac);
  Vector xphys = x;
  const Vector dvol = gather(
      filter->backward(Vector::Constant(mesh.nel(), 1.0 / (mesh.nel() * cfg.volfrac))), act);

  Mma mma(nact, cfg.mma);
  std::optional<io::HistoryWriter> writer;
  if (!cfg.history_path.empty()) writer.emplace(cfg.history_path);

  int loop = 0;
  double change = 1.0;
  while (loop < cfg.maxit && change > cfg.change_tol) {
    ++loop;
    const auto t0 = Clock::now();

    AnalysisState state;
    SensitivityBundle sens;
    try {
      state = analysis.solve(xphys);
      sens = analysis.sensitivities(state, xphys, cfg.volfrac, cfg.lst);
    } catch (const SolverError& e) {
      throw SolverError("iteration " + std::to_string(loop) + ": " + e.what());
    }
    if (loop == 1) {
      if (!(state.compliance > 0.0) || !std::isfinite(state.compliance)) {
        throw SolverError("iteration 1: compliance is not positive, cannot normalize");
      }
      res.normf = cfg.norm_target / state.compliance;
    }
    const Vector dc = gather(filter->backward(sens.obj_grad * res.normf), act);

    const Vector xval = gather(x, act);
    const Vector xmin = (xval.array() - cfg.move_limit).cwiseMax(0.0);
    const Vector xmax = (xval.array() + cfg.move_limit).cwiseMin(1.0);
    Vector xnew;
    try {
      xnew = mma.update(xval, state.compliance * res.normf, dc, sens.vol, dvol, xmin, xmax);
    } catch (const Error& e) {
      throw SolverError("iteration " + std::to_string(loop) + ": " + e.what());
    }
    change = (xnew - xval).cwiseAbs().maxCoeff();

    for (Index k = 0; k < nact; ++k) x[act[k]] = xnew[k];
    xphys = filter->forward(x);
    for (Index e : preset.passive_solid) xphys[e] = 1.0;
    for (Index e : preset.passive_void) xphys[e] = 0.0;

    IterationRecord rec;
    rec.iter = loop;
    rec.compliance = state.compliance;
    rec.compliance_normalized = state.compliance * res.normf;
    rec.volfrac = xphys.mean();
    rec.change = change;
    rec.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    res.history.push_back(rec);
    res.p = std::move(state.p);
    res.u = std::move(state.u);
    if (writer) writer->append(rec);
    if (progress) progress(rec);
  }

  res.x = std::move(x);
  res.xphys = std::move(xphys);

  if (!cfg.vtk_path.empty()) {
    io::write_vtk(io::make_voxel_export(mesh, res.xphys, preset.mirror, &res.p, &res.u),
                  cfg.vtk_path);
  }
  if (!cfg.checkpoint_path.empty()) {
    io::Checkpoint cp;
    cp.nelx = cfg.nelx;
    cp.nely = cfg.nely;
    cp.nelz = cfg.nelz;
    cp.preset = cfg.preset;
    cp.mirror = preset.mirror;
    cp.iteration = loop;
    cp.xphys = res.xphys;
    cp.x = res.x;
    cp.pressure = res.p;
    cp.displacement = res.u;
    io::write_checkpoint(cp, cfg.checkpoint_path);
  }
  return res;
}

}  // namespace topress
