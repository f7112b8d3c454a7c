#include "topress/linsolve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/SparseCholesky>

#ifdef TOPRESS_HAVE_CHOLMOD
#include <Eigen/CholmodSupport>
#endif

namespace topress {

namespace {

void check_distinct_in_range(std::span<const Index> dofs, Index n, const char* what) {
  std::vector<Index> sorted(dofs.begin(), dofs.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument(std::string(what) + ": duplicate fixed DOF");
  }
  if (!sorted.empty() && (sorted.front() < 0 || sorted.back() >= n)) {
    throw InvalidArgument(std::string(what) + ": fixed DOF outside [0, " + std::to_string(n) + ")");
  }
}

}  // namespace

void PressureBC::validate(Index nno) const {
  if (fixed_dofs.size() != fixed_values.size()) {
    throw InvalidArgument("PressureBC: fixed_dofs and fixed_values differ in length");
  }
  check_distinct_in_range(fixed_dofs, nno, "PressureBC");
  for (double v : fixed_values) {
    if (!std::isfinite(v)) throw InvalidArgument("PressureBC: non-finite prescribed value");
  }
}

void DisplacementBC::validate(Index ndof) const {
  check_distinct_in_range(fixed_dofs, ndof, "DisplacementBC");
}

DofPartition::DofPartition(Index n, std::span<const Index> fixed)
    : free_index_(static_cast<std::size_t>(n), 0) {
  for (Index i : fixed) {
    if (i < 0 || i >= n) throw InvalidArgument("DofPartition: fixed DOF out of range");
    free_index_[i] = -1;
  }
  for (Index i = 0; i < n; ++i) {
    if (free_index_[i] < 0) {
      fixed_.push_back(i);
    } else {
      free_index_[i] = static_cast<Index>(free_.size());
      free_.push_back(i);
    }
  }
}

Vector DofPartition::gather_free(const Vector& full) const {
  Vector out(static_cast<Eigen::Index>(free_.size()));
  for (std::size_t k = 0; k < free_.size(); ++k) out[static_cast<Eigen::Index>(k)] = full[free_[k]];
  return out;
}

Vector DofPartition::scatter_free(const Vector& values) const {
  Vector out = Vector::Zero(size());
  for (std::size_t k = 0; k < free_.size(); ++k) out[free_[k]] = values[static_cast<Eigen::Index>(k)];
  return out;
}

SparseMatrix extract_free_block(const SymmetricSparse& a, const DofPartition& part) {
  const SparseMatrix& l = a.lower();
  const auto nf = static_cast<Index>(part.free().size());
  SparseMatrix sub(nf, nf);
  sub.reserve(l.nonZeros());
  // The free numbering is monotone, so rows stay sorted within each column.
  for (Index fc = 0; fc < nf; ++fc) {
    sub.startVec(fc);
    for (SparseMatrix::InnerIterator it(l, part.free()[fc]); it; ++it) {
      const Index fr = part.free_index(static_cast<Index>(it.row()));
      if (fr >= 0) sub.insertBack(fr, fc) = it.value();
    }
  }
  sub.finalize();
  return sub;
}

// ---------------------------------------------------------------------------
// Pressure

struct PressureSolver::Impl {
  Eigen::SimplicialLDLT<SparseMatrix, Eigen::Lower> ldlt;
};

PressureSolver::PressureSolver(const SymmetricSparse& a, const PressureBC& bc)
    : part_(a.size(), bc.fixed_dofs), impl_(std::make_unique<Impl>()) {
  bc.validate(a.size());
  p_ = Vector::Zero(a.size());
  for (std::size_t k = 0; k < bc.fixed_dofs.size(); ++k) p_[bc.fixed_dofs[k]] = bc.fixed_values[k];
  if (part_.free().empty()) return;

  // rhs_f = -A_fp p_p, read from the lower triangle in both orientations.
  Vector rhs = Vector::Zero(static_cast<Eigen::Index>(part_.free().size()));
  const SparseMatrix& l = a.lower();
  for (Index c = 0; c < l.outerSize(); ++c) {
    for (SparseMatrix::InnerIterator it(l, c); it; ++it) {
      const auto r = static_cast<Index>(it.row());
      const Index fr = part_.free_index(r), fc = part_.free_index(c);
      if (fr >= 0 && fc < 0) rhs[fr] -= it.value() * p_[c];
      if (fc >= 0 && fr < 0) rhs[fc] -= it.value() * p_[r];
    }
  }

  impl_->ldlt.compute(extract_free_block(a, part_));
  bool singular = impl_->ldlt.info() != Eigen::Success;
  if (!singular) {
    const Vector& d = impl_->ldlt.vectorD();
    const double dmax = d.cwiseAbs().maxCoeff();
    singular = !(dmax > 0.0) || (d.array() <= 1e-12 * dmax).any();
  }
  if (singular) {
    throw SolverError(
        "singular flow system: the free pressure block has no positive pivot structure "
        "(prescribe at least one pressure DOF or provide drainage)");
  }
  const Vector pf = impl_->ldlt.solve(rhs);
  for (std::size_t k = 0; k < part_.free().size(); ++k) {
    p_[part_.free()[k]] = pf[static_cast<Eigen::Index>(k)];
  }
}

PressureSolver::~PressureSolver() = default;
PressureSolver::PressureSolver(PressureSolver&&) noexcept = default;
PressureSolver& PressureSolver::operator=(PressureSolver&&) noexcept = default;

Vector PressureSolver::solve_free(const Vector& rhs) const {
  if (part_.free().empty()) return Vector();
  return impl_->ldlt.solve(rhs);
}

Vector solve_pressure(const SymmetricSparse& a, const PressureBC& bc) {
  return PressureSolver(a, bc).pressure();
}

PressureResiduals pressure_residuals(const SymmetricSparse& a, const PressureBC& bc,
                                     const Vector& p) {
  const DofPartition part(a.size(), bc.fixed_dofs);
  const Vector ap = a * p;
  PressureResiduals r;
  for (Index i : part.free()) r.free_inf = std::max(r.free_inf, std::abs(ap[i]));
  r.prescribed.resize(static_cast<Eigen::Index>(bc.fixed_dofs.size()));
  for (std::size_t k = 0; k < bc.fixed_dofs.size(); ++k) {
    r.prescribed[static_cast<Eigen::Index>(k)] = ap[bc.fixed_dofs[k]];
  }
  return r;
}

// ---------------------------------------------------------------------------
// Elasticity

#ifdef TOPRESS_HAVE_CHOLMOD
namespace {

class SupernodalLLT : public Eigen::CholmodSupernodalLLT<SparseMatrix, Eigen::Lower> {
 public:
  SupernodalLLT() { this->cholmod().print = 0; }

  /// Column (in the original ordering) where factorization broke down, or -1.
  Index failed_column() const {
    const cholmod_factor* f = this->m_cholmodFactor;
    if (f == nullptr || f->minor >= f->n) return -1;
    const auto* perm = static_cast<const Index*>(f->Perm);
    return perm != nullptr ? perm[f->minor] : static_cast<Index>(f->minor);
  }
};

}  // namespace

struct ElasticSolver::Impl {
  SupernodalLLT llt;
};

const char* elastic_backend_name() noexcept { return "cholmod"; }
#else
struct ElasticSolver::Impl {
  Eigen::SimplicialLLT<SparseMatrix, Eigen::Lower> llt;
};

const char* elastic_backend_name() noexcept { return "eigen"; }
#endif

ElasticSolver::ElasticSolver(const SymmetricSparse& k, const DisplacementBC& bc)
    : part_(k.size(), bc.fixed_dofs), impl_(std::make_unique<Impl>()) {
  bc.validate(k.size());
  if (part_.free().empty()) return;
  impl_->llt.compute(extract_free_block(k, part_));
  if (impl_->llt.info() != Eigen::Success) {
    std::string msg = "stiffness matrix is not positive definite on the free DOFs";
#ifdef TOPRESS_HAVE_CHOLMOD
    const Index col = impl_->llt.failed_column();
    if (col >= 0 && col < static_cast<Index>(part_.free().size())) {
      const Index dof = part_.free()[col];
      msg += " (pivot failed at global DOF " + std::to_string(dof) + ", node " +
             std::to_string(dof / 3) + ", component " + "xyz"[dof % 3] + ")";
    }
#endif
    throw SolverError(msg);
  }
}

ElasticSolver::~ElasticSolver() = default;
ElasticSolver::ElasticSolver(ElasticSolver&&) noexcept = default;
ElasticSolver& ElasticSolver::operator=(ElasticSolver&&) noexcept = default;

Vector ElasticSolver::solve(const Vector& f) const {
  if (f.size() != part_.size()) {
    throw InvalidArgument("ElasticSolver::solve: load vector has wrong length");
  }
  if (part_.free().empty()) return Vector::Zero(part_.size());
  const Vector uf = impl_->llt.solve(part_.gather_free(f));
  if (impl_->llt.info() != Eigen::Success) throw SolverError("elastic back-substitution failed");
  return part_.scatter_free(uf);
}

Vector solve_elasticity(const SymmetricSparse& k, const Vector& f, const DisplacementBC& bc) {
  return ElasticSolver(k, bc).solve(f);
}

}  // namespace topress
