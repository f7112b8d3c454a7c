#pragma once

#include <memory>
#include <span>
#include <vector>

#include "topress/assembly.hpp"
#include "topress/common.hpp"

namespace topress {

/// Prescribed pressures; values are in units of the inlet pressure.
struct PressureBC {
  std::vector<Index> fixed_dofs;
  std::vector<double> fixed_values;

  /// Throws InvalidArgument on size mismatch, duplicates, out-of-range
  /// indices or non-finite values.
  void validate(Index nno) const;
};

/// Homogeneous displacement supports.
struct DisplacementBC {
  std::vector<Index> fixed_dofs;

  void validate(Index ndof) const;
};

/// Split of 0..n-1 into free and fixed DOFs. Both lists ascend.
class DofPartition {
 public:
  DofPartition(Index n, std::span<const Index> fixed);

  Index size() const noexcept { return static_cast<Index>(free_index_.size()); }
  const std::vector<Index>& free() const noexcept { return free_; }
  const std::vector<Index>& fixed() const noexcept { return fixed_; }
  bool is_fixed(Index i) const noexcept { return free_index_[i] < 0; }
  /// Position of DOF i in free(), or -1 if fixed.
  Index free_index(Index i) const noexcept { return free_index_[i]; }

  Vector gather_free(const Vector& full) const;
  /// Full-size vector equal to `values` on free DOFs and zero elsewhere.
  Vector scatter_free(const Vector& values) const;

 private:
  std::vector<Index> free_, fixed_, free_index_;
};

/// Lower triangle of the free-free block of a symmetric matrix.
SparseMatrix extract_free_block(const SymmetricSparse& a, const DofPartition& part);

/// Partitioned solve of A p = 0 with prescribed pressures: the free block is
/// factorized (LDLᵀ) once and kept for the adjoint solve of the same iteration.
class PressureSolver {
 public:
  /// Throws SolverError("singular flow system ...") if the free block is
  /// singular, e.g. no prescribed DOFs on a design without drainage.
  PressureSolver(const SymmetricSparse& a, const PressureBC& bc);
  ~PressureSolver();
  PressureSolver(PressureSolver&&) noexcept;
  PressureSolver& operator=(PressureSolver&&) noexcept;

  /// Nodal pressure, equal to the prescribed values on fixed DOFs.
  const Vector& pressure() const noexcept { return p_; }
  const DofPartition& partition() const noexcept { return part_; }
  /// A_ff⁻¹ rhs (A_ff is symmetric, so this also serves Aᵀ solves).
  Vector solve_free(const Vector& rhs) const;

 private:
  struct Impl;
  DofPartition part_;
  std::unique_ptr<Impl> impl_;
  Vector p_;
};

/// Nodal pressure field for flow matrix `a` and boundary data `bc`.
Vector solve_pressure(const SymmetricSparse& a, const PressureBC& bc);

/// Residual diagnostics of a pressure solution.
struct PressureResiduals {
  double free_inf = 0.0;  ///< ‖(A p)_free‖∞; zero for an exact solve
  Vector prescribed;      ///< (A p) on prescribed DOFs: the boundary flux,
                          ///< in general nonzero
};
PressureResiduals pressure_residuals(const SymmetricSparse& a, const PressureBC& bc,
                                     const Vector& p);

/// Cholesky solve of K u = F on the free displacement DOFs.
class ElasticSolver {
 public:
  /// Throws SolverError naming the failing DOF when the free block is not
  /// positive definite and the backend can tell which.
  ElasticSolver(const SymmetricSparse& k, const DisplacementBC& bc);
  ~ElasticSolver();
  ElasticSolver(ElasticSolver&&) noexcept;
  ElasticSolver& operator=(ElasticSolver&&) noexcept;

  /// Full-size displacement, zero on fixed DOFs.
  Vector solve(const Vector& f) const;
  const DofPartition& partition() const noexcept { return part_; }

 private:
  struct Impl;
  DofPartition part_;
  std::unique_ptr<Impl> impl_;
};

Vector solve_elasticity(const SymmetricSparse& k, const Vector& f, const DisplacementBC& bc);

/// Name of the sparse Cholesky backend compiled in ("cholmod" or "eigen").
const char* elastic_backend_name() noexcept;

}  // namespace topress
