#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include <Eigen/SparseCore>

#include "topress/common.hpp"
#include "topress/element.hpp"
#include "topress/mesh.hpp"

namespace topress {

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::ColMajor, Index>;

/// Symmetric matrix stored as its lower triangle (row >= col) only.
class SymmetricSparse {
 public:
  SymmetricSparse() = default;
  /// Throws InvalidArgument if `lower` is not square or has entries above the
  /// diagonal.
  explicit SymmetricSparse(SparseMatrix lower);

  Index size() const noexcept { return static_cast<Index>(lower_.rows()); }
  const SparseMatrix& lower() const noexcept { return lower_; }
  /// Full symmetric matrix L + Lᵀ - diag(L).
  SparseMatrix full() const;
  Eigen::MatrixXd dense() const;
  Vector operator*(const Vector& v) const;
  /// Max-row-sum norm of the full matrix.
  double norm_inf() const;

 private:
  SparseMatrix lower_;
};

/// Rectangular sparse matrix (the 3·nno x nno pressure-to-load map).
class RectSparse {
 public:
  RectSparse() = default;
  explicit RectSparse(SparseMatrix m) : m_(std::move(m)) {}

  Index rows() const noexcept { return static_cast<Index>(m_.rows()); }
  Index cols() const noexcept { return static_cast<Index>(m_.cols()); }
  const SparseMatrix& matrix() const noexcept { return m_; }
  Vector operator*(const Vector& v) const { return m_ * v; }
  Vector transpose_times(const Vector& v) const { return m_.transpose() * v; }

 private:
  SparseMatrix m_;
};

/// Lower-triangular sparsity pattern of a symmetric element-by-element
/// assembly, built once per mesh. `assemble` refills the values in a fixed
/// element order, so repeated assemblies are bit-identical.
class SymmetricPattern {
 public:
  /// `table` is row-major nel x `dofs_per_element`; `n` the global size.
  SymmetricPattern(std::span<const Index> table, int dofs_per_element, Index n);

  int dofs_per_element() const noexcept { return m_; }
  /// Entries of one element's packed lower triangle: m(m+1)/2.
  int packed_size() const noexcept { return m_ * (m_ + 1) / 2; }
  Index nel() const noexcept { return nel_; }

  /// `local(e, out)` writes element e's packed lower triangle (column by
  /// column) into `out`, which has packed_size() entries.
  template <class LocalFn>
  SymmetricSparse assemble(LocalFn&& local) const {
    SparseMatrix a = pattern_;
    double* values = a.valuePtr();
    std::fill(values, values + a.nonZeros(), 0.0);
    const int np = packed_size();
    std::vector<double> buf(static_cast<std::size_t>(np));
    for (Index e = 0; e < nel_; ++e) {
      local(e, std::span<double>(buf));
      const Index* slot = slots_.data() + static_cast<std::size_t>(e) * np;
      for (int t = 0; t < np; ++t) values[slot[t]] += buf[static_cast<std::size_t>(t)];
    }
    return SymmetricSparse(std::move(a));
  }

 private:
  int m_;
  Index nel_;
  SparseMatrix pattern_;
  std::vector<Index> slots_;  // nel x packed_size positions into pattern_ values
};

/// Flow matrix A = Σ_e scatter(K_e Kp + D_e KDp).
class FlowAssembler {
 public:
  explicit FlowAssembler(const GridMesh& mesh);
  SymmetricSparse assemble(std::span<const double> k_per_elem,
                           std::span<const double> d_per_elem) const;

 private:
  SymmetricPattern pattern_;
  std::vector<double> kp_lower_, kdp_lower_;
};

/// Stiffness matrix K = Σ_e E_e scatter(Ke(nu)).
class StiffnessAssembler {
 public:
  StiffnessAssembler(const GridMesh& mesh, double nu);
  SymmetricSparse assemble(std::span<const double> e_per_elem) const;

 private:
  SymmetricPattern pattern_;
  std::vector<double> ke_lower_;
};

SymmetricSparse assemble_flow(const GridMesh& mesh, std::span<const double> k_per_elem,
                              std::span<const double> d_per_elem);
SymmetricSparse assemble_stiffness(const GridMesh& mesh, std::span<const double> e_per_elem,
                                   double nu);
/// Design-independent global transformation matrix T (scatter of Te).
RectSparse assemble_transformation(const GridMesh& mesh);

/// Packed lower triangle (column by column) of a square matrix.
std::vector<double> pack_lower(const Eigen::MatrixXd& m);

}  // namespace topress
