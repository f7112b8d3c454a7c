#include "topress/assembly.hpp"

#include <algorithm>
#include <string>

namespace topress {

SymmetricSparse::SymmetricSparse(SparseMatrix lower) : lower_(std::move(lower)) {
  if (lower_.rows() != lower_.cols()) throw InvalidArgument("SymmetricSparse: matrix not square");
  lower_.makeCompressed();
  for (Index c = 0; c < lower_.outerSize(); ++c) {
    for (SparseMatrix::InnerIterator it(lower_, c); it; ++it) {
      if (it.row() < it.col()) {
        throw InvalidArgument("SymmetricSparse: entry above the diagonal at (" +
                              std::to_string(it.row()) + ", " + std::to_string(it.col()) + ")");
      }
    }
  }
}

SparseMatrix SymmetricSparse::full() const {
  SparseMatrix upper = lower_.transpose();
  SparseMatrix f = lower_ + upper;
  f.diagonal() -= lower_.diagonal();
  return f;
}

Eigen::MatrixXd SymmetricSparse::dense() const { return Eigen::MatrixXd(full()); }

Vector SymmetricSparse::operator*(const Vector& v) const {
  return lower_.selfadjointView<Eigen::Lower>() * v;
}

double SymmetricSparse::norm_inf() const {
  Vector rows = Vector::Zero(size());
  for (Index c = 0; c < lower_.outerSize(); ++c) {
    for (SparseMatrix::InnerIterator it(lower_, c); it; ++it) {
      rows[it.row()] += std::abs(it.value());
      if (it.row() != it.col()) rows[it.col()] += std::abs(it.value());
    }
  }
  return size() > 0 ? rows.maxCoeff() : 0.0;
}

SymmetricPattern::SymmetricPattern(std::span<const Index> table, int dofs_per_element, Index n)
    : m_(dofs_per_element), nel_(static_cast<Index>(table.size() / dofs_per_element)) {
  const int np = packed_size();
  std::vector<Eigen::Triplet<double, Index>> trip;
  trip.reserve(static_cast<std::size_t>(nel_) * np);
  auto global_pair = [&](Index e, int i, int j) {
    const Index gi = table[static_cast<std::size_t>(e) * m_ + i];
    const Index gj = table[static_cast<std::size_t>(e) * m_ + j];
    return std::pair<Index, Index>{std::max(gi, gj), std::min(gi, gj)};
  };
  for (Index e = 0; e < nel_; ++e) {
    for (int j = 0; j < m_; ++j) {
      for (int i = j; i < m_; ++i) {
        const auto [r, c] = global_pair(e, i, j);
        trip.emplace_back(r, c, 0.0);
      }
    }
  }
  pattern_.resize(n, n);
  pattern_.setFromTriplets(trip.begin(), trip.end());
  pattern_.makeCompressed();

  slots_.resize(static_cast<std::size_t>(nel_) * np);
  const Index* outer = pattern_.outerIndexPtr();
  const Index* inner = pattern_.innerIndexPtr();
  for (Index e = 0; e < nel_; ++e) {
    int t = 0;
    for (int j = 0; j < m_; ++j) {
      for (int i = j; i < m_; ++i, ++t) {
        const auto [r, c] = global_pair(e, i, j);
        const Index* pos = std::lower_bound(inner + outer[c], inner + outer[c + 1], r);
        slots_[static_cast<std::size_t>(e) * np + t] = static_cast<Index>(pos - inner);
      }
    }
  }
}

std::vector<double> pack_lower(const Eigen::MatrixXd& m) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(m.rows() * (m.rows() + 1) / 2));
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = j; i < m.rows(); ++i) out.push_back(m(i, j));
  }
  return out;
}

namespace {

void check_length(std::span<const double> v, Index nel, const char* what) {
  if (static_cast<Index>(v.size()) != nel) {
    throw InvalidArgument(std::string(what) + ": expected " + std::to_string(nel) +
                          " per-element values, got " + std::to_string(v.size()));
  }
}

}  // namespace

FlowAssembler::FlowAssembler(const GridMesh& mesh)
    : pattern_(mesh.pressure_dof_table(), GridMesh::kNodesPerElement, mesh.nno()),
      kp_lower_(pack_lower(darcy_matrix())),
      kdp_lower_(pack_lower(drainage_matrix())) {}

SymmetricSparse FlowAssembler::assemble(std::span<const double> k_per_elem,
                                        std::span<const double> d_per_elem) const {
  check_length(k_per_elem, pattern_.nel(), "assemble_flow (K)");
  check_length(d_per_elem, pattern_.nel(), "assemble_flow (D)");
  return pattern_.assemble([&](Index e, std::span<double> out) {
    const double k = k_per_elem[e], d = d_per_elem[e];
    for (std::size_t t = 0; t < out.size(); ++t) out[t] = k * kp_lower_[t] + d * kdp_lower_[t];
  });
}

StiffnessAssembler::StiffnessAssembler(const GridMesh& mesh, double nu)
    : pattern_(mesh.displacement_dof_table(), GridMesh::kDofsPerElement, mesh.ndof()) {
  const auto lower = stiffness_lower(nu);
  ke_lower_.assign(lower.data(), lower.data() + lower.size());
}

SymmetricSparse StiffnessAssembler::assemble(std::span<const double> e_per_elem) const {
  check_length(e_per_elem, pattern_.nel(), "assemble_stiffness");
  return pattern_.assemble([&](Index e, std::span<double> out) {
    const double modulus = e_per_elem[e];
    for (std::size_t t = 0; t < out.size(); ++t) out[t] = modulus * ke_lower_[t];
  });
}

SymmetricSparse assemble_flow(const GridMesh& mesh, std::span<const double> k_per_elem,
                              std::span<const double> d_per_elem) {
  return FlowAssembler(mesh).assemble(k_per_elem, d_per_elem);
}

SymmetricSparse assemble_stiffness(const GridMesh& mesh, std::span<const double> e_per_elem,
                                   double nu) {
  return StiffnessAssembler(mesh, nu).assemble(e_per_elem);
}

RectSparse assemble_transformation(const GridMesh& mesh) {
  const Mat24x8& te = transformation_matrix();
  std::vector<Eigen::Triplet<double, Index>> trip;
  trip.reserve(static_cast<std::size_t>(mesh.nel()) * 192);
  for (Index e = 0; e < mesh.nel(); ++e) {
    const auto ud = mesh.displacement_dofs(e);
    const auto pd = mesh.pressure_dofs(e);
    for (int j = 0; j < 8; ++j) {
      for (int i = 0; i < 24; ++i) trip.emplace_back(ud[i], pd[j], te(i, j));
    }
  }
  SparseMatrix t(mesh.ndof(), mesh.nno());
  t.setFromTriplets(trip.begin(), trip.end());
  t.makeCompressed();
  return RectSparse(std::move(t));
}

}  // namespace topress
