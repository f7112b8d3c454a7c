#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include "topress/assembly.hpp"
#include "topress/common.hpp"
#include "topress/mesh.hpp"

namespace topress {

/// Hat kernel h(d) = max(0, rmin - d) on a cube of half-width ceil(rmin) - 1.
struct FilterKernel {
  struct Tap {
    int dx, dy, dz;
    double weight;
  };

  double rmin = 0.0;
  int half_width = 0;
  /// Nonzero taps only, ordered dx, then dy, then dz ascending.
  std::vector<Tap> taps;

  /// Throws InvalidArgument unless rmin is finite and > 0.
  explicit FilterKernel(double rmin);

  /// Weight at integer offset (dx, dy, dz); zero outside the stencil.
  double weight(int dx, int dy, int dz) const;
  double sum() const;
};

/// Linear density filter x̃ = (H x) / Hs and its exact adjoint.
class DensityFilter {
 public:
  virtual ~DensityFilter() = default;

  /// Physical densities from design densities.
  virtual Vector forward(const Vector& x) const = 0;
  /// Chain rule: maps d/dx̃ to d/dx, i.e. H (s / Hs).
  virtual Vector backward(const Vector& s) const = 0;
  /// Normalization field Hs = H 1.
  virtual const Vector& normalization() const noexcept = 0;
};

/// Zero-padded 3D convolution with the hat kernel.
class ConvolutionFilter final : public DensityFilter {
 public:
  ConvolutionFilter(const GridMesh& mesh, double rmin);

  Vector forward(const Vector& x) const override;
  Vector backward(const Vector& s) const override;
  const Vector& normalization() const noexcept override { return hs_; }
  const FilterKernel& kernel() const noexcept { return kernel_; }

  /// Unnormalized convolution H v.
  Vector convolve(const Vector& v) const;

 private:
  int nelx_, nely_, nelz_;
  FilterKernel kernel_;
  Vector hs_;
};

/// Explicit sparse weight matrix H (symmetric).
class MatrixFilter final : public DensityFilter {
 public:
  MatrixFilter(const GridMesh& mesh, double rmin);

  Vector forward(const Vector& x) const override;
  Vector backward(const Vector& s) const override;
  const Vector& normalization() const noexcept override { return hs_; }
  const SparseMatrix& matrix() const noexcept { return h_; }

 private:
  SparseMatrix h_;
  Vector hs_;
};

enum class FilterBackend { Convolution, Matrix };

/// Throws InvalidArgument for names other than "convolution" and "matrix".
FilterBackend parse_filter_backend(std::string_view name);
const char* to_string(FilterBackend backend) noexcept;

std::unique_ptr<DensityFilter> make_filter(FilterBackend backend, const GridMesh& mesh,
                                           double rmin);

}  // namespace topress
