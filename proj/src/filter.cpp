#include "topress/filter.hpp"

#include <cmath>
#include <string>

namespace topress {

FilterKernel::FilterKernel(double r) : rmin(r) {
  if (!std::isfinite(r) || r <= 0.0) {
    throw InvalidArgument("filter: rmin must be finite and > 0 (got " + std::to_string(r) + ")");
  }
  half_width = static_cast<int>(std::ceil(r)) - 1;
  const int k = half_width;
  for (int dx = -k; dx <= k; ++dx) {
    for (int dy = -k; dy <= k; ++dy) {
      for (int dz = -k; dz <= k; ++dz) {
        const double w = r - std::sqrt(static_cast<double>(dx * dx + dy * dy + dz * dz));
        if (w > 0.0) taps.push_back({dx, dy, dz, w});
      }
    }
  }
}

double FilterKernel::weight(int dx, int dy, int dz) const {
  for (const Tap& t : taps) {
    if (t.dx == dx && t.dy == dy && t.dz == dz) return t.weight;
  }
  return 0.0;
}

double FilterKernel::sum() const {
  double s = 0.0;
  for (const Tap& t : taps) s += t.weight;
  return s;
}

ConvolutionFilter::ConvolutionFilter(const GridMesh& mesh, double rmin)
    : nelx_(mesh.nelx()), nely_(mesh.nely()), nelz_(mesh.nelz()), kernel_(rmin) {
  hs_ = convolve(Vector::Ones(mesh.nel()));
}

Vector ConvolutionFilter::convolve(const Vector& v) const {
  const Index nel = static_cast<Index>(nelx_) * nely_ * nelz_;
  if (v.size() != nel) throw InvalidArgument("filter: field has wrong length");
  Vector out(nel);
  const int nx = nelx_, ny = nely_, nz = nelz_;
#pragma omp parallel for schedule(static)
  for (int ix = 0; ix < nx; ++ix) {
    for (int iz = 0; iz < nz; ++iz) {
      for (int iy = 0; iy < ny; ++iy) {
        double acc = 0.0;
        for (const auto& t : kernel_.taps) {
          const int jx = ix + t.dx, jy = iy + t.dy, jz = iz + t.dz;
          if (jx < 0 || jx >= nx || jy < 0 || jy >= ny || jz < 0 || jz >= nz) continue;
          acc += t.weight * v[jy + jz * ny + static_cast<Index>(jx) * ny * nz];
        }
        out[iy + iz * ny + static_cast<Index>(ix) * ny * nz] = acc;
      }
    }
  }
  return out;
}

Vector ConvolutionFilter::forward(const Vector& x) const {
  return convolve(x).cwiseQuotient(hs_);
}

Vector ConvolutionFilter::backward(const Vector& s) const {
  if (s.size() != hs_.size()) throw InvalidArgument("filter: field has wrong length");
  return convolve(s.cwiseQuotient(hs_));
}

MatrixFilter::MatrixFilter(const GridMesh& mesh, double rmin) {
  const FilterKernel kernel(rmin);
  const int nx = mesh.nelx(), ny = mesh.nely(), nz = mesh.nelz();
  std::vector<Eigen::Triplet<double, Index>> trip;
  trip.reserve(static_cast<std::size_t>(mesh.nel()) * kernel.taps.size());
  for (int ix = 0; ix < nx; ++ix) {
    for (int iz = 0; iz < nz; ++iz) {
      for (int iy = 0; iy < ny; ++iy) {
        const Index e = mesh.element(ix, iy, iz);
        for (const auto& t : kernel.taps) {
          const int jx = ix + t.dx, jy = iy + t.dy, jz = iz + t.dz;
          if (jx < 0 || jx >= nx || jy < 0 || jy >= ny || jz < 0 || jz >= nz) continue;
          trip.emplace_back(e, mesh.element(jx, jy, jz), t.weight);
        }
      }
    }
  }
  h_.resize(mesh.nel(), mesh.nel());
  h_.setFromTriplets(trip.begin(), trip.end());
  h_.makeCompressed();
  hs_ = h_ * Vector::Ones(mesh.nel());
}

Vector MatrixFilter::forward(const Vector& x) const {
  if (x.size() != hs_.size()) throw InvalidArgument("filter: field has wrong length");
  return (h_ * x).cwiseQuotient(hs_);
}

Vector MatrixFilter::backward(const Vector& s) const {
  if (s.size() != hs_.size()) throw InvalidArgument("filter: field has wrong length");
  return h_.transpose() * s.cwiseQuotient(hs_);
}

FilterBackend parse_filter_backend(std::string_view name) {
  if (name == "convolution") return FilterBackend::Convolution;
  if (name == "matrix") return FilterBackend::Matrix;
  throw InvalidArgument("unknown filter backend '" + std::string(name) +
                        "' (expected convolution or matrix)");
}

const char* to_string(FilterBackend backend) noexcept {
  return backend == FilterBackend::Matrix ? "matrix" : "convolution";
}

std::unique_ptr<DensityFilter> make_filter(FilterBackend backend, const GridMesh& mesh,
                                           double rmin) {
  if (backend == FilterBackend::Matrix) return std::make_unique<MatrixFilter>(mesh, rmin);
  return std::make_unique<ConvolutionFilter>(mesh, rmin);
}

}  // namespace topress
