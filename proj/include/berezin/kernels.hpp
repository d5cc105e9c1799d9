#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace berezin::kernels {

using cplx = std::complex<double>;

/// A point of C^n stored as n complex coordinates.
class ComplexPoint {
 public:
  ComplexPoint() = default;
  explicit ComplexPoint(std::vector<cplx> coords);
  ComplexPoint(std::initializer_list<cplx> coords) : ComplexPoint(std::vector<cplx>(coords)) {}

  int dim() const { return static_cast<int>(coords_.size()); }
  std::span<const cplx> coords() const { return coords_; }
  const cplx& operator[](std::size_t j) const { return coords_[j]; }

  double norm2() const;
  /// Hermitian pairing <z, w> = sum z_j conj(w_j).
  friend cplx hermitian(const ComplexPoint& z, const ComplexPoint& w);
  /// |z - w|^2
  friend double distance2(const ComplexPoint& z, const ComplexPoint& w);

 private:
  std::vector<cplx> coords_;
};

/// Convolution profile of the level-m Berezin transform on C^n:
///   b_m(z) = m! / ((n)_m pi^n) e^{-|z|^2} (L_m^(n-1)(|z|^2))^2.
struct RadialKernel {
  int m = 0;
  int n = 1;

  /// m! / ((n)_m pi^n)
  double normalization() const;
};

/// b_m evaluated at |z|^2 = r2 (r2 >= 0).
double kernel_b(const RadialKernel& k, double r2);

/// Reproducing kernel K_m(z, w) = pi^{-n} e^{<z,w>} L_m^(n-1)(|z-w|^2).
cplx kernel_K(int m, int n, const ComplexPoint& z, const ComplexPoint& w);

/// e^{-(|z|^2+|w|^2)/2} K_m(z, w); stays bounded for large arguments.
cplx kernel_K_weighted(int m, int n, const ComplexPoint& z, const ComplexPoint& w);

/// Normalized coherent state e_{z,m}(w) = pi^{n/2} (m!/(n)_m)^{1/2} e^{-|z|^2/2} K_m(z, w).
cplx coherent_state(int m, int n, const ComplexPoint& z, const ComplexPoint& w);

/// Complex samples on a uniform planar grid (n = 1): value(i, j) sits at
/// (x0 + i h, y0 + j h), stored row-major with i the slow index.
struct PlaneField {
  double x0 = 0.0;
  double y0 = 0.0;
  double h = 0.0;
  int nx = 0;
  int ny = 0;
  std::vector<cplx> values;

  cplx& at(int i, int j) { return values[static_cast<std::size_t>(i) * ny + j]; }
  const cplx& at(int i, int j) const { return values[static_cast<std::size_t>(i) * ny + j]; }
  cplx point(int i, int j) const { return {x0 + i * h, y0 + j * h}; }
};

/// Samples f on nx x ny points of spacing h starting at (x0, y0).
template <class F>
PlaneField sample_plane(double x0, double y0, double h, int nx, int ny, F&& f) {
  PlaneField p{x0, y0, h, nx, ny, std::vector<cplx>(static_cast<std::size_t>(nx) * ny)};
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) p.at(i, j) = f(p.point(i, j));
  return p;
}

/// Central-difference magnetic Laplacian -d^2/dz dzbar + zbar d/dzbar on C.
/// The outer ring of points has no stencil and is left at zero; see fd_interior.
PlaneField magnetic_laplacian_fd(const PlaneField& f);

/// True where magnetic_laplacian_fd produced a value.
inline bool fd_interior(const PlaneField& f, int i, int j) {
  return i > 0 && j > 0 && i < f.nx - 1 && j < f.ny - 1;
}

}  // namespace berezin::kernels
