#include "berezin/kernels.hpp"

#include <cmath>
#include <numbers>

#include "berezin/errors.hpp"
#include "berezin/specfun.hpp"

namespace berezin::kernels {

namespace {

void check_dims(int n, const ComplexPoint& z, const ComplexPoint& w) {
  if (n < 1) throw DomainError("kernel: dimension must be positive");
  if (z.dim() != n || w.dim() != n) throw DomainError("kernel: point dimension does not match n");
}

double laguerre_level(int m, int n, double x) {
  return specfun::laguerre({m, static_cast<double>(n - 1)}, x);
}

}  // namespace

ComplexPoint::ComplexPoint(std::vector<cplx> coords) : coords_(std::move(coords)) {
  for (const auto& c : coords_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw DomainError("ComplexPoint: non-finite coordinate");
    }
  }
}

double ComplexPoint::norm2() const {
  double s = 0.0;
  for (const auto& c : coords_) s += std::norm(c);
  return s;
}

cplx hermitian(const ComplexPoint& z, const ComplexPoint& w) {
  cplx s = 0.0;
  for (std::size_t j = 0; j < z.coords_.size(); ++j) s += z.coords_[j] * std::conj(w.coords_[j]);
  return s;
}

double distance2(const ComplexPoint& z, const ComplexPoint& w) {
  double s = 0.0;
  for (std::size_t j = 0; j < z.coords_.size(); ++j) s += std::norm(z.coords_[j] - w.coords_[j]);
  return s;
}

double RadialKernel::normalization() const {
  return specfun::factorial(m) /
         (specfun::pochhammer({static_cast<double>(n), m}) * std::pow(std::numbers::pi, n));
}

double kernel_b(const RadialKernel& k, double r2) {
  if (!(r2 >= 0.0)) throw DomainError("kernel_b: r2 must be non-negative");
  if (k.m < 0 || k.n < 1) throw DomainError("kernel_b: need m >= 0, n >= 1");
  const double l = laguerre_level(k.m, k.n, r2);
  return k.normalization() * std::exp(-r2) * l * l;
}

cplx kernel_K(int m, int n, const ComplexPoint& z, const ComplexPoint& w) {
  check_dims(n, z, w);
  return std::pow(std::numbers::pi, -n) * std::exp(hermitian(z, w)) *
         laguerre_level(m, n, distance2(z, w));
}

cplx kernel_K_weighted(int m, int n, const ComplexPoint& z, const ComplexPoint& w) {
  check_dims(n, z, w);
  // |z|^2 + |w|^2 - 2 Re<z,w> = |z-w|^2
  const double d2 = distance2(z, w);
  const double phase = hermitian(z, w).imag();
  return std::pow(std::numbers::pi, -n) * std::exp(-0.5 * d2) * std::polar(1.0, phase) *
         laguerre_level(m, n, d2);
}

cplx coherent_state(int m, int n, const ComplexPoint& z, const ComplexPoint& w) {
  check_dims(n, z, w);
  // K_m(z,z)^{-1/2} = pi^{n/2} (m!/(n)_m)^{1/2} e^{-|z|^2/2}
  const double ratio = specfun::factorial(m) / specfun::pochhammer({static_cast<double>(n), m});
  const double scale = std::pow(std::numbers::pi, 0.5 * n) * std::sqrt(ratio);
  // e^{-|z|^2/2} e^{<z,w>} folded into one exponent to delay overflow.
  return scale * std::pow(std::numbers::pi, -n) * std::exp(hermitian(z, w) - 0.5 * z.norm2()) *
         laguerre_level(m, n, distance2(z, w));
}

PlaneField magnetic_laplacian_fd(const PlaneField& f) {
  if (f.nx < 3 || f.ny < 3) throw DomainError("magnetic_laplacian_fd: grid needs at least 3x3 points");
  if (!(f.h > 0.0)) throw DomainError("magnetic_laplacian_fd: step must be positive");
  if (f.values.size() != static_cast<std::size_t>(f.nx) * f.ny) {
    throw DomainError("magnetic_laplacian_fd: value count does not match grid");
  }
  PlaneField out{f.x0, f.y0, f.h, f.nx, f.ny, std::vector<cplx>(f.values.size())};
  const double inv2h = 0.5 / f.h;
  const double invh2 = 1.0 / (f.h * f.h);
  const cplx I(0.0, 1.0);
  for (int i = 1; i < f.nx - 1; ++i) {
    for (int j = 1; j < f.ny - 1; ++j) {
      const cplx c = f.at(i, j);
      const cplx dx = (f.at(i + 1, j) - f.at(i - 1, j)) * inv2h;
      const cplx dy = (f.at(i, j + 1) - f.at(i, j - 1)) * inv2h;
      const cplx lap = (f.at(i + 1, j) + f.at(i - 1, j) + f.at(i, j + 1) + f.at(i, j - 1) - 4.0 * c) * invh2;
      // d^2/dz dzbar = lap/4,  d/dzbar = (dx + i dy)/2
      out.at(i, j) = -0.25 * lap + std::conj(f.point(i, j)) * 0.5 * (dx + I * dy);
    }
  }
  return out;
}

}  // namespace berezin::kernels
