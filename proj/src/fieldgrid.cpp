#include "berezin/fieldgrid.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <string>
#include <unordered_map>

#include "berezin/errors.hpp"
#include "berezin/kernels.hpp"
#include "berezin/multiplier.hpp"

namespace berezin::fieldgrid {

namespace {

bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

// FFTW's planner is not re-entrant; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

void dft_in_place(const GridSpec& grid, std::vector<cplx>& data, int sign) {
  std::vector<int> dims(static_cast<std::size_t>(grid.dims()), grid.points_per_axis);
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft(grid.dims(), dims.data(), buf, buf, sign, FFTW_ESTIMATE);
  }
  if (!plan) throw Error("fftw: plan creation failed");
  fftw_execute_dft(plan, buf, buf);
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(plan);
}

// Parity of the index sum, optionally with each index shifted by -N/2.
void apply_parity(const GridSpec& grid, std::vector<cplx>& data, bool centered, double scale) {
  const int N = grid.points_per_axis;
  const int shift = centered ? N / 2 : 0;
  std::vector<int> idx(static_cast<std::size_t>(grid.dims()));
  for (std::size_t p = 0; p < data.size(); ++p) {
    unravel(grid, p, idx);
    int s = 0;
    for (int i : idx) s += i - shift;
    data[p] *= (s & 1) ? -scale : scale;
  }
}

void forward_in_place(const GridSpec& grid, std::vector<cplx>& data) {
  // F_k = h^d (-1)^{sum kappa} DFT[(-1)^{sum j} f_j]_k,  kappa = k - N/2
  apply_parity(grid, data, false, 1.0);
  dft_in_place(grid, data, FFTW_FORWARD);
  apply_parity(grid, data, true, std::pow(grid.spacing(), grid.dims()));
}

void inverse_in_place(const GridSpec& grid, std::vector<cplx>& data) {
  const double scale = std::pow(grid.spacing() * grid.points_per_axis, -grid.dims());
  apply_parity(grid, data, true, 1.0);
  dft_in_place(grid, data, FFTW_BACKWARD);
  apply_parity(grid, data, false, scale);
}

double tail_mass(int m, int n, double radius) {
  // int_{|w| > radius} b_m dmu by composite Simpson in r; the integrand is
  // Gaussian-dominated, 12 units past the radius is far below 1e-30.
  const kernels::RadialKernel k{m, n};
  const double sphere = 2.0 * std::pow(std::numbers::pi, n) / std::tgamma(n);
  const int panels = 4000;
  const double width = 12.0;
  const double h = width / panels;
  auto g = [&](double r) { return kernels::kernel_b(k, r * r) * std::pow(r, 2 * n - 1); };
  double s = g(radius) + g(radius + width);
  for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0 : 2.0) * g(radius + i * h);
  return sphere * s * h / 3.0;
}

}  // namespace

void GridSpec::validate() const {
  if (n != 1 && n != 2) throw UnsupportedSize("GridSpec: only n = 1 and n = 2 are supported");
  if (!is_power_of_two(points_per_axis) || points_per_axis < 4) {
    throw DomainError("GridSpec: points_per_axis must be a power of two >= 4");
  }
  const int cap = n == 1 ? kMaxPointsN1 : kMaxPointsN2;
  if (points_per_axis > cap) {
    throw UnsupportedSize("GridSpec: points_per_axis above cap " + std::to_string(cap) + " for n = " +
                          std::to_string(n));
  }
  if (!(half_width > 0.0) || !std::isfinite(half_width)) throw DomainError("GridSpec: half_width must be positive");
}

std::size_t GridSpec::size() const {
  std::size_t s = 1;
  for (int a = 0; a < dims(); ++a) s *= static_cast<std::size_t>(points_per_axis);
  return s;
}

double GridSpec::frequency(int k) const {
  return std::numbers::pi * (k - points_per_axis / 2) / half_width;
}

Field Field::zeros(const GridSpec& grid) {
  grid.validate();
  return {grid, std::vector<cplx>(grid.size())};
}

void Field::validate() const {
  grid.validate();
  if (values.size() != grid.size()) throw DomainError("Field: value count does not match grid");
  for (const auto& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw DomainError("Field: non-finite value");
  }
}

void unravel(const GridSpec& grid, std::size_t flat, std::span<int> idx) {
  const auto N = static_cast<std::size_t>(grid.points_per_axis);
  for (std::size_t a = idx.size(); a-- > 0;) {
    idx[a] = static_cast<int>(flat % N);
    flat /= N;
  }
}

Field fourier_forward(const Field& f) {
  f.validate();
  Field out = f;
  forward_in_place(out.grid, out.values);
  return out;
}

Field fourier_inverse(const Field& spectrum) {
  spectrum.validate();
  Field out = spectrum;
  inverse_in_place(out.grid, out.values);
  return out;
}

double min_half_width(int m, int n) {
  static std::mutex mu;
  static std::unordered_map<long, double> cache;
  const long key = static_cast<long>(m) * 16 + n;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  double L = 0.25;
  while (tail_mass(m, n, L) > 1e-12) L += 0.25;
  std::lock_guard lock(mu);
  cache.emplace(key, L);
  return L;
}

Field kernel_spectrum(int m, const GridSpec& grid) {
  const kernels::RadialKernel k{m, grid.n};
  Field b = sample_radial(grid, [&](double r2) { return kernels::kernel_b(k, r2); });
  forward_in_place(grid, b.values);
  return b;
}

Field apply_berezin_conv(int m, const Field& f) {
  f.validate();
  const double need = min_half_width(m, f.grid.n);
  if (f.grid.half_width < need) {
    throw KernelTruncation("apply_berezin_conv: half_width " + std::to_string(f.grid.half_width) +
                               " too small for m = " + std::to_string(m) + ", need " + std::to_string(need),
                           need);
  }
  Field kernel = kernel_spectrum(m, f.grid);
  Field out = f;
  forward_in_place(out.grid, out.values);
  for (std::size_t p = 0; p < out.values.size(); ++p) out.values[p] *= kernel.values[p];
  kernel.values.clear();
  kernel.values.shrink_to_fit();
  inverse_in_place(out.grid, out.values);
  return out;
}

Field apply_berezin_spectral(int m, const Field& f) {
  f.validate();
  const multiplier::MultiplierFn fm(m, f.grid.n);
  const GridSpec& g = f.grid;
  const int half = g.points_per_axis / 2;
  const double dxi = std::numbers::pi / g.half_width;

  // |xi|^2 = dxi^2 * (integer sum of kappa^2): tabulate f_m once per distinct value.
  const int max_q = g.dims() * half * half;
  std::vector<double> table(static_cast<std::size_t>(max_q) + 1);
  for (int q = 0; q <= max_q; ++q) table[static_cast<std::size_t>(q)] = fm(dxi * dxi * q);

  Field out = f;
  forward_in_place(g, out.values);
  std::vector<int> idx(static_cast<std::size_t>(g.dims()));
  for (std::size_t p = 0; p < out.values.size(); ++p) {
    unravel(g, p, idx);
    int q = 0;
    for (int i : idx) q += (i - half) * (i - half);
    out.values[p] *= table[static_cast<std::size_t>(q)];
  }
  inverse_in_place(g, out.values);
  return out;
}

double l2_norm(const Field& f) {
  double s = 0.0;
  for (const auto& v : f.values) s += std::norm(v);
  return std::sqrt(s * std::pow(f.grid.spacing(), f.grid.dims()));
}

cplx inner(const Field& f, const Field& g) {
  if (!(f.grid == g.grid)) throw DomainError("inner: grids differ");
  cplx s = 0.0;
  for (std::size_t p = 0; p < f.values.size(); ++p) s += f.values[p] * std::conj(g.values[p]);
  return s * std::pow(f.grid.spacing(), f.grid.dims());
}

}  // namespace berezin::fieldgrid
