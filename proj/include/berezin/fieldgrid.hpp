#pragma once

// Uniform grids over R^{2n} = C^n (n = 1, 2), sampled complex fields, the
// continuous-convention Fourier transform on them, and the two ways of
// applying the Berezin transform B_m: convolution with b_m, and the
// spectral multiplier f_m(|xi|^2).

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace berezin::fieldgrid {

using cplx = std::complex<double>;

inline constexpr int kMaxPointsN1 = 4096;
inline constexpr int kMaxPointsN2 = 64;

/// Domain [-L, L)^{2n} with N points per real axis.
struct GridSpec {
  int n = 1;
  int points_per_axis = 0;
  double half_width = 0.0;

  /// Throws DomainError / UnsupportedSize on invalid geometry.
  void validate() const;

  int dims() const { return 2 * n; }
  double spacing() const { return 2.0 * half_width / points_per_axis; }
  std::size_t size() const;
  /// Real coordinate of sample index i along any axis.
  double coordinate(int i) const { return -half_width + i * spacing(); }
  /// Frequency of storage index k in a transformed field: pi (k - N/2) / L.
  double frequency(int k) const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Complex samples, row-major over the 2n real axes ordered
/// (Re z_1, Im z_1, ..., Re z_n, Im z_n). Fields returned by fourier_forward
/// use the same layout on the centered frequency grid (see GridSpec::frequency).
struct Field {
  GridSpec grid;
  std::vector<cplx> values;

  static Field zeros(const GridSpec& grid);
  /// Throws if values do not match the grid or are non-finite.
  void validate() const;
};

/// Splits a flat index into per-axis indices.
void unravel(const GridSpec& grid, std::size_t flat, std::span<int> idx);

/// Samples f(coords) at every grid point; coords has 2n entries.
template <class F>
Field sample(const GridSpec& grid, F&& f) {
  grid.validate();
  Field out = Field::zeros(grid);
  std::vector<int> idx(static_cast<std::size_t>(grid.dims()));
  std::vector<double> x(idx.size());
  for (std::size_t p = 0; p < out.values.size(); ++p) {
    unravel(grid, p, idx);
    for (std::size_t a = 0; a < idx.size(); ++a) x[a] = grid.coordinate(idx[a]);
    out.values[p] = f(std::span<const double>(x));
  }
  return out;
}

/// Samples a radial profile g(|w|^2).
template <class G>
Field sample_radial(const GridSpec& grid, G&& g) {
  return sample(grid, [&](std::span<const double> x) {
    double r2 = 0.0;
    for (double v : x) r2 += v * v;
    return cplx(g(r2));
  });
}

/// Discrete approximation of F[f](xi) = int e^{-i (xi|w)} f(w) dw on the centered frequency grid.
Field fourier_forward(const Field& f);
/// Inverse of fourier_forward: (2 pi)^{-2n} int e^{i (xi|w)} F(xi) dxi.
Field fourier_inverse(const Field& spectrum);

/// Smallest half-width (on a 0.25 lattice) whose exterior holds less than 1e-12 of the mass of b_m.
double min_half_width(int m, int n);

/// fourier_forward of the sampled kernel b_m; compare against f_m(|xi|^2).
Field kernel_spectrum(int m, const GridSpec& grid);

/// B_m f as a periodic convolution with the sampled kernel.
/// Throws KernelTruncation when the grid is narrower than min_half_width(m, n).
Field apply_berezin_conv(int m, const Field& f);

/// B_m f as f_m(|xi|^2) applied to the transform of f.
Field apply_berezin_spectral(int m, const Field& f);

/// sqrt(h^{2n} sum |f|^2)
double l2_norm(const Field& f);
/// h^{2n} sum f conj(g)
cplx inner(const Field& f, const Field& g);

}  // namespace berezin::fieldgrid
