#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "berezin/errors.hpp"
#include "berezin/kernels.hpp"
#include "berezin/specfun.hpp"

using namespace berezin;
using namespace berezin::kernels;
constexpr double pi = std::numbers::pi;

namespace {

ComplexPoint random_point(std::mt19937& rng, int n, double scale = 1.5) {
  std::normal_distribution<double> d(0.0, scale);
  std::vector<cplx> c;
  for (int j = 0; j < n; ++j) c.emplace_back(d(rng), d(rng));
  return ComplexPoint(c);
}

struct Residual {
  double relative;
};

Residual eigen_residual(int m, cplx z0, double h) {
  const int N = static_cast<int>(std::lround(8.0 / h)) + 1;
  const ComplexPoint zp{z0};
  const PlaneField f = sample_plane(-4.0, -4.0, h, N, N, [&](cplx w) { return kernel_K(m, 1, ComplexPoint{w}, zp); });
  const PlaneField lf = magnetic_laplacian_fd(f);
  double num = 0.0, den = 0.0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      den = std::max(den, std::abs(f.at(i, j)));
      if (fd_interior(f, i, j)) num = std::max(num, std::abs(lf.at(i, j) - double(m) * f.at(i, j)));
    }
  return {num / den};
}

}  // namespace

TEST(KernelB, Examples) {
  EXPECT_NEAR(kernel_b({0, 1}, 0.0), 1.0 / pi, 1e-15);
  EXPECT_NEAR(kernel_b({1, 1}, 1.0), 0.0, 1e-16);
  EXPECT_NEAR(kernel_b({2, 2}, 0.0), 3.0 / (pi * pi), 1e-15);
  EXPECT_THROW(kernel_b({0, 1}, -0.1), DomainError);
}

TEST(KernelB, NonNegative) {
  for (int m = 0; m <= 8; ++m)
    for (int n = 1; n <= 4; ++n)
      for (double r2 = 0.0; r2 < 60.0; r2 += 0.173) EXPECT_GE(kernel_b({m, n}, r2), 0.0);
}

TEST(KernelK, OriginAndDiagonal) {
  for (int n = 1; n <= 3; ++n) {
    const ComplexPoint o(std::vector<cplx>(static_cast<std::size_t>(n)));
    EXPECT_NEAR(kernel_K(0, n, o, o).real(), std::pow(pi, -n), 1e-15);
  }
  std::mt19937 rng(1);
  for (int m = 0; m <= 5; ++m)
    for (int n = 1; n <= 3; ++n) {
      const ComplexPoint z = random_point(rng, n, 0.8);
      const double want = std::pow(pi, -n) * std::exp(z.norm2()) * specfun::pochhammer({double(n), m}) /
                          specfun::factorial(m);
      const cplx got = kernel_K(m, n, z, z);
      EXPECT_NEAR(got.real(), want, 1e-12 * want);
      EXPECT_NEAR(got.imag(), 0.0, 1e-12 * want);
    }
}

TEST(KernelK, HermitianSymmetry) {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = trial % 5, n = 1 + trial % 3;
    const ComplexPoint z = random_point(rng, n), w = random_point(rng, n);
    const cplx a = kernel_K(m, n, z, w), b = std::conj(kernel_K(m, n, w, z));
    EXPECT_NEAR(std::abs(a - b), 0.0, 1e-13 * std::max(1.0, std::abs(a)));
  }
}

TEST(KernelK, WeightedVariant) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = trial % 4, n = 1 + trial % 2;
    const ComplexPoint z = random_point(rng, n), w = random_point(rng, n);
    const cplx direct = std::exp(-0.5 * (z.norm2() + w.norm2())) * kernel_K(m, n, z, w);
    EXPECT_NEAR(std::abs(kernel_K_weighted(m, n, z, w) - direct), 0.0, 1e-13);
  }
  // stays finite far out
  const ComplexPoint far{cplx(40.0, -35.0)};
  EXPECT_TRUE(std::isfinite(std::abs(kernel_K_weighted(3, 1, far, far))));
}

TEST(KernelK, DimensionMismatch) {
  EXPECT_THROW(kernel_K(0, 2, ComplexPoint{cplx(1.0)}, ComplexPoint{cplx(1.0)}), DomainError);
}

TEST(CoherentState, Examples) {
  const ComplexPoint o1{cplx(0.0)};
  EXPECT_NEAR(coherent_state(0, 1, o1, o1).real(), 1.0 / std::sqrt(pi), 1e-15);
  for (int m = 0; m <= 6; ++m)
    for (int n = 1; n <= 3; ++n) {
      const ComplexPoint o(std::vector<cplx>(static_cast<std::size_t>(n)));
      const double want = std::pow(pi, -0.5 * n) *
                          std::sqrt(specfun::pochhammer({double(n), m}) / specfun::factorial(m));
      EXPECT_NEAR(coherent_state(m, n, o, o).real(), want, 1e-14 * want);
    }
}

TEST(CoherentState, IsNormalizedKernelSection) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = trial % 5, n = 1 + trial % 3;
    const ComplexPoint z = random_point(rng, n, 0.9), w = random_point(rng, n, 0.9);
    const cplx want = kernel_K(m, n, z, w) / std::sqrt(kernel_K(m, n, z, z).real());
    const cplx got = coherent_state(m, n, z, w);
    EXPECT_NEAR(std::abs(got - want), 0.0, 1e-12 * std::max(1.0, std::abs(want)));
  }
}

TEST(MagneticLaplacian, ConstantsAreAnnihilated) {
  const PlaneField f = sample_plane(-1.0, -1.0, 0.1, 21, 21, [](cplx) { return cplx(1.0); });
  const PlaneField lf = magnetic_laplacian_fd(f);
  for (int i = 1; i < 20; ++i)
    for (int j = 1; j < 20; ++j) EXPECT_EQ(lf.at(i, j), cplx(0.0));
}

TEST(MagneticLaplacian, ConjugateCoordinateHasEigenvalueOne) {
  const PlaneField f = sample_plane(-1.0, -1.0, 0.05, 41, 41, [](cplx w) { return std::conj(w); });
  const PlaneField lf = magnetic_laplacian_fd(f);
  for (int i = 1; i < 40; ++i)
    for (int j = 1; j < 40; ++j) EXPECT_NEAR(std::abs(lf.at(i, j) - f.at(i, j)), 0.0, 1e-12);
}

TEST(MagneticLaplacian, TooSmallGrid) {
  const PlaneField f = sample_plane(0.0, 0.0, 0.1, 2, 5, [](cplx) { return cplx(1.0); });
  EXPECT_THROW(magnetic_laplacian_fd(f), DomainError);
}

TEST(MagneticLaplacian, ReproducingKernelIsEigenfunction) {
  for (int m = 0; m <= 3; ++m) {
    for (cplx z0 : {cplx(0.0, 0.0), cplx(0.7, 0.3)}) {
      const double r1 = eigen_residual(m, z0, 1e-2).relative;
      const double r2 = eigen_residual(m, z0, 5e-3).relative;
      EXPECT_LE(r1, 1e-3) << "m=" << m;
      if (r1 < 1e-9) continue;  // stencil is exact on polynomials of degree <= 3; only roundoff left
      const double order = std::log2(r1 / r2);
      EXPECT_NEAR(order, 2.0, 0.2) << "m=" << m << " z0=" << z0;
    }
  }
}
