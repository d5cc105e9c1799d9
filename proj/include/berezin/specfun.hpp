#pragma once

#include <cstdint>

namespace berezin::specfun {

inline constexpr int kMaxLaguerreDegree = 64;
inline constexpr int kMaxBesselOrder = 32;
/// Arguments below this use the ascending series, above it Miller's backward recurrence.
inline constexpr double kBesselSeamX = 12.0;

struct LaguerreParams {
  int degree = 0;
  double superscript = 0.0;
};

struct PochhammerArgs {
  double base = 0.0;
  int count = 0;
};

/// Generalized Laguerre polynomial L_k^(alpha)(x) by upward three-term recurrence.
/// Throws UnsupportedSize above kMaxLaguerreDegree, DomainError for negative degree.
double laguerre(LaguerreParams params, double x);

/// Bessel function of the first kind J_order(x), 0 <= order <= 32, x >= 0.
double bessel_j(int order, double x);

/// The two branches behind bessel_j, exposed so the seam can be tested.
double bessel_j_series(int order, double x);
double bessel_j_miller(int order, double x);

/// Rising factorial (alpha)_j; (alpha)_0 = 1 for every alpha, including 0.
double pochhammer(PochhammerArgs args);

/// Exact integer rising factorial; throws UnsupportedSize on int64 overflow.
std::int64_t pochhammer_int(std::int64_t base, int count);

/// Generalized binomial coefficient top (top-1) ... (top-bottom+1) / bottom!.
double binomial(double top, int bottom);

double factorial(int k);

}  // namespace berezin::specfun
