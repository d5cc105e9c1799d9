#include "berezin/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "berezin/errors.hpp"

namespace berezin::specfun {

double laguerre(LaguerreParams params, double x) {
  const int k = params.degree;
  const double alpha = params.superscript;
  if (k < 0) throw DomainError("laguerre: negative degree");
  if (k > kMaxLaguerreDegree) {
    throw UnsupportedSize("laguerre: degree " + std::to_string(k) + " above ceiling " +
                          std::to_string(kMaxLaguerreDegree));
  }
  if (!std::isfinite(x)) throw DomainError("laguerre: non-finite argument");
  if (k == 0) return 1.0;

  // (j+1) L_{j+1} = (2j + 1 + alpha - x) L_j - (j + alpha) L_{j-1}
  double prev = 1.0;
  double cur = 1.0 + alpha - x;
  for (int j = 1; j < k; ++j) {
    const double next = ((2.0 * j + 1.0 + alpha - x) * cur - (j + alpha) * prev) / (j + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {

void check_bessel_args(int order, double x) {
  if (order < 0 || order > kMaxBesselOrder) {
    throw UnsupportedSize("bessel_j: order " + std::to_string(order) + " outside [0, " +
                          std::to_string(kMaxBesselOrder) + "]");
  }
  if (!(x >= 0.0)) throw DomainError("bessel_j: negative or NaN argument");
}

}  // namespace

double bessel_j_series(int order, double x) {
  check_bessel_args(order, x);
  if (x == 0.0) return order == 0 ? 1.0 : 0.0;
  const long double half = 0.5L * x;
  const long double q = half * half;
  long double term = 1.0L;
  for (int i = 1; i <= order; ++i) term *= half / i;
  long double sum = term;
  for (int k = 0; k < 500; ++k) {
    term *= -q / ((k + 1.0L) * (k + 1.0L + order));
    sum += term;
    if (k > half && std::fabs(term) <= 1e-21L * std::fabs(sum)) break;
  }
  return static_cast<double>(sum);
}

double bessel_j_miller(int order, double x) {
  check_bessel_args(order, x);
  if (x == 0.0) return order == 0 ? 1.0 : 0.0;

  const int top = std::max(order, static_cast<int>(x));
  int start = top + 30 + static_cast<int>(std::sqrt(40.0 * top));
  start += start % 2;

  // Backward recurrence J_{k-1} = (2k/x) J_k - J_{k+1}, normalized by J_0 + 2 sum J_{2k} = 1.
  double next = 0.0;
  double cur = 1e-300;
  double norm = 0.0;
  double wanted = 0.0;
  for (int k = start; k > 0; --k) {
    const double prev = (2.0 * k / x) * cur - next;
    next = cur;
    cur = prev;
    if (k - 1 == order) wanted = cur;
    if ((k - 1) % 2 == 0 && k - 1 > 0) norm += 2.0 * cur;
    if (std::fabs(cur) > 1e250) {
      cur *= 1e-250;
      next *= 1e-250;
      norm *= 1e-250;
      wanted *= 1e-250;
    }
  }
  norm += cur;
  if (order == 0) wanted = cur;
  return wanted / norm;
}

double bessel_j(int order, double x) {
  check_bessel_args(order, x);
  return x < kBesselSeamX ? bessel_j_series(order, x) : bessel_j_miller(order, x);
}

double pochhammer(PochhammerArgs args) {
  double r = 1.0;
  for (int i = 0; i < args.count; ++i) r *= args.base + i;
  return r;
}

std::int64_t pochhammer_int(std::int64_t base, int count) {
  std::int64_t r = 1;
  for (int i = 0; i < count; ++i) {
    if (__builtin_mul_overflow(r, base + i, &r)) {
      throw UnsupportedSize("pochhammer_int: overflow of 64-bit range");
    }
  }
  return r;
}

double binomial(double top, int bottom) {
  if (bottom < 0) throw DomainError("binomial: negative lower index");
  return pochhammer({top - bottom + 1.0, bottom}) / factorial(bottom);
}

double factorial(int k) {
  if (k < 0) throw DomainError("factorial: negative argument");
  double r = 1.0;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

}  // namespace berezin::specfun
