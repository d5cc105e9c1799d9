#pragma once

// Adaptive quadrature on [a, inf) with Gaussian or Bessel-oscillatory tails,
// the Hankel transform built on it, and the integral identities checked with it.

#include <complex>
#include <functional>
#include <utility>

namespace berezin::quadcheck {

using RealFn = std::function<double(double)>;

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
};

struct QuadOptions {
  double lower = 0.0;
  /// Angular frequency w of a J_order(w x) factor in the integrand; 0 for none.
  double oscillation = 0.0;
  int bessel_order = 0;
  long max_evaluations = 4'000'000;
};

/// int_lower^inf f(x) dx. Non-oscillatory integrands are split into geometrically
/// growing panels until the envelope drops below tol/10; with an oscillation hint the
/// panels end at approximate Bessel zeros and the partial sums are extrapolated with
/// Wynn's epsilon algorithm. Throws BudgetExceeded carrying the partial value.
QuadResult integrate_semiaxis(const RealFn& f, double tol, const QuadOptions& opts = {});

/// Adaptive Gauss-Kronrod (7/15) on a finite interval.
QuadResult integrate_interval(const RealFn& f, double a, double b, double tol,
                              long max_evaluations = 4'000'000);

/// H_order[u](x) = int_0^inf u(s) s J_order(s x) ds.
double hankel(int order, const RealFn& u, double x, double tol);

using Pair = std::pair<double, double>;  // (quadrature, closed form)

/// int_1^inf rho^{-n/2} J_n(a sqrt(rho)) drho  vs  2 a^{-1} J_{n-1}(a).
Pair verify_431(double a, int n, double tol = 1e-11);

/// int_t^inf lambda^{-n/2} J_n(x sqrt(lambda)) dlambda  vs  2 x^{-1} t^{(1-n)/2} J_{n-1}(x sqrt(t)).
Pair verify_432(double t, double x, int n, double tol = 1e-11);

/// int_0^inf x^{nu+1} e^{-x^2} L_p^(nu-sigma)(x^2) L_q^(sigma)(x^2) J_nu(x y) dx  vs
/// (-1)^{p+q}/2 (y/2)^nu e^{-y^2/4} L_p^(sigma-p+q)(y^2/4) L_q^(nu-sigma+p-q)(y^2/4).
Pair verify_434(int p, int q, int nu, int sigma, double y, double tol = 1e-11);

/// I_k = int_0^inf x^n e^{-x^2} L_m^(n-1)(x^2) L_{m-k}^(0)(x^2) J_{n-1}(x sqrt t) dx by quadrature
/// vs 2^{-n} (-1)^k t^{(n-1)/2} e^{-t/4} L_m^(-k)(t/4) L_{m-k}^(n+k-1)(t/4).
Pair verify_440(int m, int k, int n, double t, double tol = 1e-11);
/// The same closed form without the (-1)^k factor.
double ik_unsigned(int m, int k, int n, double t);

/// int_0^inf e^{-x} x^{n-1} L_p^(n-1) L_q^(n-1) dx  vs  delta_pq Gamma(n+p)/p!.
Pair verify_orthogonality(int p, int q, int n, double tol = 1e-12);

/// int_{C^n} b_m dmu by radial quadrature (expected 1).
QuadResult kernel_mass(int m, int n, double tol = 1e-13);

/// int_{R^2} e^{-|w|^2} e^{-i (xi|w)} dw by nested 1-D quadrature (expected pi e^{-|xi|^2/4}).
std::complex<double> gaussian_fourier_2d(double xi1, double xi2, double tol = 1e-12);

/// H_order applied twice to u, evaluated at s.
double hankel_involution(int order, const RealFn& u, double s, double tol);

}  // namespace berezin::quadcheck
