#include "berezin/quadcheck.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <vector>

#include "berezin/errors.hpp"
#include "berezin/kernels.hpp"
#include "berezin/specfun.hpp"

namespace berezin::quadcheck {

namespace {

using specfun::bessel_j;
using specfun::laguerre;

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1].
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const RealFn& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double k = fc * kWgk[7];
  double g = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[static_cast<std::size_t>(j)];
    const double s = f(c - dx) + f(c + dx);
    k += kWgk[static_cast<std::size_t>(j)] * s;
    if (j % 2 == 1) g += kWg[static_cast<std::size_t>(j / 2)] * s;
  }
  return {a, b, k * h, std::fabs((k - g) * h)};
}

// Wynn epsilon extrapolation of the last entries of a sequence of partial sums.
double wynn_epsilon(const std::vector<double>& sums) {
  const std::size_t take = std::min<std::size_t>(sums.size(), 41);
  std::vector<double> prev(take, 0.0);
  std::vector<double> cur(sums.end() - static_cast<std::ptrdiff_t>(take), sums.end());
  double best = cur.back();
  for (std::size_t col = 1; cur.size() > 1; ++col) {
    std::vector<double> next(cur.size() - 1);
    for (std::size_t j = 0; j + 1 < cur.size(); ++j) {
      const double d = cur[j + 1] - cur[j];
      if (d == 0.0) return cur[j + 1];
      next[j] = prev[j + 1] + 1.0 / d;
    }
    prev = std::move(cur);
    cur = std::move(next);
    if (col % 2 == 0) best = cur.back();
  }
  return best;
}

double integrate_line(const RealFn& f, double tol) {
  const auto right = integrate_semiaxis(f, 0.5 * tol);
  const auto left = integrate_semiaxis([&](double x) { return f(-x); }, 0.5 * tol);
  return right.value + left.value;
}

}  // namespace

QuadResult integrate_interval(const RealFn& f, double a, double b, double tol, long max_evaluations) {
  if (a == b) return {};
  std::priority_queue<Segment> heap;
  Segment first = gk15(f, a, b);
  long evals = 15;
  double total = first.value;
  double err = first.error;
  heap.push(first);
  while (err > tol) {
    if (evals + 30 > max_evaluations) {
      throw BudgetExceeded("integrate_interval: evaluation budget exhausted", total, err);
    }
    const Segment s = heap.top();
    heap.pop();
    const double mid = 0.5 * (s.a + s.b);
    if (!(mid > s.a && mid < s.b)) {
      throw BudgetExceeded("integrate_interval: interval below machine resolution", total, err);
    }
    const Segment l = gk15(f, s.a, mid);
    const Segment r = gk15(f, mid, s.b);
    evals += 30;
    total += l.value + r.value - s.value;
    err += l.error + r.error - s.error;
    heap.push(l);
    heap.push(r);
  }
  // Re-sum to shed accumulated cancellation in the running totals.
  total = 0.0;
  err = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  return {total, err, evals};
}

QuadResult integrate_semiaxis(const RealFn& f, double tol, const QuadOptions& opts) {
  if (!(tol > 0.0)) throw DomainError("integrate_semiaxis: tolerance must be positive");
  QuadResult out;
  const double panel_tol = tol / 16.0;
  std::vector<double> sums;
  int quiet = 0;
  double x = opts.lower;

  // Panel boundaries: either approximate zeros of J_order(w x), or a doubling sequence.
  const bool oscillatory = opts.oscillation > 0.0;
  const double half_period = oscillatory ? std::numbers::pi / opts.oscillation : 0.0;
  const double phase = (0.5 * opts.bessel_order - 0.25) * half_period;
  long next_zero = 1;
  if (oscillatory) {
    next_zero = std::max<long>(1, static_cast<long>(std::ceil((x - phase) / half_period)));
    while (phase + next_zero * half_period <= x) ++next_zero;
  }
  double width = 1.0;

  double extrap_prev = 0.0, extrap_prev2 = 0.0;
  for (int panel = 0; panel < 20000; ++panel) {
    double end;
    if (oscillatory) {
      end = phase + static_cast<double>(next_zero++) * half_period;
    } else {
      end = x + width;
      if (panel > 0) width *= 2.0;
    }
    const long remaining = opts.max_evaluations - out.evaluations;
    QuadResult seg;
    try {
      seg = integrate_interval(f, x, end, panel_tol, remaining);
    } catch (const BudgetExceeded& e) {
      throw BudgetExceeded("integrate_semiaxis: evaluation budget exhausted", out.value + e.partial(),
                           out.error_estimate + e.error_estimate());
    }
    out.value += seg.value;
    out.error_estimate += seg.error_estimate;
    out.evaluations += seg.evaluations;
    sums.push_back(out.value);
    x = end;

    quiet = (std::fabs(seg.value) + seg.error_estimate < 0.1 * tol) ? quiet + 1 : 0;
    if (quiet >= 2 && x > opts.lower + 1.0) return out;

    if (!oscillatory) {
      if (x > 1e6) break;
      continue;
    }
    if (sums.size() >= 8) {
      const double e = wynn_epsilon(sums);
      const double d1 = std::fabs(e - extrap_prev);
      const double d2 = std::fabs(e - extrap_prev2);
      if (sums.size() >= 10 && d1 < 0.1 * tol && d2 < 0.1 * tol) {
        return {e, out.error_estimate + d1 + d2, out.evaluations};
      }
      extrap_prev2 = extrap_prev;
      extrap_prev = e;
    }
  }
  throw BudgetExceeded("integrate_semiaxis: tail did not settle", out.value, out.error_estimate);
}

double hankel(int order, const RealFn& u, double x, double tol) {
  if (!(x >= 0.0)) throw DomainError("hankel: x must be non-negative");
  QuadOptions opts;
  opts.oscillation = x;
  opts.bessel_order = order;
  return integrate_semiaxis([&](double s) { return u(s) * s * bessel_j(order, s * x); }, tol, opts).value;
}

double hankel_involution(int order, const RealFn& u, double s, double tol) {
  const RealFn inner = [&](double t) { return hankel(order, u, t, 0.01 * tol); };
  return hankel(order, inner, s, tol);
}

Pair verify_431(double a, int n, double tol) {
  if (!(a > 0.0)) throw DomainError("verify_431: a must be positive");
  // rho = u^2: int_1^inf 2 u^{1-n} J_n(a u) du
  QuadOptions opts;
  opts.lower = 1.0;
  opts.oscillation = a;
  opts.bessel_order = n;
  const auto lhs = integrate_semiaxis(
      [&](double u) { return 2.0 * std::pow(u, 1 - n) * bessel_j(n, a * u); }, tol, opts);
  return {lhs.value, 2.0 / a * bessel_j(n - 1, a)};
}

Pair verify_432(double t, double x, int n, double tol) {
  if (!(t > 0.0) || !(x > 0.0)) throw DomainError("verify_432: t and x must be positive");
  QuadOptions opts;
  opts.lower = std::sqrt(t);
  opts.oscillation = x;
  opts.bessel_order = n;
  const auto lhs = integrate_semiaxis(
      [&](double u) { return 2.0 * std::pow(u, 1 - n) * bessel_j(n, x * u); }, tol, opts);
  return {lhs.value, 2.0 / x * std::pow(t, 0.5 * (1 - n)) * bessel_j(n - 1, x * std::sqrt(t))};
}

Pair verify_434(int p, int q, int nu, int sigma, double y, double tol) {
  if (sigma < 0 || sigma > nu) throw DomainError("verify_434: need 0 <= sigma <= nu");
  if (!(y > 0.0)) throw DomainError("verify_434: y must be positive");
  QuadOptions opts;
  opts.oscillation = y;
  opts.bessel_order = nu;
  const auto lhs = integrate_semiaxis(
      [&](double x) {
        const double x2 = x * x;
        return std::pow(x, nu + 1) * std::exp(-x2) * laguerre({p, double(nu - sigma)}, x2) *
               laguerre({q, double(sigma)}, x2) * bessel_j(nu, x * y);
      },
      tol, opts);
  const double z = 0.25 * y * y;
  const double sign = (p + q) % 2 ? -1.0 : 1.0;
  const double rhs = sign * 0.5 * std::pow(0.5 * y, nu) * std::exp(-z) *
                     laguerre({p, double(sigma - p + q)}, z) * laguerre({q, double(nu - sigma + p - q)}, z);
  return {lhs.value, rhs};
}

Pair verify_440(int m, int k, int n, double t, double tol) {
  if (k < 0 || k > m || n < 1) throw DomainError("verify_440: need 0 <= k <= m, n >= 1");
  const double y = std::sqrt(t);
  QuadOptions opts;
  opts.oscillation = y;
  opts.bessel_order = n - 1;
  const auto lhs = integrate_semiaxis(
      [&](double x) {
        const double x2 = x * x;
        return std::pow(x, n) * std::exp(-x2) * laguerre({m, double(n - 1)}, x2) *
               laguerre({m - k, 0.0}, x2) * bessel_j(n - 1, x * y);
      },
      tol, opts);
  const double sign = k % 2 ? -1.0 : 1.0;
  return {lhs.value, sign * ik_unsigned(m, k, n, t)};
}

double ik_unsigned(int m, int k, int n, double t) {
  const double z = 0.25 * t;
  return std::pow(2.0, -n) * std::pow(t, 0.5 * (n - 1)) * std::exp(-z) * laguerre({m, double(-k)}, z) *
         laguerre({m - k, double(n + k - 1)}, z);
}

Pair verify_orthogonality(int p, int q, int n, double tol) {
  const auto lhs = integrate_semiaxis(
      [&](double x) {
        return std::exp(-x) * std::pow(x, n - 1) * laguerre({p, double(n - 1)}, x) *
               laguerre({q, double(n - 1)}, x);
      },
      tol);
  const double rhs = p == q ? std::tgamma(n + p) / specfun::factorial(p) : 0.0;
  return {lhs.value, rhs};
}

QuadResult kernel_mass(int m, int n, double tol) {
  const kernels::RadialKernel k{m, n};
  const double sphere = 2.0 * std::pow(std::numbers::pi, n) / std::tgamma(n);
  auto r = integrate_semiaxis(
      [&](double r) { return sphere * kernels::kernel_b(k, r * r) * std::pow(r, 2 * n - 1); }, tol);
  return r;
}

std::complex<double> gaussian_fourier_2d(double xi1, double xi2, double tol) {
  auto part = [&](bool imag) {
    const RealFn outer = [&, imag](double y) {
      const RealFn in = [&, imag, y](double x) {
        const double ph = xi1 * x + xi2 * y;
        return std::exp(-x * x - y * y) * (imag ? -std::sin(ph) : std::cos(ph));
      };
      return integrate_line(in, 0.01 * tol);
    };
    return integrate_line(outer, tol);
  };
  return {part(false), part(true)};
}

}  // namespace berezin::quadcheck
