#include "berezin/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <numbers>
#include <random>
#include <thread>

#include "berezin/errors.hpp"
#include "berezin/fieldgrid.hpp"
#include "berezin/fieldio.hpp"
#include "berezin/kernels.hpp"
#include "berezin/multiplier.hpp"
#include "berezin/quadcheck.hpp"
#include "berezin/specfun.hpp"
#include "berezin/symbolic.hpp"

namespace berezin::verify {

namespace {

constexpr double pi = std::numbers::pi;
using fieldgrid::cplx;
using fieldgrid::Field;
using fieldgrid::GridSpec;
using Triple = std::tuple<double, double, double>;

std::string fmt(const char* pattern, auto... args) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

Triple pair_abs(const quadcheck::Pair& p) { return {p.first, p.second, std::fabs(p.first - p.second)}; }

// Exact checks report the number of failing sub-checks as lhs against 0.
Triple count_failures(int failures) { return {double(failures), 0.0, double(failures)}; }

double r2_of(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

Field gaussian(const GridSpec& g) {
  return fieldgrid::sample(g, [](std::span<const double> x) { return cplx(std::exp(-r2_of(x))); });
}

// Sum of four complex Gaussian bumps with seeded centres, widths and amplitudes.
Field mixture(const GridSpec& g, unsigned seed, bool real) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> c(-2.5, 2.5), w(0.7, 1.5), a(-1.0, 1.0);
  struct Bump {
    std::vector<double> centre;
    double width;
    cplx amp;
  };
  std::vector<Bump> bumps(4);
  for (auto& b : bumps) {
    for (int k = 0; k < g.dims(); ++k) b.centre.push_back(c(rng));
    b.width = w(rng);
    b.amp = {a(rng), real ? 0.0 : a(rng)};
  }
  return fieldgrid::sample(g, [&](std::span<const double> x) {
    cplx s = 0.0;
    for (const auto& b : bumps) {
      double d = 0.0;
      for (std::size_t k = 0; k < x.size(); ++k) d += (x[k] - b.centre[k]) * (x[k] - b.centre[k]);
      s += b.amp * std::exp(-d / (b.width * b.width));
    }
    return s;
  });
}

double rel_l2(const Field& a, const Field& b) {
  Field d = a;
  for (std::size_t p = 0; p < d.values.size(); ++p) d.values[p] -= b.values[p];
  return fieldgrid::l2_norm(d) / fieldgrid::l2_norm(b);
}

struct Builder {
  std::vector<Case> cases;
  void add(std::string id, std::string params, std::vector<std::string> ops, double tol,
           std::function<Triple()> run, bool heavy = false) {
    cases.push_back({std::move(id), std::move(params), std::move(ops), heavy, std::move(run), tol});
  }
};

// ---- identities: exact rational checks plus special-function spot checks -------------

void identities(Builder& b, const SuiteOptions& o) {
  const int mmax = std::min(o.m_max, symbolic::kMaxLevel);
  for (int n = 1; n <= symbolic::kMaxDimension; ++n)
    for (int m = 0; m <= mmax; ++m) {
      b.add(fmt("identities/theorem/n%d/m%02d", n, m), fmt("m=%d n=%d", m, n),
            {"symbolic.multiplier_poly_bruteforce", "symbolic.multiplier_poly_theorem",
             "symbolic.radial_laplacian_gauss", "symbolic.laguerre_coeffs"},
            0.0, [m, n] {
              const auto a = symbolic::multiplier_poly_bruteforce(m, n);
              const auto t = symbolic::multiplier_poly_theorem(m, n);
              int bad = 0;
              for (int k = 0; k <= std::max(a.poly.degree(), t.poly.degree()); ++k) bad += a.poly.coeff(k) != t.poly.coeff(k);
              return count_failures(bad);
            });
    }
  for (int m = 0; m <= mmax; ++m) {
    b.add(fmt("identities/plane-reduction/m%02d", m), fmt("m=%d n=1", m),
          {"symbolic.multiplier_poly_theorem", "symbolic.laguerre_coeffs"}, 0.0,
          [m] { return count_failures(!(symbolic::multiplier_poly_theorem(m, 1) == symbolic::multiplier_poly_square(m))); });
  }
  for (int d = 2; d <= 8; d += 2) {
    b.add(fmt("identities/laplacian-gaussian/d%d", d), fmt("dim=%d", d), {"symbolic.radial_laplacian_gauss"}, 0.0, [d] {
      const auto lap = symbolic::radial_laplacian_gauss(symbolic::GaussPoly{symbolic::RationalPoly::constant(1)}, d);
      const symbolic::RationalPoly want =
          symbolic::RationalPoly::constant(mpq_class(-d, 2)) + symbolic::RationalPoly::monomial(1, mpq_class(1, 4));
      return count_failures(!(lap.poly == want));
    });
  }
  for (int p = 0; p <= 12; ++p) {
    b.add(fmt("identities/laguerre-shift/p%02d", p), fmt("p=%d alpha,beta<=4", p), {"symbolic.verify_identity_437"}, 0.0,
          [p] {
            int bad = 0;
            for (int a = 0; a <= 4; ++a)
              for (int be = 0; be <= 4; ++be) bad += !symbolic::verify_identity_437(p, a, be);
            return count_failures(bad);
          });
    b.add(fmt("identities/laguerre-negative/p%02d", p), fmt("p=%d k<=p", p), {"symbolic.verify_identity_441"}, 0.0, [p] {
      int bad = 0;
      for (int k = 0; k <= p; ++k) bad += !symbolic::verify_identity_441(p, k);
      return count_failures(bad);
    });
  }
  b.add("identities/specfun/laguerre", "degree<=12 alpha<=3 x in {0.5,3,10}",
        {"specfun.laguerre", "symbolic.laguerre_coeffs"}, 1e-12, [] {
          double worst = 0.0, at_l = 0.0, at_r = 0.0;
          for (int p = 0; p <= 12; ++p)
            for (int a = 0; a <= 3; ++a)
              for (double x : {0.5, 3.0, 10.0}) {
                const double got = specfun::laguerre({p, double(a)}, x);
                const double want = symbolic::laguerre_coeffs(p, a).eval(mpq_class(x)).get_d();
                const double e = std::fabs(got - want) / std::max(1.0, std::fabs(want));
                if (e >= worst) worst = e, at_l = got, at_r = want;
              }
          return Triple{at_l, at_r, worst};
        });
  b.add("identities/specfun/bessel", "order<=32 x<=50, trapezoid oracle", {"specfun.bessel_j"}, 1e-12, [] {
    // J_k(x) = (1/pi) int_0^pi cos(k t - x sin t) dt; the trapezoid rule converges geometrically.
    double worst = 0.0, at_l = 0.0, at_r = 0.0;
    const int M = 512;
    for (int k = 0; k <= 32; k += 4)
      for (double x : {0.1, 1.0, 7.5, 12.0, 20.0, 50.0}) {
        double s = 0.5 * (1.0 + std::cos(k * pi));
        for (int j = 1; j < M; ++j) {
          const double t = pi * j / M;
          s += std::cos(k * t - x * std::sin(t));
        }
        const double want = s / M;
        const double got = specfun::bessel_j(k, x);
        if (std::fabs(got - want) >= worst) worst = std::fabs(got - want), at_l = got, at_r = want;
      }
    return Triple{at_l, at_r, worst};
  });
  b.add("identities/specfun/pochhammer-binomial", "(1/2)_5, C(11/2,3)", {"specfun.pochhammer", "specfun.binomial"}, 1e-14,
        [] {
          const double p = specfun::pochhammer({0.5, 5});
          const double pw = 0.5 * 1.5 * 2.5 * 3.5 * 4.5;
          const double c = specfun::binomial(5.5, 3);
          const double cw = 5.5 * 4.5 * 3.5 / 6.0;
          return Triple{p + c, pw + cw, std::fabs(p - pw) / pw + std::fabs(c - cw) / cw};
        });
}

// ---- integrals: quadrature and Hankel transforms ------------------------------------

void integrals(Builder& b, const SuiteOptions& o) {
  for (int n = 1; n <= 4; ++n) {
    b.add(fmt("integrals/orthogonality/n%d", n), fmt("n=%d p,q<=8", n), {"quadcheck.integrate_semiaxis", "specfun.laguerre"},
          1e-9, [n] {
            double worst = 0.0, at_l = 0.0, at_r = 0.0;
            for (int p = 0; p <= 8; ++p)
              for (int q = 0; q <= 8; ++q) {
                const auto r = quadcheck::verify_orthogonality(p, q, n);
                const double e = std::fabs(r.first - r.second) / std::max(1.0, std::fabs(r.second));
                if (e >= worst) worst = e, at_l = r.first, at_r = r.second;
              }
            return Triple{at_l, at_r, worst};
          });
  }
  for (int n = 1; n <= 3; ++n)
    for (int m = 0; m <= std::min(o.m_max, 8); ++m)
      b.add(fmt("integrals/kernel-mass/n%d/m%02d", n, m), fmt("m=%d n=%d", m, n),
            {"quadcheck.integrate_semiaxis", "kernels.kernel_b"}, 1e-10, [m, n] {
              const double v = quadcheck::kernel_mass(m, n).value;
              return Triple{v, 1.0, std::fabs(v - 1.0)};
            });
  for (double a : {0.5, 1.0, 3.0, 7.0})
    for (int n = 1; n <= 3; ++n)
      b.add(fmt("integrals/tail-bessel/a%.1f/n%d", a, n), fmt("a=%g n=%d", a, n),
            {"quadcheck.verify_431", "quadcheck.integrate_semiaxis", "specfun.bessel_j"}, 1e-8,
            [a, n] { return pair_abs(quadcheck::verify_431(a, n)); });
  for (int n = 1; n <= 3; ++n)
    b.add(fmt("integrals/tail-bessel-t/n%d", n), fmt("t=4 x=1 n=%d", n), {"quadcheck.integrate_semiaxis"}, 1e-8,
          [n] { return pair_abs(quadcheck::verify_432(4.0, 1.0, n)); });
  for (int nu = 0; nu <= 3; ++nu)
    for (double y : {0.5, 2.0, 5.0})
      b.add(fmt("integrals/laguerre-bessel/nu%d/y%.1f", nu, y), fmt("nu=%d y=%g p,q<=4 0<=sigma<=nu", nu, y),
            {"quadcheck.verify_434", "quadcheck.integrate_semiaxis"}, 1e-8, [nu, y] {
              double worst = 0.0, at_l = 0.0, at_r = 0.0;
              for (int p = 0; p <= 4; ++p)
                for (int q = 0; q <= 4; ++q)
                  for (int s = 0; s <= nu; ++s) {
                    const auto r = quadcheck::verify_434(p, q, nu, s, y);
                    if (std::fabs(r.first - r.second) >= worst) worst = std::fabs(r.first - r.second), at_l = r.first, at_r = r.second;
                  }
              return Triple{at_l, at_r, worst};
            });
  for (int n = 1; n <= 3; ++n)
    for (int m = 0; m <= std::min(o.m_max, 4); ++m)
      b.add(fmt("integrals/signed-ik/n%d/m%d", n, m), fmt("m=%d n=%d k<=m t in {0.5,4,9}", m, n),
            {"quadcheck.integrate_semiaxis", "specfun.laguerre", "specfun.bessel_j"}, 1e-8, [m, n] {
              double worst = 0.0, at_l = 0.0, at_r = 0.0;
              for (int k = 0; k <= m; ++k)
                for (double t : {0.5, 4.0, 9.0}) {
                  const auto r = quadcheck::verify_440(m, k, n, t);
                  if (std::fabs(r.first - r.second) >= worst) worst = std::fabs(r.first - r.second), at_l = r.first, at_r = r.second;
                }
              return Triple{at_l, at_r, worst};
            });
  for (auto [x1, x2] : {std::pair{0.0, 0.0}, {2.0, 0.0}, {1.0, 1.0}})
    b.add(fmt("integrals/gaussian-fourier/xi(%g,%g)", x1, x2), fmt("xi=(%g,%g)", x1, x2), {}, 1e-9, [x1, x2] {
      const auto got = quadcheck::gaussian_fourier_2d(x1, x2);
      const double want = pi * std::exp(-0.25 * (x1 * x1 + x2 * x2));
      return Triple{got.real(), want, std::abs(got - cplx(want))};
    });
  for (int nu = 0; nu <= 3; ++nu)
    b.add(fmt("integrals/hankel-gaussian/nu%d", nu), fmt("nu=%d x in {0.25,1,2.5}", nu), {"quadcheck.hankel"}, 1e-10, [nu] {
      double worst = 0.0, at_l = 0.0, at_r = 0.0;
      for (double x : {0.25, 1.0, 2.5}) {
        const double got = quadcheck::hankel(nu, [nu](double s) { return std::pow(s, nu) * std::exp(-s * s); }, x, 1e-12);
        const double want = std::pow(x, nu) * std::exp(-0.25 * x * x) / std::pow(2.0, nu + 1);
        if (std::fabs(got - want) >= worst) worst = std::fabs(got - want), at_l = got, at_r = want;
      }
      return Triple{at_l, at_r, worst};
    });
  for (int nu : {0, 1})
    b.add(fmt("integrals/hankel-involution/nu%d", nu), fmt("nu=%d s=1 u=s^nu e^{-s^2}", nu), {"quadcheck.hankel"}, 1e-6,
          [nu] {
            const quadcheck::RealFn u = [nu](double s) { return std::pow(s, nu) * std::exp(-s * s); };
            const double got = quadcheck::hankel_involution(nu, u, 1.0, 1e-8);
            return Triple{got, u(1.0), std::fabs(got - u(1.0))};
          });
  for (int n = 1; n <= 3; ++n)
    for (int m = 0; m <= std::min(o.m_max, 4); ++m)
      b.add(fmt("integrals/kernel-hankel/n%d/m%d", n, m), fmt("m=%d n=%d rho in {0.5,1.5,3}", m, n),
            {"quadcheck.hankel", "kernels.kernel_b", "multiplier.eval_multiplier"}, 1e-9, [m, n] {
              const kernels::RadialKernel k{m, n};
              const multiplier::MultiplierFn fm(m, n);
              double worst = 0.0, at_l = 0.0, at_r = 0.0;
              for (double rho : {0.5, 1.5, 3.0}) {
                const double h = quadcheck::hankel(
                    n - 1, [&](double r) { return std::pow(r, n - 1) * kernels::kernel_b(k, r * r); }, rho, 1e-14);
                const double got = std::pow(2 * pi, n) * std::pow(rho, 1 - n) * h;
                const double want = multiplier::eval_multiplier(fm, rho * rho);
                if (std::fabs(got - want) >= worst) worst = std::fabs(got - want), at_l = got, at_r = want;
              }
              return Triple{at_l, at_r, worst};
            });
}

// ---- multiplier: DFT of the sampled kernel against the closed form --------------------

Triple spectrum_vs_closed_form(int m, const GridSpec& g, double xi_max) {
  const kernels::RadialKernel k{m, g.n};
  const Field K = fieldgrid::fourier_forward(fieldgrid::sample_radial(g, [&](double r2) { return kernels::kernel_b(k, r2); }));
  const multiplier::MultiplierFn fm(m, g.n);
  const int half = g.points_per_axis / 2;
  const double dxi = pi / g.half_width;
  std::vector<double> table(static_cast<std::size_t>(g.dims() * half * half) + 1);
  for (std::size_t q = 0; q < table.size(); ++q) table[q] = multiplier::eval_multiplier(fm, dxi * dxi * double(q));
  std::vector<int> idx(static_cast<std::size_t>(g.dims()));
  double worst = 0.0, at_l = 0.0, at_r = 0.0;
  for (std::size_t p = 0; p < K.values.size(); ++p) {
    fieldgrid::unravel(g, p, idx);
    int q = 0;
    for (int i : idx) q += (i - half) * (i - half);
    if (dxi * dxi * q > xi_max * xi_max) continue;
    const double e = std::abs(K.values[p] - table[static_cast<std::size_t>(q)]);
    if (e >= worst) worst = e, at_l = K.values[p].real(), at_r = table[static_cast<std::size_t>(q)];
  }
  return {at_l, at_r, worst};
}

void multiplier_suite(Builder& b, const SuiteOptions& o) {
  for (int m = 0; m <= std::min(o.m_max, 5); ++m)
    b.add(fmt("multiplier/dft/n1/m%d", m), fmt("m=%d N=512 L=8 |xi|<=10", m),
          {"fieldgrid.fourier_forward", "kernels.kernel_b", "multiplier.eval_multiplier"}, 1e-9,
          [m] { return spectrum_vs_closed_form(m, GridSpec{1, 512, 8.0}, 10.0); });
  for (int m = 0; m <= std::min(o.m_max, 3); ++m)
    b.add(fmt("multiplier/dft/n2/m%d", m), fmt("m=%d N=64 L=6 |xi|<=10", m),
          {"fieldgrid.fourier_forward", "kernels.kernel_b", "multiplier.eval_multiplier"}, 1e-7,
          [m] { return spectrum_vs_closed_form(m, GridSpec{2, 64, 6.0}, 10.0); }, true);
  for (int n = 1; n <= 4; ++n)
    for (int m = 0; m <= std::min(o.m_max, 8); ++m)
      b.add(fmt("multiplier/sup/n%d/m%02d", n, m), fmt("m=%d n=%d lambda<=400", m, n), {"multiplier.multiplier_sup"}, 1e-9,
            [m, n] {
              const auto s = multiplier::multiplier_sup(multiplier::MultiplierFn(m, n), 400.0, 4001);
              return Triple{s.value, 1.0, std::fabs(s.value - 1.0) + s.lambda};
            });
  for (int m = 0; m <= std::min(o.m_max, 8); ++m)
    b.add(fmt("multiplier/modes/m%02d", m), fmt("m=%d n=1 lambda<=100", m), {"multiplier.eval_multiplier"}, 1e-12, [m] {
      using multiplier::Mode;
      const multiplier::MultiplierFn th(m, 1, Mode::Theorem), sq(m, 1, Mode::Square), ex(m, 1, Mode::ExactPoly);
      double worst = 0.0, at_l = 0.0, at_r = 0.0;
      for (int i = 0; i <= 200; ++i) {
        const double lam = 0.5 * i;
        const double a = multiplier::eval_multiplier(th, lam), s = multiplier::eval_multiplier(sq, lam),
                     e = multiplier::eval_multiplier(ex, lam);
        const double d = std::max(std::fabs(a - e), std::fabs(s - e));
        if (d >= worst) worst = d, at_l = a, at_r = e;
      }
      return Triple{at_l, at_r, worst};
    });
}

// ---- operator: B_m on fields ------------------------------------------------------------

const GridSpec kPlane{1, 256, 8.0};

void operator_suite(Builder& b, const SuiteOptions& o) {
  b.add("operator/heat/n1/conv", "m=0 N=256 L=8", {"fieldgrid.apply_berezin_conv", "fieldgrid.l2_norm"}, 1e-8, [] {
    const Field want = fieldgrid::sample(kPlane, [](std::span<const double> x) { return cplx(0.5 * std::exp(-0.5 * r2_of(x))); });
    const double e = rel_l2(fieldgrid::apply_berezin_conv(0, gaussian(kPlane)), want);
    return Triple{e, 0.0, e};
  });
  b.add("operator/heat/n1/spectral", "m=0 N=256 L=8", {"fieldgrid.apply_berezin_spectral", "fieldgrid.l2_norm"}, 1e-8, [] {
    const Field want = fieldgrid::sample(kPlane, [](std::span<const double> x) { return cplx(0.5 * std::exp(-0.5 * r2_of(x))); });
    const double e = rel_l2(fieldgrid::apply_berezin_spectral(0, gaussian(kPlane)), want);
    return Triple{e, 0.0, e};
  });
  b.add("operator/heat/n2", "m=0 N=32 L=7, both paths", {"fieldgrid.apply_berezin_conv", "fieldgrid.apply_berezin_spectral"},
        1e-8, [] {
          const GridSpec g{2, 32, 7.0};
          const Field f = gaussian(g);
          const Field want = fieldgrid::sample(g, [](std::span<const double> x) { return cplx(0.25 * std::exp(-0.5 * r2_of(x))); });
          const double a = rel_l2(fieldgrid::apply_berezin_conv(0, f), want);
          const double s = rel_l2(fieldgrid::apply_berezin_spectral(0, f), want);
          return Triple{a, s, std::max(a, s)};
        }, true);
  for (int m = 0; m <= std::min(o.m_max, 5); ++m) {
    b.add(fmt("operator/constants/m%d", m), fmt("m=%d f=1, both paths", m),
          {"fieldgrid.apply_berezin_conv", "fieldgrid.apply_berezin_spectral"}, 1e-9, [m] {
            const Field one = fieldgrid::sample(kPlane, [](std::span<const double>) { return cplx(1.0); });
            double worst = 0.0;
            for (auto apply : {fieldgrid::apply_berezin_conv, fieldgrid::apply_berezin_spectral})
              for (const auto& v : apply(m, one).values) worst = std::max(worst, std::abs(v - 1.0));
            return Triple{1.0 + worst, 1.0, worst};
          });
    b.add(fmt("operator/paths/m%d", m), fmt("m=%d 10 mixtures N=256 L=8", m),
          {"fieldgrid.apply_berezin_conv", "fieldgrid.apply_berezin_spectral", "fieldgrid.l2_norm"}, 1e-8, [m] {
            double worst = 0.0;
            for (unsigned s = 0; s < 10; ++s) {
              const Field f = mixture(kPlane, 1000u * static_cast<unsigned>(m) + s, false);
              worst = std::max(worst, rel_l2(fieldgrid::apply_berezin_conv(m, f), fieldgrid::apply_berezin_spectral(m, f)));
            }
            return Triple{worst, 0.0, worst};
          });
    b.add(fmt("operator/self-adjoint/m%d", m), fmt("m=%d real mixtures", m),
          {"fieldgrid.inner", "fieldgrid.l2_norm", "fieldgrid.apply_berezin_spectral"}, 1e-9, [m] {
            const Field f = mixture(kPlane, 500u + static_cast<unsigned>(m), true);
            const Field g = mixture(kPlane, 600u + static_cast<unsigned>(m), true);
            const cplx a = fieldgrid::inner(fieldgrid::apply_berezin_spectral(m, f), g);
            const cplx c = fieldgrid::inner(f, fieldgrid::apply_berezin_spectral(m, g));
            const double scale = fieldgrid::l2_norm(f) * fieldgrid::l2_norm(g);
            return Triple{a.real(), c.real(), std::abs(a - c) / scale};
          });
    b.add(fmt("operator/contraction/m%d", m), fmt("m=%d ||B f|| / ||f|| - 1, clipped at 0", m), {"fieldgrid.l2_norm"}, 1e-12,
          [m] {
            const Field f = mixture(kPlane, 700u + static_cast<unsigned>(m), false);
            const double ratio = fieldgrid::l2_norm(fieldgrid::apply_berezin_spectral(m, f)) / fieldgrid::l2_norm(f);
            return Triple{ratio, 1.0, std::max(0.0, ratio - 1.0)};
          });
  }
  b.add("operator/truncation-guard", "m=4 N=64 L=3 must raise", {"fieldgrid.apply_berezin_conv"}, 0.0, [] {
    try {
      fieldgrid::apply_berezin_conv(4, gaussian(GridSpec{1, 64, 3.0}));
    } catch (const KernelTruncation&) {
      return count_failures(0);
    }
    return count_failures(1);
  });
}

// ---- eigen: the reproducing kernel under the magnetic Laplacian -------------------------

void eigen_suite(Builder& b, const SuiteOptions& o) {
  const cplx z0(0.7, 0.3);
  for (int m = 0; m <= std::min(o.m_max, 3); ++m) {
    b.add(fmt("eigen/residual/m%d", m), fmt("m=%d z0=0.7+0.3i h=1e-2", m),
          {"kernels.kernel_K", "kernels.magnetic_laplacian_fd"}, 1e-3, [m, z0] {
            const double r = eigen_residual(m, z0, 1e-2).relative;
            return Triple{r, 0.0, r};
          });
    b.add(fmt("eigen/order/m%d", m), fmt("m=%d z0=0.7+0.3i h=1e-2 -> 5e-3", m),
          {"kernels.kernel_K", "kernels.magnetic_laplacian_fd"}, 0.2, [m, z0] {
            const double r1 = eigen_residual(m, z0, 1e-2).relative;
            const double r2 = eigen_residual(m, z0, 5e-3).relative;
            const double order = std::log2(r1 / r2);
            return Triple{order, 2.0, std::fabs(order - 2.0)};
          });
  }
  for (int m = 0; m <= std::min(o.m_max, 3); ++m)
    b.add(fmt("eigen/coherent-norm/m%d", m), fmt("m=%d z=0.7+0.3i weighted grid sum on [-9,9]^2", m), {"kernels.coherent_state"}, 1e-9,
          [m, z0] {
            const kernels::ComplexPoint z{z0};
            const double h = 0.05;
            const int N = 361;
            double s = 0.0;
            for (int i = 0; i < N; ++i)
              for (int j = 0; j < N; ++j) {
                const cplx w(-9.0 + i * h, -9.0 + j * h);
                s += std::norm(kernels::coherent_state(m, 1, z, kernels::ComplexPoint{w})) * std::exp(-std::norm(w));
              }
            s *= h * h;
            return Triple{s, 1.0, std::fabs(s - 1.0)};
          });
}

}  // namespace

Suite parse_suite(std::string_view name) {
  for (Suite s : {Suite::Identities, Suite::Integrals, Suite::Multiplier, Suite::Operator, Suite::Eigen, Suite::All})
    if (suite_name(s) == name) return s;
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

std::string_view suite_name(Suite suite) {
  switch (suite) {
    case Suite::Identities: return "identities";
    case Suite::Integrals: return "integrals";
    case Suite::Multiplier: return "multiplier";
    case Suite::Operator: return "operator";
    case Suite::Eigen: return "eigen";
    case Suite::All: return "all";
  }
  return "?";
}

std::vector<Case> build_cases(Suite suite, const SuiteOptions& opts) {
  if (opts.m_max < 0) throw DomainError("m_max must be non-negative");
  Builder b;
  const bool all = suite == Suite::All;
  if (all || suite == Suite::Identities) identities(b, opts);
  if (all || suite == Suite::Integrals) integrals(b, opts);
  if (all || suite == Suite::Multiplier) multiplier_suite(b, opts);
  if (all || suite == Suite::Operator) operator_suite(b, opts);
  if (all || suite == Suite::Eigen) eigen_suite(b, opts);
  std::sort(b.cases.begin(), b.cases.end(), [](const Case& x, const Case& y) { return x.id < y.id; });
  return std::move(b.cases);
}

std::vector<CaseResult> run_suite(Suite suite, const SuiteOptions& opts) {
  if (opts.jobs < 1) throw DomainError("jobs must be at least 1");
  const std::vector<Case> cases = build_cases(suite, opts);
  std::vector<CaseResult> results(cases.size());
  std::atomic<std::size_t> next{0};
  std::mutex heavy;

  auto run_one = [&](std::size_t i) {
    const Case& c = cases[i];
    CaseResult& r = results[i];
    r.id = c.id;
    r.params = c.params;
    r.ops = c.ops;
    r.tol = c.tol;
    try {
      std::unique_lock lock(heavy, std::defer_lock);
      if (c.heavy) lock.lock();
      std::tie(r.lhs, r.rhs, r.diff) = c.run();
      r.pass = r.diff <= c.tol;
    } catch (const std::exception& e) {
      r.pass = false;
      r.diff = std::numeric_limits<double>::quiet_NaN();
      r.note = e.what();
    }
  };
  auto worker = [&] {
    for (std::size_t i; (i = next++) < cases.size();) run_one(i);
  };
  const int threads = std::min<int>(opts.jobs, static_cast<int>(cases.size()));
  std::vector<std::jthread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  return results;
}

std::string format_table(const std::vector<CaseResult>& results) {
  std::string out = fmt("%-44s %-40s %14s %14s %10s %8s  %s\n", "case", "params", "lhs", "rhs", "|diff|", "tol", "status");
  int passed = 0;
  for (const auto& r : results) {
    out += fmt("%-44s %-40s %14.6e %14.6e %10.2e %8.1e  %s", r.id.c_str(), r.params.c_str(), r.lhs, r.rhs, r.diff, r.tol,
               r.pass ? "PASS" : "FAIL");
    if (!r.note.empty()) out += "  (" + r.note + ")";
    out += '\n';
    passed += r.pass;
  }
  out += fmt("%d/%zu cases passed\n", passed, results.size());
  return out;
}

std::string format_csv(const std::vector<CaseResult>& results) {
  std::string out = "id,params,lhs,rhs,diff,tol,pass\n";
  for (const auto& r : results) {
    out += r.id + ",\"" + r.params + "\"," + fieldio::format_double(r.lhs) + ',' + fieldio::format_double(r.rhs) + ',' +
           fieldio::format_double(r.diff) + ',' + fieldio::format_double(r.tol) + ',' + (r.pass ? "1" : "0") + '\n';
  }
  return out;
}

const std::vector<std::string>& operation_manifest() {
  static const std::vector<std::string> ops = {
      "specfun.laguerre",
      "specfun.bessel_j",
      "specfun.pochhammer",
      "specfun.binomial",
      "symbolic.laguerre_coeffs",
      "symbolic.radial_laplacian_gauss",
      "symbolic.multiplier_poly_bruteforce",
      "symbolic.multiplier_poly_theorem",
      "symbolic.verify_identity_437",
      "symbolic.verify_identity_441",
      "kernels.kernel_b",
      "kernels.kernel_K",
      "kernels.coherent_state",
      "kernels.magnetic_laplacian_fd",
      "multiplier.eval_multiplier",
      "multiplier.multiplier_sup",
      "fieldgrid.fourier_forward",
      "fieldgrid.apply_berezin_conv",
      "fieldgrid.apply_berezin_spectral",
      "fieldgrid.l2_norm",
      "fieldgrid.inner",
      "quadcheck.integrate_semiaxis",
      "quadcheck.hankel",
      "quadcheck.verify_431",
      "quadcheck.verify_434",
      "cli.run",
  };
  return ops;
}

std::vector<std::string> uncovered_operations(const std::vector<CaseResult>& results, const std::set<std::string>& extra) {
  std::set<std::string> seen = extra;
  for (const auto& r : results) seen.insert(r.ops.begin(), r.ops.end());
  std::vector<std::string> missing;
  for (const auto& op : operation_manifest())
    if (!seen.contains(op)) missing.push_back(op);
  return missing;
}

EigenResidual eigen_residual(int m, std::complex<double> z0, double h) {
  if (!(h > 0.0)) throw DomainError("eigen_residual: h must be positive");
  const int N = static_cast<int>(std::lround(8.0 / h)) + 1;
  const kernels::ComplexPoint zp{z0};
  const auto f = kernels::sample_plane(-4.0, -4.0, h, N, N,
                                       [&](cplx w) { return kernels::kernel_K(m, 1, kernels::ComplexPoint{w}, zp); });
  const auto lf = kernels::magnetic_laplacian_fd(f);
  double num = 0.0, den = 0.0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      den = std::max(den, std::abs(f.at(i, j)));
      if (kernels::fd_interior(f, i, j)) num = std::max(num, std::abs(lf.at(i, j) - double(m) * f.at(i, j)));
    }
  return {h, num / den};
}

}  // namespace berezin::verify
