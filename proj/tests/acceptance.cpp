// Acceptance checks: one PASS/FAIL line per criterion, plus INFO lines.

#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <sys/wait.h>

#include "berezin/errors.hpp"
#include "berezin/fieldgrid.hpp"
#include "berezin/kernels.hpp"
#include "berezin/multiplier.hpp"
#include "berezin/quadcheck.hpp"
#include "berezin/symbolic.hpp"
#include "berezin/verify.hpp"

using namespace berezin;
using fieldgrid::cplx;
using fieldgrid::Field;
using fieldgrid::GridSpec;
constexpr double pi = std::numbers::pi;

namespace {

int failures = 0;

class Timer {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count(); }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

void report(int id, bool pass, const std::string& detail) {
  std::printf("criterion %2d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  failures += !pass;
}

void info(const std::string& text) {
  std::printf("info: %s\n", text.c_str());
  std::fflush(stdout);
}

template <class... A>
std::string fmt(const char* pattern, A... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

double r2_of(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

double rel_l2(const Field& a, const Field& b) {
  Field d = a;
  for (std::size_t p = 0; p < d.values.size(); ++p) d.values[p] -= b.values[p];
  return fieldgrid::l2_norm(d) / fieldgrid::l2_norm(b);
}

Field mixture(const GridSpec& g, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> c(-2.5, 2.5), w(0.7, 1.5), a(-1.0, 1.0);
  std::vector<std::array<double, 5>> bumps(4);  // cx, cy, width, re, im
  for (auto& b : bumps) b = {c(rng), c(rng), w(rng), a(rng), a(rng)};
  return fieldgrid::sample(g, [&](std::span<const double> x) {
    cplx s = 0.0;
    for (const auto& b : bumps)
      s += cplx(b[3], b[4]) * std::exp(-((x[0] - b[0]) * (x[0] - b[0]) + (x[1] - b[1]) * (x[1] - b[1])) / (b[2] * b[2]));
    return s;
  });
}

// max |DFT[b_m] - f_m(|xi|^2)| over |xi| <= 10
double spectrum_error(int m, const GridSpec& g) {
  const kernels::RadialKernel k{m, g.n};
  const Field K =
      fieldgrid::fourier_forward(fieldgrid::sample_radial(g, [&](double r2) { return kernels::kernel_b(k, r2); }));
  const multiplier::MultiplierFn fm(m, g.n);
  std::vector<int> idx(static_cast<std::size_t>(g.dims()));
  double worst = 0.0;
  for (std::size_t p = 0; p < K.values.size(); ++p) {
    fieldgrid::unravel(g, p, idx);
    double xi2 = 0.0;
    for (int i : idx) xi2 += g.frequency(i) * g.frequency(i);
    if (xi2 > 100.0) continue;
    worst = std::max(worst, std::abs(K.values[p] - multiplier::eval_multiplier(fm, xi2)));
  }
  return worst;
}

void criterion_1() {
  Timer t;
  int bad = 0, cases = 0;
  for (int n = 1; n <= 4; ++n)
    for (int m = 0; m <= 8; ++m, ++cases)
      bad += !(symbolic::multiplier_poly_bruteforce(m, n) == symbolic::multiplier_poly_theorem(m, n));
  const double s = t.seconds();
  report(1, bad == 0 && s < 10.0, fmt("exact closed form = Fourier route: %d/%d (m<=8, n<=4) in %.2f s", cases - bad, cases, s));

  int negated_bad = 0, negated_cases = 0;
  for (int n = 2; n <= 4; ++n)
    for (int m = 1; m <= 8; ++m, ++negated_cases)
      negated_bad += !(symbolic::multiplier_poly_bruteforce(m, n) == symbolic::multiplier_poly_theorem_negated(m, n));
  info(fmt("closed form with a (-t/4)^k factor disagrees in %d/%d cases with n>=2, m>=1", negated_bad,
           negated_cases));
}

void criterion_2() {
  Timer t;
  double e1 = 0.0, e2 = 0.0;
  for (int m = 0; m <= 5; ++m) e1 = std::max(e1, spectrum_error(m, GridSpec{1, 512, 8.0}));
  for (int m = 0; m <= 3; ++m) e2 = std::max(e2, spectrum_error(m, GridSpec{2, 64, 6.0}));
  const double s = t.seconds();
  report(2, e1 <= 1e-9 && e2 <= 1e-7 && s < 30.0,
         fmt("DFT of b_m vs f_m: n=1 max %.2e (tol 1e-9), n=2 max %.2e (tol 1e-7), %.1f s", e1, e2, s));
}

void criterion_3() {
  int bad = 0;
  for (int m = 0; m <= 8; ++m) bad += !(symbolic::multiplier_poly_theorem(m, 1) == symbolic::multiplier_poly_square(m));
  double worst = 0.0;
  for (int m = 0; m <= 10; ++m) {
    const multiplier::MultiplierFn th(m, 1), sq(m, 1, multiplier::Mode::Square);
    for (int i = 0; i <= 1000; ++i) {
      const double t = 0.1 * i;
      worst = std::max(worst, std::fabs(multiplier::eval_multiplier(th, t) - multiplier::eval_multiplier(sq, t)));
    }
  }
  report(3, bad == 0 && worst <= 1e-12,
         fmt("plane reduction: exact mismatches %d (m<=8); float max %.2e (m<=10, t<=100, tol 1e-12)", bad, worst));
}

void criterion_4() {
  const GridSpec g1{1, 256, 8.0}, g2{2, 32, 7.0};
  double worst = 0.0;
  std::string detail;
  for (const auto& [g, c] : {std::pair{g1, 0.5}, {g2, 0.25}}) {
    const Field f = fieldgrid::sample_radial(g, [](double r2) { return std::exp(-r2); });
    const Field want = fieldgrid::sample(g, [c](std::span<const double> x) { return cplx(c * std::exp(-0.5 * r2_of(x))); });
    const double a = rel_l2(fieldgrid::apply_berezin_conv(0, f), want);
    const double b = rel_l2(fieldgrid::apply_berezin_spectral(0, f), want);
    worst = std::max({worst, a, b});
    detail += fmt("n=%d conv %.2e spectral %.2e; ", g.n, a, b);
  }
  report(4, worst <= 1e-8, "B_0 e^{-|w|^2} = 2^{-n} e^{-|z|^2/2}: " + detail + "tol 1e-8");
}

void criterion_5() {
  const GridSpec g{1, 256, 8.0};
  double worst = 0.0;
  for (int m = 0; m <= 5; ++m)
    for (unsigned s = 0; s < 10; ++s) {
      const Field f = mixture(g, 31u * static_cast<unsigned>(m) + s);
      worst = std::max(worst, rel_l2(fieldgrid::apply_berezin_conv(m, f), fieldgrid::apply_berezin_spectral(m, f)));
    }
  report(5, worst <= 1e-8, fmt("conv vs spectral, 10 mixtures x m<=5: max relative L2 %.2e (tol 1e-8)", worst));
}

void criterion_6() {
  int bad = 0, cases = 0;
  for (int p = 0; p <= 12; ++p) {
    for (int a = 0; a <= 6; ++a)
      for (int b = 0; b <= 6; ++b, ++cases) bad += !symbolic::verify_identity_437(p, a, b);
    for (int k = 0; k <= p; ++k, ++cases) bad += !symbolic::verify_identity_441(p, k);
  }
  report(6, bad == 0, fmt("Laguerre shift and negative-superscript identities: %d/%d exact (p<=12)", cases - bad, cases));
}

void criterion_7() {
  double e_fourier = 0.0;
  for (auto [a, b] : {std::pair{0.0, 0.0}, {2.0, 0.0}, {1.0, 1.0}})
    e_fourier = std::max(e_fourier, std::abs(quadcheck::gaussian_fourier_2d(a, b) - cplx(pi * std::exp(-0.25 * (a * a + b * b)))));
  double e_inv = 0.0;
  for (int nu : {0, 1, 2}) {
    const quadcheck::RealFn u = [nu](double s) { return std::pow(s, nu) * std::exp(-s * s); };
    for (double s : {0.5, 1.0, 1.5}) e_inv = std::max(e_inv, std::fabs(quadcheck::hankel_involution(nu, u, s, 1e-8) - u(s)));
  }
  double e_431 = 0.0;
  for (double a : {0.5, 1.0, 3.0, 7.0})
    for (int n = 1; n <= 3; ++n) {
      const auto r = quadcheck::verify_431(a, n);
      e_431 = std::max(e_431, std::fabs(r.first - r.second));
    }
  double e_434 = 0.0;
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; q <= 4; ++q)
      for (int nu = 0; nu <= 3; ++nu)
        for (int s = 0; s <= nu; ++s)
          for (double y : {0.5, 2.0, 5.0}) {
            const auto r = quadcheck::verify_434(p, q, nu, s, y);
            e_434 = std::max(e_434, std::fabs(r.first - r.second));
          }
  const auto ik = quadcheck::verify_440(2, 1, 2, 4.0);
  e_434 = std::max(e_434, std::fabs(ik.first - ik.second));
  report(7, e_fourier <= 1e-9 && e_inv <= 1e-6 && e_431 <= 1e-8 && e_434 <= 1e-8,
         fmt("Gaussian Fourier %.2e (1e-9), Hankel involution %.2e (1e-6), tail integral %.2e (1e-8), "
             "Laguerre-Bessel sweep %.2e (1e-8)",
             e_fourier, e_inv, e_431, e_434));
  info(fmt("I_k at m=2, k=1, n=2, t=4: quadrature %.12f, signed closed form %.12f, unsigned closed form %.12f", ik.first,
           ik.second, quadcheck::ik_unsigned(2, 1, 2, 4.0)));
}

void criterion_8() {
  const GridSpec g{1, 256, 8.0};
  const Field one = fieldgrid::sample(g, [](std::span<const double>) { return cplx(1.0); });
  double e_const = 0.0, e_sup = 0.0, e_adj = 0.0;
  for (int m = 0; m <= 5; ++m)
    for (auto apply : {fieldgrid::apply_berezin_conv, fieldgrid::apply_berezin_spectral})
      for (const auto& v : apply(m, one).values) e_const = std::max(e_const, std::abs(v - 1.0));
  for (int n = 1; n <= 4; ++n)
    for (int m = 0; m <= 8; ++m) {
      const multiplier::MultiplierFn f(m, n);
      const auto s = multiplier::multiplier_sup(f, 400.0, 4001);
      e_sup = std::max({e_sup, std::fabs(s.value - 1.0), std::fabs(multiplier::eval_multiplier(f, 0.0) - 1.0), s.lambda});
    }
  for (int m = 0; m <= 5; ++m) {
    Field f = mixture(g, 900u + static_cast<unsigned>(m)), h = mixture(g, 950u + static_cast<unsigned>(m));
    for (auto* fld : {&f, &h})
      for (auto& v : fld->values) v = v.real();
    for (auto apply : {fieldgrid::apply_berezin_conv, fieldgrid::apply_berezin_spectral}) {
      const cplx a = fieldgrid::inner(apply(m, f), h), b = fieldgrid::inner(f, apply(m, h));
      e_adj = std::max(e_adj, std::abs(a - b) / (fieldgrid::l2_norm(f) * fieldgrid::l2_norm(h)));
    }
  }
  report(8, e_const <= 1e-9 && e_sup <= 1e-9 && e_adj <= 1e-9,
         fmt("B_m[1]=1 %.2e, sup f_m = f_m(0) = 1 %.2e, self-adjointness %.2e (all tol 1e-9)", e_const, e_sup, e_adj));

  // Operator norm measured two ways: kernel mass by quadrature, and the largest
  // multiplier value on the grid's frequencies.
  for (int n = 1; n <= 2; ++n) {
    double mass_lo = 1e300, mass_hi = 0.0, grid_norm = 0.0;
    for (int m = 0; m <= 5; ++m) {
      const double mass = quadcheck::kernel_mass(m, n).value;
      mass_lo = std::min(mass_lo, mass);
      mass_hi = std::max(mass_hi, mass);
      const multiplier::MultiplierFn f(m, n);
      for (int q = 0; q <= 2 * 128 * 128; q += 1) grid_norm = std::max(grid_norm, std::fabs(f(q * pi * pi / 64.0)));
    }
    info(fmt("n=%d: stated constant pi^-n = %.6f; measured kernel mass in [%.12f, %.12f], "
             "max |f_m| on grid frequencies %.12f (m<=5) -> operator norm 1, not pi^-n",
             n, std::pow(pi, -n), mass_lo, mass_hi, grid_norm));
  }
}

void criterion_9() {
  bool ok = true;
  std::string detail;
  for (int m = 0; m <= 3; ++m)
    for (cplx z0 : {cplx(0.0, 0.0), cplx(0.7, 0.3)}) {
      const double r1 = verify::eigen_residual(m, z0, 1e-2).relative;
      const double r2 = verify::eigen_residual(m, z0, 5e-3).relative;
      const bool exact = r1 < 1e-9;  // stencil exact on the polynomial kernel at z0 = 0, m <= 1
      const double order = std::log2(r1 / r2);
      ok = ok && r1 <= 1e-3 && (exact || std::fabs(order - 2.0) <= 0.2);
      detail += exact ? fmt("m=%d z0=%g%+gi res %.1e exact; ", m, z0.real(), z0.imag(), r1)
                      : fmt("m=%d z0=%g%+gi res %.1e order %.3f; ", m, z0.real(), z0.imag(), r1, order);
    }
  report(9, ok, "magnetic Laplacian eigenvalue m (tol 1e-3, order 2+-0.2): " + detail);
}

void criterion_10() {
  Timer t;
  const std::string cmd = std::string(BEREZIN_CLI) + " verify --suite all --m-max 5 --jobs 2 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  for (std::size_t k; (k = std::fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, k);
  const int raw = pclose(p);
  const int status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  const double s = t.seconds();
  std::string summary;
  for (const char* key : {"cases passed", "operations exercised"}) {
    const auto at = out.find(key);
    if (at == std::string::npos) continue;
    const auto start = out.rfind('\n', at) + 1;
    summary += out.substr(start, out.find('\n', at) - start) + "; ";
  }
  report(10, status == 0 && s < 60.0, fmt("verify --suite all: exit %d in %.1f s; ", status, s) + summary);
}

}  // namespace

int main() {
  const std::pair<int, void (*)()> all[] = {{1, criterion_1}, {2, criterion_2}, {3, criterion_3}, {4, criterion_4},
                                            {5, criterion_5}, {6, criterion_6}, {7, criterion_7}, {8, criterion_8},
                                            {9, criterion_9}, {10, criterion_10}};
  for (const auto& [id, check] : all) {
    try {
      check();
    } catch (const std::exception& e) {
      report(id, false, std::string("threw: ") + e.what());
    }
  }
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
