#include "berezin/multiplier.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "berezin/errors.hpp"
#include "berezin/specfun.hpp"
#include "berezin/symbolic.hpp"

namespace berezin::multiplier {

std::string_view mode_name(Mode mode) {
  switch (mode) {
    case Mode::Theorem: return "theorem";
    case Mode::Square: return "square";
    case Mode::ExactPoly: return "exact-poly";
  }
  return "?";
}

MultiplierFn::MultiplierFn(int m, int n, Mode mode) : m_(m), n_(n), mode_(mode) {
  if (m < 0 || n < 1) throw DomainError("MultiplierFn: need m >= 0, n >= 1");
  if (m > specfun::kMaxLaguerreDegree) throw UnsupportedSize("MultiplierFn: level above Laguerre ceiling");
  if (mode == Mode::Square && n != 1) throw DomainError("MultiplierFn: square form exists only for n = 1");
  if (mode == Mode::ExactPoly) {
    exact_ = std::make_shared<const symbolic::GaussPoly>(symbolic::multiplier_poly_theorem(m, n));
  }
}

double MultiplierFn::operator()(double lambda) const {
  if (!(lambda >= 0.0)) throw DomainError("eval_multiplier: lambda must be non-negative");
  const double x = 0.25 * lambda;
  const double gauss = std::exp(-x);
  switch (mode_) {
    case Mode::Square: {
      const double l = specfun::laguerre({m_, 0.0}, x);
      return gauss * l * l;
    }
    case Mode::ExactPoly: {
      // Monomial-basis Horner in double cancels badly for large lambda; stay exact.
      return gauss * exact_->poly.eval(mpq_class(lambda)).get_d();
    }
    case Mode::Theorem:
      break;
  }
  // Accumulate k = m down to 0 so the (usually smaller) high-k terms go in first.
  double sum = 0.0;
  for (int k = m_; k >= 0; --k) {
    const double weight = specfun::pochhammer({n_ - 1.0, k}) * specfun::factorial(m_ - k) /
                          specfun::factorial(k);
    if (weight == 0.0) continue;
    const double a = specfun::laguerre({m_ - k, static_cast<double>(k)}, x);
    const double b = specfun::laguerre({m_ - k, static_cast<double>(n_ - 1 + k)}, x);
    sum += weight * std::pow(x, k) * a * b;
  }
  return gauss * sum / specfun::pochhammer({static_cast<double>(n_), m_});
}

double eval_multiplier(const MultiplierFn& f, double lambda) { return f(lambda); }

SupResult multiplier_sup(const MultiplierFn& f, double lambda_max, int samples) {
  if (!(lambda_max > 0.0)) throw DomainError("multiplier_sup: lambda_max must be positive");
  if (samples < 2) throw DomainError("multiplier_sup: need at least two samples");
  const double step = lambda_max / (samples - 1);
  SupResult best{std::fabs(f(0.0)), 0.0};
  int best_i = 0;
  for (int i = 1; i < samples; ++i) {
    const double lam = i * step;
    const double v = std::fabs(f(lam));
    if (v > best.value) best = {v, lam}, best_i = i;
  }

  double lo = std::max(0, best_i - 1) * step;
  double hi = std::min(samples - 1, best_i + 1) * step;
  const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = hi - ratio * (hi - lo);
  double d = lo + ratio * (hi - lo);
  double fc = std::fabs(f(c));
  double fd = std::fabs(f(d));
  for (int it = 0; it < 200 && hi - lo > 1e-14 * (1.0 + hi); ++it) {
    if (fc > fd) {
      hi = d, d = c, fd = fc;
      c = hi - ratio * (hi - lo);
      fc = std::fabs(f(c));
    } else {
      lo = c, c = d, fc = fd;
      d = lo + ratio * (hi - lo);
      fd = std::fabs(f(d));
    }
  }
  const double mid = 0.5 * (lo + hi);
  const double fm = std::fabs(f(mid));
  if (fm > best.value) best = {fm, mid};
  return best;
}

}  // namespace berezin::multiplier
