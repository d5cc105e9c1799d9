#include "berezin/symbolic.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "berezin/errors.hpp"

namespace berezin::symbolic {

RationalPoly::RationalPoly(std::vector<mpq_class> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RationalPoly RationalPoly::constant(const mpq_class& c) { return RationalPoly({c}); }

RationalPoly RationalPoly::monomial(int k, const mpq_class& c) {
  std::vector<mpq_class> v(static_cast<std::size_t>(k) + 1, mpq_class(0));
  v.back() = c;
  return RationalPoly(std::move(v));
}

mpq_class RationalPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

mpq_class RationalPoly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RationalPoly::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<mpq_class> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::scale_argument(const mpq_class& c) const {
  std::vector<mpq_class> v = coeffs_;
  mpq_class p = 1;
  for (auto& x : v) {
    x *= p;
    p *= c;
  }
  return RationalPoly(std::move(v));
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), mpq_class(0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), mpq_class(0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const mpq_class& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> v(a.coeffs_.size() + b.coeffs_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RationalPoly(std::move(v));
}

std::string RationalPoly::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) os << ", ";
    os << coeffs_[k].get_str();
  }
  if (coeffs_.empty()) os << '0';
  os << ']';
  return os.str();
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

double GaussPoly::eval(double s) const { return poly.eval(s) * std::exp(-0.25 * s); }

mpq_class rising(const mpq_class& a, int j) {
  mpq_class r = 1;
  for (int i = 0; i < j; ++i) r *= a + i;
  return r;
}

mpz_class factorial(int k) {
  mpz_class r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

mpq_class binom(const mpq_class& top, int bottom) {
  if (bottom < 0) return 0;
  mpq_class r = rising(top - bottom + 1, bottom) / mpq_class(factorial(bottom));
  r.canonicalize();
  return r;
}

RationalPoly laguerre_coeffs(int degree, int superscript) {
  if (degree < 0) throw DomainError("laguerre_coeffs: negative degree");
  if (superscript < -degree) throw DomainError("laguerre_coeffs: superscript below -degree");
  std::vector<mpq_class> c(static_cast<std::size_t>(degree) + 1);
  for (int k = 0; k <= degree; ++k) {
    mpq_class v = binom(mpq_class(degree + superscript), degree - k) / mpq_class(factorial(k));
    c[static_cast<std::size_t>(k)] = (k % 2) ? mpq_class(-v) : v;
  }
  return RationalPoly(std::move(c));
}

GaussPoly radial_laplacian_gauss(const GaussPoly& g, int dim2n) {
  if (dim2n <= 0 || dim2n % 2) throw DomainError("radial_laplacian_gauss: dimension must be even and positive");
  const mpq_class n(dim2n / 2);
  const RationalPoly& p = g.poly;
  const RationalPoly d1 = p.derivative();
  const RationalPoly d2 = d1.derivative();
  const RationalPoly s = RationalPoly::monomial(1);
  // d/ds [p e^{-s/4}] = (p' - p/4) e^{-s/4};  d^2/ds^2 = (p'' - p'/2 + p/16) e^{-s/4}
  RationalPoly out = s * (mpq_class(4) * d2 - mpq_class(2) * d1 + mpq_class(1, 4) * p);
  out += mpq_class(4) * n * d1 - n * p;
  return {out};
}

namespace {

void check_level(int m, int n) {
  if (m < 0 || m > kMaxLevel || n < 1 || n > kMaxDimension) {
    throw UnsupportedSize("exact multiplier supports 0 <= m <= " + std::to_string(kMaxLevel) +
                          ", 1 <= n <= " + std::to_string(kMaxDimension));
  }
}

GaussPoly theorem_sum(int m, int n, const mpq_class& power_sign) {
  check_level(m, n);
  const mpq_class quarter(1, 4);
  RationalPoly sum;
  for (int k = 0; k <= m; ++k) {
    const mpq_class weight = rising(mpq_class(n - 1), k) * mpq_class(factorial(m - k)) /
                             mpq_class(factorial(k));
    if (sgn(weight) == 0) continue;
    mpq_class sk = 1;
    for (int i = 0; i < k; ++i) sk *= power_sign;
    const RationalPoly x_pow = RationalPoly::monomial(k).scale_argument(quarter);
    const RationalPoly a = laguerre_coeffs(m - k, k).scale_argument(quarter);
    const RationalPoly b = laguerre_coeffs(m - k, n - 1 + k).scale_argument(quarter);
    sum += (weight * sk) * (x_pow * a * b);
  }
  mpq_class norm = 1 / rising(mpq_class(n), m);
  return {sum * norm};
}

}  // namespace

GaussPoly multiplier_poly_bruteforce(int m, int n) {
  check_level(m, n);
  const RationalPoly c = laguerre_coeffs(m, n - 1);

  std::vector<GaussPoly> lap_powers;
  lap_powers.push_back({RationalPoly::constant(1)});
  for (int j = 1; j <= 2 * m; ++j) lap_powers.push_back(radial_laplacian_gauss(lap_powers.back(), 2 * n));

  RationalPoly sum;
  for (int j = 0; j <= m; ++j) {
    for (int k = 0; k <= m; ++k) {
      mpq_class w = c.coeff(j) * c.coeff(k);
      if ((j + k) % 2) w = -w;
      sum += w * lap_powers[static_cast<std::size_t>(j + k)].poly;
    }
  }
  mpq_class norm = mpq_class(factorial(m)) / rising(mpq_class(n), m);
  return {sum * norm};
}

GaussPoly multiplier_poly_theorem(int m, int n) { return theorem_sum(m, n, mpq_class(1)); }

GaussPoly multiplier_poly_theorem_negated(int m, int n) { return theorem_sum(m, n, mpq_class(-1)); }

GaussPoly multiplier_poly_square(int m) {
  check_level(m, 1);
  const RationalPoly l = laguerre_coeffs(m, 0).scale_argument(mpq_class(1, 4));
  return {l * l};
}

bool verify_identity_437(int p, int alpha, int beta) {
  const RationalPoly lhs = laguerre_coeffs(p, alpha);
  RationalPoly rhs;
  for (int k = 0; k <= p; ++k) {
    const mpq_class w = rising(mpq_class(alpha - beta), k) / mpq_class(factorial(k));
    rhs += w * laguerre_coeffs(p - k, beta);
  }
  return lhs == rhs;
}

bool verify_identity_441(int p, int k) {
  const RationalPoly lhs = laguerre_coeffs(p, -k);
  mpq_class w = mpq_class(factorial(p - k)) / mpq_class(factorial(p));
  if (k % 2) w = -w;
  const RationalPoly rhs = RationalPoly::monomial(k, w) * laguerre_coeffs(p - k, k);
  return lhs == rhs;
}

}  // namespace berezin::symbolic
