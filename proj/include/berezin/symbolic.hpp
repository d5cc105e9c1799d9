#pragma once

// Exact rational-coefficient polynomials in one variable, and the
// polynomial-times-Gaussian class poly(s) e^{-s/4} that the Fourier
// transform of the Berezin kernel lives in.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace berezin::symbolic {

inline constexpr int kMaxLevel = 8;
inline constexpr int kMaxDimension = 4;

class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<mpq_class> coefficients);
  static RationalPoly constant(const mpq_class& c);
  /// x^k
  static RationalPoly monomial(int k, const mpq_class& c = 1);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x^k (zero past the degree).
  mpq_class coeff(int k) const;
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }

  mpq_class eval(const mpq_class& x) const;
  double eval(double x) const;

  RationalPoly derivative() const;
  /// p(c x)
  RationalPoly scale_argument(const mpq_class& c) const;

  RationalPoly& operator+=(const RationalPoly& rhs);
  RationalPoly& operator-=(const RationalPoly& rhs);
  RationalPoly& operator*=(const mpq_class& c);

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(RationalPoly a, const mpq_class& c) { return a *= c; }
  friend RationalPoly operator*(const mpq_class& c, RationalPoly a) { return a *= c; }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// e.g. "[1, -2, 1/2]"
  std::string to_string() const;

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

/// The function poly(s) e^{-s/4}, s = |xi|^2.
struct GaussPoly {
  RationalPoly poly;

  double eval(double s) const;
  friend bool operator==(const GaussPoly& a, const GaussPoly& b) { return a.poly == b.poly; }
};

/// Exact generalized rising factorial (a)_j.
mpq_class rising(const mpq_class& a, int j);
/// Exact generalized binomial coefficient binom(top, bottom).
mpq_class binom(const mpq_class& top, int bottom);
mpz_class factorial(int k);

/// Exact coefficients of L_degree^(superscript): (-1)^k binom(degree+superscript, degree-k) / k!.
/// Negative superscripts down to -degree are allowed.
RationalPoly laguerre_coeffs(int degree, int superscript);

/// One application of the Euclidean Laplacian of R^{dim2n} to a radial poly(s) e^{-s/4}.
/// In s = |xi|^2 the Laplacian is 4 (s d^2/ds^2 + (dim2n/2) d/ds).
GaussPoly radial_laplacian_gauss(const GaussPoly& g, int dim2n);

/// Fourier transform of the Berezin kernel b_m on C^n built term by term from the
/// Laguerre expansion: each |w|^{2j} becomes (-Laplacian)^j acting on e^{-|xi|^2/4}.
GaussPoly multiplier_poly_bruteforce(int m, int n);

/// Closed-form multiplier
///   f_m(t) = e^{-t/4}/(n)_m * sum_k (n-1)_k (m-k)!/k! (t/4)^k L_{m-k}^(k)(t/4) L_{m-k}^(n-1+k)(t/4)
/// expanded exactly.
GaussPoly multiplier_poly_theorem(int m, int n);

/// Same sum with (-t/4)^k in place of (t/4)^k. Differs from the
/// true transform whenever n >= 2 and m >= 1; kept for the regression that documents it.
GaussPoly multiplier_poly_theorem_negated(int m, int n);

/// e^{-t/4} (L_m^(0)(t/4))^2, the one-dimensional form.
GaussPoly multiplier_poly_square(int m);

/// L_p^(alpha) = sum_{k=0}^p (alpha-beta)_k / k! L_{p-k}^(beta), checked exactly.
/// The summand degree is p-k (an index k-p would be negative for k < p).
bool verify_identity_437(int p, int alpha, int beta);

/// L_p^(-k)(x) = (-x)^k (p-k)!/p! L_{p-k}^(k)(x), checked exactly.
bool verify_identity_441(int p, int k);

}  // namespace berezin::symbolic
