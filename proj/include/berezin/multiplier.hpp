#pragma once

#include <memory>
#include <string_view>

namespace berezin::symbolic {
struct GaussPoly;
}

namespace berezin::multiplier {

enum class Mode {
  Theorem,   ///< closed-form Laguerre sum, any n
  Square,    ///< e^{-t/4} (L_m^(0)(t/4))^2, n = 1 only
  ExactPoly  ///< exact rational expansion, evaluated exactly at the (rational) double lambda
};

std::string_view mode_name(Mode mode);

/// Spectral function f_m with B_m = f_m(-Laplacian) on C^n.
class MultiplierFn {
 public:
  MultiplierFn(int m, int n, Mode mode = Mode::Theorem);

  int m() const { return m_; }
  int n() const { return n_; }
  Mode mode() const { return mode_; }

  /// f_m(lambda); throws DomainError for lambda < 0.
  double operator()(double lambda) const;

 private:
  int m_;
  int n_;
  Mode mode_;
  std::shared_ptr<const symbolic::GaussPoly> exact_;  // ExactPoly mode only
};

double eval_multiplier(const MultiplierFn& f, double lambda);

struct SupResult {
  double value = 0.0;
  double lambda = 0.0;
};

/// max |f_m| over a uniform sample of [0, lambda_max], refined by golden-section
/// search around the best sample.
SupResult multiplier_sup(const MultiplierFn& f, double lambda_max, int samples);

}  // namespace berezin::multiplier
