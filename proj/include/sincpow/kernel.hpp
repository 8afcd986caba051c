#pragma once

#include <optional>
#include <stdexcept>

namespace sincpow {

/// Exponent of the sinc-power integrand. Construction enforces p >= 1.
class PValue {
 public:
  explicit PValue(double p) : p_(p) {
    if (!(p >= 1.0)) throw std::domain_error("p must satisfy p >= 1");
  }
  double value() const noexcept { return p_; }
  bool is_integral() const noexcept;

 private:
  double p_;
};

/// ln|sin t / t|. Empty when t sits on a nonzero multiple of pi to within
/// the rounding of t itself, where the integrand vanishes.
std::optional<double> log_sinc(double t) noexcept;

/// log_sinc(t) + t^2/6, evaluated without cancellation near t = 0.
/// Empty under the same condition as log_sinc.
std::optional<double> log_sinc_excess(double t) noexcept;

/// (sin^2 t / t^2)^p. Even in t, lies in [0, 1].
double integrand(double t, PValue p) noexcept;

/// Mean of sin^{2p} over one period: Gamma(p + 1/2) / (sqrt(pi) Gamma(p + 1)).
double wallis(double p);

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

}  // namespace sincpow
