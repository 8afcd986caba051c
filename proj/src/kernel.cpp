#include "sincpow/kernel.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace sincpow {

namespace {

constexpr double kSeriesThreshold = 0.5;

// ln(sin t / t) = -sum_{n>=1} c_n t^{2n},  c_n = zeta(2n) / (n pi^{2n}).
// Twelve terms leave a truncation error below 1e-20 for |t| < 0.5.
constexpr std::array<double, 12> kLogSincCoeffs = {
    1.666666666666666666666667e-1,  5.555555555555555555555556e-3,
    3.527336860670194003527337e-4,  2.645502645502645502645503e-5,
    2.137779915557693335471113e-6,  1.803670234005331007094676e-7,
    1.566139132276698414264552e-8,  1.388413049373729942253648e-9,
    1.250435917600499603011579e-10, 1.140257560229609143293191e-11,
    1.050292390863755640751479e-12, 9.754877841593701649670602e-14,
};

// -sum_{n>=first} c_n u^{n - first + 1}, u = t^2, by Horner from the top.
double series_from(std::size_t first, double u) noexcept {
  double acc = 0.0;
  for (std::size_t i = kLogSincCoeffs.size(); i-- > first;) {
    acc = acc * u + kLogSincCoeffs[i];
  }
  return -acc * u;
}

// Lanczos approximation, g = 7, nine terms.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

double lanczos_log_gamma(double x) noexcept {
  // Valid for x >= 1/2.
  const double z = x - 1.0;
  double series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    series += kLanczos[i] / (z + static_cast<double>(i));
  }
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t +
         std::log(series);
}

// ln Gamma(p + 1/2) - ln Gamma(p + 1) from the difference of two Stirling
// series. Every term is O(1) or smaller, so nothing cancels. Needs p >= 10.
double log_gamma_half_step(double p) noexcept {
  auto stirling_tail = [](double z) {
    const double r = 1.0 / (z * z);
    // B_2k / (2k (2k - 1) z^{2k-1}), k = 1..7
    return (1.0 / 12.0 +
            r * (-1.0 / 360.0 +
                 r * (1.0 / 1260.0 +
                      r * (-1.0 / 1680.0 +
                           r * (1.0 / 1188.0 + r * (-691.0 / 360360.0 + r * (1.0 / 156.0))))))) /
           z;
  };
  return p * std::log1p(-0.5 / (p + 1.0)) - 0.5 * std::log(p + 1.0) + 0.5 +
         stirling_tail(p + 0.5) - stirling_tail(p + 1.0);
}

}  // namespace

bool PValue::is_integral() const noexcept { return std::floor(p_) == p_; }

std::optional<double> log_sinc(double t) noexcept {
  const double a = std::fabs(t);
  if (a < kSeriesThreshold) return series_from(0, a * a);
  const double s = std::fabs(std::sin(a));
  if (s <= std::numeric_limits<double>::epsilon() * a) return std::nullopt;
  return std::log(s / a);
}

std::optional<double> log_sinc_excess(double t) noexcept {
  const double a = std::fabs(t);
  if (a < kSeriesThreshold) {
    const double u = a * a;
    return u * series_from(1, u);
  }
  const auto ls = log_sinc(a);
  if (!ls) return std::nullopt;
  return *ls + a * a / 6.0;
}

double integrand(double t, PValue p) noexcept {
  const auto ls = log_sinc(t);
  if (!ls) return 0.0;
  return std::exp(2.0 * p.value() * *ls);
}

double wallis(double p) {
  if (!(p >= 0.0)) throw std::domain_error("wallis: p must be >= 0");
  if (p == 0.0) return 1.0;
  const double log_ratio =
      p >= 10.0 ? log_gamma_half_step(p) : log_gamma(p + 0.5) - log_gamma(p + 1.0);
  return std::exp(log_ratio) / std::sqrt(std::numbers::pi);
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: x must be > 0");
  if (x == 1.0 || x == 2.0) return 0.0;
  if (x < 0.5) {
    // Reflection: Gamma(x) Gamma(1 - x) = pi / sin(pi x).
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) -
           lanczos_log_gamma(1.0 - x);
  }
  return lanczos_log_gamma(x);
}

}  // namespace sincpow
