#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sincpow/kernel.hpp"
#include "sincpow/quadrature.hpp"

namespace sincpow {

/// Constants of the sharpened inequality. p0 is solved for, not tabulated.
struct TheoremConstants {
  double sqrt_3_over_pi = 0.0;
  double sqrt_pi_over_3 = 0.0;
  double central_radius = 0.0;  // 6 / sqrt(5)
  double rhs_p0 = 0.0;          // (1 - sqrt(3/pi)) pi
  double p0 = 0.0;

  static TheoremConstants compute(double p0_tol = 1e-12);
  /// Process-wide instance, computed on first use.
  static const TheoremConstants& standard();
};

/// sqrt(2) / sqrt(p), the classical bound.
double ball_bound(PValue p);

/// sqrt(3/pi) / sqrt(p), the bound on the integral over |t| <= 6/sqrt(5).
double central_gaussian_bound(PValue p);

/// exp(-t^2/3) - (sin t / t)^2 for |t| <= 6/sqrt(5). Nonnegative there.
double majorant_gap(double t);

/// h(p) = (sqrt5/6)^{2p-1} sqrt(p) / (p - 1/2) - (1 - sqrt(3/pi)) pi. Root is p0.
double crossover_function(double p);

/// 1 + (sqrt5/6)^{2p-1} sqrt(p) / ((p - 1/2) sqrt(3 pi)): the tail-corrected
/// branch of C(p), i.e. (central bound + crude tail bound) / central bound.
double tail_corrected_factor(double p);

/// C(p): sqrt(pi/3) on [1, p0], tail_corrected_factor beyond.
double correction_factor(PValue p, const TheoremConstants& consts);

/// C(p) sqrt(3/pi) / sqrt(p). Exactly 1/sqrt(p) on [1, p0].
double improved_bound(PValue p, const TheoremConstants& consts);

/// Root of crossover_function on [1, 3] to within tol.
double solve_p0(double tol);

/// I(p): exact rational oracle when p is integral, quadrature otherwise.
IntegralEstimate evaluate_integral(PValue p, const QuadratureConfig& cfg);

enum class Verdict { pass, fail };
std::string_view to_string(Verdict v) noexcept;

struct Certificate {
  double p = 0.0;
  IntegralEstimate integral;
  bool exact_oracle = false;
  double c_of_p = 0.0;
  double improved_bound = 0.0;
  double unit_bound = 0.0;
  double ball_bound = 0.0;
  double margin1 = 0.0;  // improved - (I + err)
  double margin2 = 0.0;  // unit - improved
  double margin3 = 0.0;  // ball - unit
  Verdict verdict = Verdict::fail;
  // I(ceil p) <= I(p) <= I(floor p) within error, for non-integral p.
  std::optional<bool> sandwich_holds;
};

Certificate certify(PValue p, const QuadratureConfig& cfg, const TheoremConstants& consts);

/// Certificates for every p, in input order. Evaluated in parallel.
std::vector<Certificate> certify_grid(std::span<const double> ps, const QuadratureConfig& cfg,
                                      const TheoremConstants& consts);

/// r(p) = I(p) sqrt(p) / sqrt(3/pi); tends to 1.
double asymptotic_ratio(PValue p, const QuadratureConfig& cfg);

/// p_from, p_from + step, ... up to p_to (inclusive, with rounding slack).
/// Points within 1e-12 of an integer are snapped to it.
std::vector<double> p_grid(double p_from, double p_to, double step);

}  // namespace sincpow
