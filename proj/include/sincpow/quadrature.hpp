#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "sincpow/kernel.hpp"

namespace sincpow {

struct QuadratureConfig {
  double abs_tol = 1e-10;            // target absolute error on I(p)
  int panel_order = 32;              // Gauss-Legendre nodes per panel
  std::int64_t max_panels = 10'000'000;

  void validate() const;
};

/// I(p) with an a-posteriori error bound. The true value lies in
/// [value - error_bound, value + error_bound].
struct IntegralEstimate {
  double value = 0.0;
  double error_bound = 0.0;
  double central_part = 0.0;  // (2/pi) int_0^{K pi}
  double tail_low = 0.0;      // enclosure of (2/pi) int_{K pi}^inf
  double tail_high = 0.0;
  std::int64_t panels_used = 0;
  double truncation_radius = 0.0;  // K pi
};

struct TailEnclosure {
  double low = 0.0;
  double high = 0.0;
  double width() const noexcept { return high - low; }
};

class ToleranceUnreachable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendreRule gauss_legendre(int n);

/// Result of adaptive integration over one interval, in raw (unscaled) units.
struct SegmentResult {
  double value = 0.0;
  double residual = 0.0;  // sum of |fine - coarse| over accepted leaves
  std::int64_t leaves = 0;
};

/// Adaptive Gauss-Legendre over [a, b]: bisect until the rule on the whole
/// interval and on its two halves agree within tol.
SegmentResult integrate_segment(PValue p, double a, double b, double tol,
                                const GaussLegendreRule& rule, int max_depth = 40);

/// (2/pi) int_0^radius (sin t / t)^{2p} dt, i.e. the part of I(p) from
/// [-radius, radius]. error_bound carries the refinement residual.
IntegralEstimate integral_over_centre(PValue p, double radius, const QuadratureConfig& cfg = {});

/// (2/pi) int_R^inf t^{-2p} dt, an upper bound on the part of I(p) from |t| >= R.
double tail_bound_crude(double radius, double p);

/// Enclosure of (2/pi) int_{K pi}^inf (sin t / t)^{2p} dt.
TailEnclosure tail_enclosure(std::int64_t k, PValue p);

/// Smallest K with tail_enclosure(K, p).width() < budget, searching up to
/// max_k. Throws ToleranceUnreachable if none exists.
std::int64_t truncation_index(PValue p, double budget, std::int64_t max_k);

/// OpenMP-parallel evaluation of I(p). Bit-identical to the serial
/// reference for any thread count.
IntegralEstimate integral_numeric(PValue p, const QuadratureConfig& cfg = {});

/// Single-threaded reference implementation of integral_numeric.
IntegralEstimate integral_numeric_serial(PValue p, const QuadratureConfig& cfg = {});

/// Pairwise summation in fixed order.
double pairwise_sum(std::span<const double> xs) noexcept;

}  // namespace sincpow
