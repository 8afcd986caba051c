#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "quadrature_common.hpp"

namespace sincpow {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double apply_rule(PValue p, double a, double b, const GaussLegendreRule& rule) noexcept {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    acc += rule.weights[i] * integrand(mid + half * rule.nodes[i], p);
  }
  return half * acc;
}

SegmentResult refine(PValue p, double a, double b, double coarse, double tol,
                     const GaussLegendreRule& rule, int depth) {
  const double mid = 0.5 * (a + b);
  const double left = apply_rule(p, a, mid, rule);
  const double right = apply_rule(p, mid, b, rule);
  const double fine = left + right;
  const double diff = std::fabs(fine - coarse);
  // The integrand is nonnegative, so |fine| bounds the rounding in both sums.
  if (diff <= std::max(tol, 16.0 * kEps * fine)) return {fine, diff, 1};
  if (depth == 0) {
    throw ToleranceUnreachable("panel refinement did not converge on [" + std::to_string(a) +
                               ", " + std::to_string(b) + "]");
  }
  const SegmentResult l = refine(p, a, mid, left, 0.5 * tol, rule, depth - 1);
  const SegmentResult r = refine(p, mid, b, right, 0.5 * tol, rule, depth - 1);
  return {l.value + r.value, l.residual + r.residual, l.leaves + r.leaves};
}

// Allowance for rounding in the integrand (exp of 2p ln|sinc|) and in the sums.
double rounding_allowance(double value, double p) noexcept {
  return 64.0 * kEps * (1.0 + 2.0 * p) * std::fabs(value);
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0.0)) throw std::invalid_argument("abs_tol must be > 0");
  if (panel_order < 4) throw std::invalid_argument("panel_order must be >= 4");
  if (max_panels < 1) throw std::invalid_argument("max_panels must be >= 1");
}

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) <= 2.0 * kEps) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = pk;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo] = -x;
    rule.nodes[hi] = x;
    rule.weights[lo] = w;
    rule.weights[hi] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

SegmentResult integrate_segment(PValue p, double a, double b, double tol,
                                const GaussLegendreRule& rule, int max_depth) {
  const double coarse = apply_rule(p, a, b, rule);
  return refine(p, a, b, coarse, tol, rule, max_depth);
}

IntegralEstimate integral_over_centre(PValue p, double radius, const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(radius > 0.0)) throw std::invalid_argument("radius must be > 0");
  const GaussLegendreRule rule = gauss_legendre(cfg.panel_order);
  const auto pieces = static_cast<std::int64_t>(std::ceil(radius / std::numbers::pi));
  const double raw_tol = 0.5 * cfg.abs_tol * (0.5 * std::numbers::pi) / static_cast<double>(pieces);
  std::vector<double> values;
  std::vector<double> residuals;
  std::int64_t leaves = 0;
  for (std::int64_t k = 0; k < pieces; ++k) {
    const double a = static_cast<double>(k) * std::numbers::pi;
    const double b = std::min(radius, a + std::numbers::pi);
    const SegmentResult seg = integrate_segment(p, a, b, raw_tol, rule);
    values.push_back(seg.value);
    residuals.push_back(seg.residual);
    leaves += seg.leaves;
  }
  IntegralEstimate est;
  est.central_part = (2.0 / std::numbers::pi) * pairwise_sum(values);
  est.value = est.central_part;
  est.error_bound = (2.0 / std::numbers::pi) * pairwise_sum(residuals) +
                    rounding_allowance(est.value, p.value());
  est.panels_used = leaves;
  est.truncation_radius = radius;
  return est;
}

double tail_bound_crude(double radius, double p) {
  if (!(radius > 0.0)) throw std::domain_error("tail_bound_crude: radius must be > 0");
  if (!(p > 0.5)) throw std::domain_error("tail_bound_crude: p must be > 1/2");
  return (2.0 / std::numbers::pi) * std::pow(radius, 1.0 - 2.0 * p) / (2.0 * p - 1.0);
}

TailEnclosure tail_enclosure(std::int64_t k, PValue p) {
  if (k < 1) throw std::domain_error("tail_enclosure: K must be >= 1");
  const double s = 2.0 * p.value();
  const double kd = static_cast<double>(k);
  // Period j contributes between 2W ((j+1) pi)^{-s} and 2W (j pi)^{-s};
  // the sums over j are bracketed by integral comparison.
  const double scale = 2.0 * wallis(p.value());
  const double low = scale * std::pow(std::numbers::pi * (kd + 1.0), -s) * (kd + 1.0) / (s - 1.0);
  const double bracket_high =
      scale * std::pow(std::numbers::pi * kd, -s) * (1.0 + kd / (s - 1.0));
  const double crude = tail_bound_crude(std::numbers::pi * kd, p.value());
  return {low, std::min(bracket_high, crude)};
}

std::int64_t truncation_index(PValue p, double budget, std::int64_t max_k) {
  auto fits = [&](std::int64_t k) { return tail_enclosure(k, p).width() < budget; };
  if (fits(1)) return 1;
  std::int64_t lo = 1;  // does not fit
  std::int64_t hi = 2;
  while (!fits(std::min(hi, max_k))) {
    if (hi >= max_k) {
      throw ToleranceUnreachable("tolerance unreachable: tail enclosure needs more than " +
                                 std::to_string(max_k) + " panels");
    }
    lo = hi;
    hi *= 2;
  }
  hi = std::min(hi, max_k);
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (fits(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double pairwise_sum(std::span<const double> xs) noexcept {
  if (xs.size() <= 8) {
    double acc = 0.0;
    for (double x : xs) acc += x;
    return acc;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

namespace detail {

PanelPlan plan_panels(PValue p, const QuadratureConfig& cfg) {
  cfg.validate();
  PanelPlan plan;
  plan.exponent = p.value();
  plan.panel_count = truncation_index(p, 0.5 * cfg.abs_tol, cfg.max_panels);
  plan.tail = tail_enclosure(plan.panel_count, p);
  // Half the budget goes to the panels, shared evenly, in raw units.
  plan.panel_tol =
      0.5 * cfg.abs_tol * (0.5 * std::numbers::pi) / static_cast<double>(plan.panel_count);
  plan.rule = gauss_legendre(cfg.panel_order);
  return plan;
}

SegmentResult integrate_panel(PValue p, std::int64_t k, const PanelPlan& plan) {
  const double a = static_cast<double>(k) * std::numbers::pi;
  const double b = static_cast<double>(k + 1) * std::numbers::pi;
  return integrate_segment(p, a, b, plan.panel_tol, plan.rule);
}

IntegralEstimate assemble(const PanelPlan& plan, const std::vector<double>& values,
                          const std::vector<double>& residuals, std::int64_t leaves,
                          const QuadratureConfig& cfg) {
  if (leaves > cfg.max_panels) {
    throw ToleranceUnreachable("tolerance unreachable: refinement used " + std::to_string(leaves) +
                               " panels, budget " + std::to_string(cfg.max_panels));
  }
  IntegralEstimate est;
  est.central_part = (2.0 / std::numbers::pi) * pairwise_sum(values);
  est.tail_low = plan.tail.low;
  est.tail_high = plan.tail.high;
  est.value = est.central_part + 0.5 * (plan.tail.low + plan.tail.high);
  est.panels_used = leaves;
  est.truncation_radius = static_cast<double>(plan.panel_count) * std::numbers::pi;
  const double residual = (2.0 / std::numbers::pi) * pairwise_sum(residuals);
  est.error_bound =
      residual + 0.5 * plan.tail.width() + rounding_allowance(est.value, plan.exponent);
  return est;
}

}  // namespace detail

}  // namespace sincpow
