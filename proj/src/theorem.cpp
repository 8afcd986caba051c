#include "sincpow/theorem.hpp"

#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "sincpow/bspline.hpp"
#include "sincpow/roots.hpp"

namespace sincpow {

namespace {

const double kSqrt3OverPi = std::sqrt(3.0 / std::numbers::pi);
const double kCentralRadius = 6.0 / std::sqrt(5.0);
const double kDecay = std::sqrt(5.0) / 6.0;

// Test-only fault injection: a build that lowers C(p) by 5% must fail certification.
#ifdef SINCPOW_INJECT_CORRECTION_BUG
constexpr double kCorrectionScale = 0.95;
#else
constexpr double kCorrectionScale = 1.0;
#endif

// (sqrt5/6)^{2p-1} sqrt(p) / (p - 1/2): the crude tail bound over the central bound, times sqrt(3 pi).
double relative_tail(double p) {
  return std::pow(kDecay, 2.0 * p - 1.0) * std::sqrt(p) / (p - 0.5);
}

// Largest integral p evaluated through the exact rational oracle.
constexpr double kMaxExactOrder = 1000.0;

ExactRational exact_from_double(double v) { return ExactRational(mpq_class(v)); }

}  // namespace

TheoremConstants TheoremConstants::compute(double p0_tol) {
  TheoremConstants c;
  c.sqrt_3_over_pi = kSqrt3OverPi;
  c.sqrt_pi_over_3 = std::sqrt(std::numbers::pi / 3.0);
  c.central_radius = kCentralRadius;
  c.rhs_p0 = (1.0 - kSqrt3OverPi) * std::numbers::pi;
  c.p0 = solve_p0(p0_tol);
  return c;
}

const TheoremConstants& TheoremConstants::standard() {
  static const TheoremConstants instance = compute();
  return instance;
}

double ball_bound(PValue p) { return std::sqrt(2.0) / std::sqrt(p.value()); }

double central_gaussian_bound(PValue p) { return kSqrt3OverPi / std::sqrt(p.value()); }

double majorant_gap(double t) {
  if (!(std::fabs(t) <= kCentralRadius)) {
    throw std::domain_error("majorant_gap: |t| must not exceed 6/sqrt(5)");
  }
  // exp(-t^2/3) - e^{2 ls} = e^{2 ls} expm1(-2 (ls + t^2/6)).
  const double ls = *log_sinc(t);
  const double excess = *log_sinc_excess(t);
  return std::exp(2.0 * ls) * std::expm1(-2.0 * excess);
}

double crossover_function(double p) {
  return relative_tail(p) - (1.0 - kSqrt3OverPi) * std::numbers::pi;
}

double tail_corrected_factor(double p) {
  return 1.0 + relative_tail(p) / std::sqrt(3.0 * std::numbers::pi);
}

double correction_factor(PValue p, const TheoremConstants& consts) {
  const double c = p.value() <= consts.p0 ? consts.sqrt_pi_over_3 : tail_corrected_factor(p.value());
  return kCorrectionScale * c;
}

double improved_bound(PValue p, const TheoremConstants& consts) {
  const double root_p = std::sqrt(p.value());
  if (p.value() <= consts.p0) {
    // sqrt(pi/3) sqrt(3/pi) = 1 exactly; avoid the rounding of the product.
    return kCorrectionScale / root_p;
  }
  return correction_factor(p, consts) * consts.sqrt_3_over_pi / root_p;
}

double solve_p0(double tol) { return bracketed_root(crossover_function, 1.0, 3.0, tol); }

IntegralEstimate evaluate_integral(PValue p, const QuadratureConfig& cfg) {
  if (!p.is_integral() || p.value() > kMaxExactOrder) return integral_numeric(p, cfg);
  const ExactRational exact = integral_exact(static_cast<int>(p.value()));
  IntegralEstimate est;
  est.value = exact.to_double();
  est.central_part = est.value;
  if (exact_from_double(est.value) != exact) {
    est.error_bound = std::nextafter(est.value, 2.0) - est.value;
  }
  return est;
}

std::string_view to_string(Verdict v) noexcept { return v == Verdict::pass ? "pass" : "fail"; }

Certificate certify(PValue p, const QuadratureConfig& cfg, const TheoremConstants& consts) {
  Certificate cert;
  cert.p = p.value();
  cert.exact_oracle = p.is_integral() && p.value() <= kMaxExactOrder;
  cert.integral = evaluate_integral(p, cfg);
  cert.c_of_p = correction_factor(p, consts);
  cert.improved_bound = improved_bound(p, consts);
  cert.unit_bound = 1.0 / std::sqrt(p.value());
  cert.ball_bound = ball_bound(p);
  cert.margin1 = cert.improved_bound - (cert.integral.value + cert.integral.error_bound);
  cert.margin2 = cert.unit_bound - cert.improved_bound;
  cert.margin3 = cert.ball_bound - cert.unit_bound;
  cert.verdict = (cert.margin1 >= 0.0 && cert.margin2 >= 0.0 && cert.margin3 >= 0.0)
                     ? Verdict::pass
                     : Verdict::fail;
  if (!cert.exact_oracle && p.value() < kMaxExactOrder) {
    const int floor_p = static_cast<int>(std::floor(p.value()));
    const double upper = integral_exact(floor_p).to_double();
    const double lower = integral_exact(floor_p + 1).to_double();
    const double v = cert.integral.value;
    const double e = cert.integral.error_bound;
    cert.sandwich_holds = (v - e <= upper) && (v + e >= lower);
  }
  return cert;
}

std::vector<Certificate> certify_grid(std::span<const double> ps, const QuadratureConfig& cfg,
                                      const TheoremConstants& consts) {
  // Validate up front so no exception is thrown inside the parallel region for bad input.
  std::vector<PValue> points;
  points.reserve(ps.size());
  for (double p : ps) points.emplace_back(p);

  std::vector<Certificate> out(points.size());
  std::exception_ptr failure;
  const auto n = static_cast<std::int64_t>(points.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = certify(points[static_cast<std::size_t>(i)], cfg, consts);
    } catch (...) {
#pragma omp critical(sincpow_certify_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

double asymptotic_ratio(PValue p, const QuadratureConfig& cfg) {
  return evaluate_integral(p, cfg).value * std::sqrt(p.value()) / kSqrt3OverPi;
}

std::vector<double> p_grid(double p_from, double p_to, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("step must be > 0");
  if (!(p_from <= p_to)) throw std::invalid_argument("p_from must not exceed p_to");
  const auto count = static_cast<std::int64_t>(std::floor((p_to - p_from) / step + 1e-9)) + 1;
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    double p = p_from + static_cast<double>(i) * step;
    if (std::fabs(p - std::round(p)) < 1e-12) p = std::round(p);
    grid.push_back(p);
  }
  return grid;
}

}  // namespace sincpow
