#include <cmath>
#include <numbers>

#include <omp.h>

#include "doctest.h"
#include "sincpow/bspline.hpp"
#include "sincpow/quadrature.hpp"

using namespace sincpow;

namespace {

constexpr double kPi = std::numbers::pi;

// Central part over [0, K pi] at near machine precision, as a test oracle.
double central_part_reference(PValue p, std::int64_t k) {
  const GaussLegendreRule rule = gauss_legendre(48);
  double sum = 0.0;
  for (std::int64_t j = 0; j < k; ++j) {
    sum += integrate_segment(p, j * kPi, (j + 1) * kPi, 1e-17, rule).value;
  }
  return 2.0 / kPi * sum;
}

}  // namespace

TEST_CASE("Gauss-Legendre rule integrates polynomials up to degree 2n-1") {
  for (int n : {4, 7, 32}) {
    const GaussLegendreRule rule = gauss_legendre(n);
    for (int deg = 0; deg <= 2 * n - 1; ++deg) {
      double acc = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        acc += rule.weights[i] * std::pow(rule.nodes[i], deg);
      }
      const double exact = deg % 2 == 1 ? 0.0 : 2.0 / (deg + 1);
      CHECK(acc == doctest::Approx(exact).epsilon(1e-13).scale(1.0));
    }
  }
  CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
}

TEST_CASE("pairwise_sum") {
  std::vector<double> xs(1000, 0.1);
  CHECK(pairwise_sum(xs) == doctest::Approx(100.0).epsilon(1e-15));
  CHECK(pairwise_sum({}) == 0.0);
}

TEST_CASE("QuadratureConfig validation") {
  QuadratureConfig cfg;
  CHECK(cfg.abs_tol == 1e-10);
  CHECK(cfg.panel_order == 32);
  CHECK(cfg.max_panels == 10'000'000);
  cfg.abs_tol = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.panel_order = 3;
  CHECK_THROWS_AS(integral_numeric(PValue(2.0), cfg), std::invalid_argument);
  cfg = {};
  cfg.max_panels = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("integral_numeric examples") {
  const IntegralEstimate one = integral_numeric(PValue(1.0));
  CHECK(std::fabs(one.value - 1.0) <= one.error_bound);
  CHECK(one.error_bound <= 1e-9);
  CHECK(one.tail_low <= one.tail_high);
  CHECK(one.error_bound >= 0.5 * (one.tail_high - one.tail_low));
  CHECK(one.truncation_radius == doctest::Approx(kPi * std::round(one.truncation_radius / kPi)));

  const IntegralEstimate two = integral_numeric(PValue(2.0));
  CHECK(std::fabs(two.value - 2.0 / 3.0) <= two.error_bound);

  const IntegralEstimate ten = integral_numeric(PValue(10.0));
  CHECK(std::fabs(ten.value - integral_exact(10).to_double()) <= ten.error_bound);
}

TEST_CASE("oracle containment for n = 1..20") {
  for (int n = 1; n <= 20; ++n) {
    const IntegralEstimate est = integral_numeric(PValue(n));
    CHECK_MESSAGE(std::fabs(est.value - integral_exact(n).to_double()) <= est.error_bound, "n=", n);
    CHECK(est.error_bound <= 1e-8);
  }
}

TEST_CASE("tighter tolerance shrinks the error bound") {
  QuadratureConfig cfg;
  cfg.abs_tol = 1e-12;
  const IntegralEstimate est = integral_numeric(PValue(3.0), cfg);
  CHECK(est.error_bound <= 1e-12);
  CHECK(std::fabs(est.value - 0.55) <= est.error_bound);
}

TEST_CASE("tolerance unreachable is reported") {
  QuadratureConfig cfg;
  cfg.max_panels = 100;
  CHECK_THROWS_AS(integral_numeric(PValue(1.0), cfg), ToleranceUnreachable);
  cfg = {};
  cfg.abs_tol = 1e-30;
  CHECK_THROWS_AS(integral_numeric(PValue(1.0), cfg), ToleranceUnreachable);
}

TEST_CASE("tail_bound_crude examples") {
  const double r = 6.0 / std::sqrt(5.0);
  CHECK(tail_bound_crude(r, 1.0) == doctest::Approx(0.237254181139059).epsilon(1e-13));
  CHECK(tail_bound_crude(r, 2.0) == doctest::Approx(0.0109839898675491).epsilon(1e-13));
  double prev = tail_bound_crude(1.0, 1.5);
  for (double radius = 2.0; radius < 1e6; radius *= 3.0) {
    const double cur = tail_bound_crude(radius, 1.5);
    CHECK(cur < prev);
    prev = cur;
  }
  CHECK(prev < 1e-11);
  CHECK_THROWS_AS(tail_bound_crude(1.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(tail_bound_crude(0.0, 2.0), std::domain_error);
}

TEST_CASE("tail_enclosure contains the oracle-derived tail") {
  for (int n : {1, 2, 3}) {
    for (std::int64_t k : {10, 100}) {
      const PValue p(n);
      const double truth = integral_exact(n).to_double() - central_part_reference(p, k);
      const TailEnclosure enc = tail_enclosure(k, p);
      // Slack covers the rounding of the reference central part.
      const double slack = 4e-16;
      CHECK_MESSAGE(enc.low - slack <= truth, "n=", n, " K=", k);
      CHECK_MESSAGE(truth <= enc.high + slack, "n=", n, " K=", k);
    }
  }
}

TEST_CASE("tail_enclosure width and crude-bound domination") {
  // 2 W(1) pi^-2 (K^-2 + 1/(K(K+1))) at K = 1e4.
  const TailEnclosure enc = tail_enclosure(10'000, PValue(1.0));
  CHECK(enc.width() == doctest::Approx(2.02632e-9).epsilon(1e-4));
  for (std::int64_t k : {1, 2, 3, 10, 1000, 100000}) {
    for (double p : {1.0, 1.01, 1.5, 2.0, 4.0, 25.0}) {
      const TailEnclosure e = tail_enclosure(k, PValue(p));
      CHECK(e.low >= 0.0);
      CHECK(e.low <= e.high);
      CHECK(e.high <= tail_bound_crude(kPi * static_cast<double>(k), p));
    }
  }
  CHECK_THROWS_AS(tail_enclosure(0, PValue(1.0)), std::domain_error);
}

TEST_CASE("truncation_index is the smallest sufficient K") {
  for (double p : {1.0, 1.3, 2.0, 6.0}) {
    const std::int64_t k = truncation_index(PValue(p), 5e-11, 10'000'000);
    CHECK(tail_enclosure(k, PValue(p)).width() < 5e-11);
    if (k > 1) CHECK(tail_enclosure(k - 1, PValue(p)).width() >= 5e-11);
  }
  CHECK_THROWS_AS(truncation_index(PValue(1.0), 1e-20, 1000), ToleranceUnreachable);
}

TEST_CASE("parallel kernel is bit-identical to the serial reference") {
  for (double p : {1.0, 1.37, 2.5, 11.0}) {
    const IntegralEstimate ref = integral_numeric_serial(PValue(p));
    for (int threads : {1, 2, 3, 8}) {
      omp_set_num_threads(threads);
      const IntegralEstimate par = integral_numeric(PValue(p));
      CHECK(par.value == ref.value);
      CHECK(par.error_bound == ref.error_bound);
      CHECK(par.central_part == ref.central_part);
      CHECK(par.panels_used == ref.panels_used);
      CHECK(par.truncation_radius == ref.truncation_radius);
    }
  }
  omp_set_num_threads(omp_get_num_procs());
}

TEST_CASE("I(p) is strictly decreasing and bounded by one") {
  IntegralEstimate prev = integral_numeric(PValue(1.0));
  CHECK(prev.value - prev.error_bound <= 1.0);
  for (int i = 11; i <= 100; ++i) {
    const IntegralEstimate cur = integral_numeric(PValue(i / 10.0));
    CHECK(prev.value - prev.error_bound > cur.value + cur.error_bound);
    CHECK(cur.value - cur.error_bound <= 1.0);
    prev = cur;
  }
}

TEST_CASE("sandwich between neighbouring integer orders") {
  for (double p : {1.25, 1.5, 2.5, 3.7, 7.01}) {
    const IntegralEstimate est = integral_numeric(PValue(p));
    const double upper = integral_exact(static_cast<int>(std::floor(p))).to_double();
    const double lower = integral_exact(static_cast<int>(std::floor(p)) + 1).to_double();
    CHECK(est.value - est.error_bound <= upper);
    CHECK(est.value + est.error_bound >= lower);
  }
}

TEST_CASE("central part over [-6/sqrt5, 6/sqrt5]") {
  const double r = 6.0 / std::sqrt(5.0);
  const IntegralEstimate two = integral_over_centre(PValue(2.0), r);
  CHECK(two.value + two.error_bound <= 0.6909883);
  CHECK(two.value > 0.6);
  for (double p : {1.0, 5.0}) {
    const IntegralEstimate est = integral_over_centre(PValue(p), r);
    CHECK(est.value + est.error_bound <= std::sqrt(3.0 / kPi) / std::sqrt(p));
  }
  // Radius covering several periods agrees with the full integral minus its tail.
  const IntegralEstimate wide = integral_over_centre(PValue(3.0), 40.0 * kPi);
  const TailEnclosure tail = tail_enclosure(40, PValue(3.0));
  CHECK(wide.value + tail.low <= 0.55 + wide.error_bound);
  CHECK(wide.value + tail.high >= 0.55 - wide.error_bound);
}
