#include "sincpow/selfcheck.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "sincpow/bspline.hpp"
#include "sincpow/quadrature.hpp"
#include "sincpow/theorem.hpp"

namespace sincpow {

namespace {

PropertyResult verdict(std::string name, bool ok, const std::string& detail) {
  return {std::move(name), ok, detail};
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

// x = j/8 for j in [-8n, 8n] covers knots, midpoints and off-knot points.
std::vector<ExactRational> rational_grid(int n) {
  std::vector<ExactRational> xs;
  for (int j = -4 * n - 2; j <= 4 * n + 2; ++j) xs.emplace_back(mpz_class(j), mpz_class(8));
  xs.emplace_back(mpz_class(1), mpz_class(3));
  xs.emplace_back(mpz_class(-5), mpz_class(7));
  return xs;
}

PropertyResult oracle_equivalence() {
  double worst = 0.0;
  for (int n = 1; n <= 20; ++n) {
    const IntegralEstimate est = integral_numeric(PValue(n));
    const double diff = std::fabs(est.value - integral_exact(n).to_double());
    if (diff > est.error_bound || est.error_bound > 1e-8) {
      return verdict("oracle_equivalence", false,
                     "n=" + std::to_string(n) + " diff=" + fmt("%.3g", diff) +
                         " bound=" + fmt("%.3g", est.error_bound));
    }
    worst = std::max(worst, diff);
  }
  return verdict("oracle_equivalence", true, "n=1..20, max |numeric-exact| = " + fmt("%.3g", worst));
}

PropertyResult plancherel() {
  for (int n = 1; n <= 15; ++n) {
    if (integral_exact(n) != bspline_value(BSplineOrder(2 * n), ExactRational(0))) {
      return verdict("plancherel", false, "mismatch at n=" + std::to_string(n));
    }
  }
  return verdict("plancherel", true, "I(n) = beta^{2n}(0) exactly, n=1..15");
}

PropertyResult closed_form_vs_recursion() {
  for (int n = 1; n <= 8; ++n) {
    for (const ExactRational& x : rational_grid(n)) {
      if (bspline_value(BSplineOrder(n), x) != bspline_recursive(BSplineOrder(n), x)) {
        return verdict("bspline_closed_form_vs_recursion", false,
                       "n=" + std::to_string(n) + " x=" + x.to_string());
      }
    }
  }
  return verdict("bspline_closed_form_vs_recursion", true, "n=1..8 on an eighth-step grid");
}

PropertyResult partition_of_unity() {
  for (int n = 1; n <= 8; ++n) {
    for (int j = 0; j < 12; ++j) {
      const ExactRational x(mpz_class(j), mpz_class(12));
      ExactRational sum;
      for (int k = -n; k <= n; ++k) sum += bspline_value(BSplineOrder(n), x - ExactRational(k));
      if (sum != ExactRational(1)) {
        return verdict("partition_of_unity", false,
                       "n=" + std::to_string(n) + " x=" + x.to_string() + " sum=" + sum.to_string());
      }
    }
  }
  return verdict("partition_of_unity", true, "n=1..8, x=j/12");
}

PropertyResult symmetry_and_support() {
  for (int n = 1; n <= 8; ++n) {
    const ExactRational half_width(mpz_class(n), mpz_class(2));
    for (const ExactRational& x : rational_grid(n)) {
      const ExactRational v = bspline_value(BSplineOrder(n), x);
      const ExactRational ax = x.sign() < 0 ? -x : x;
      const bool ok = v == bspline_value(BSplineOrder(n), -x) &&
                      (ax > half_width ? v.sign() == 0 : true) &&
                      (ax < half_width ? v.sign() > 0 : true);
      if (!ok) {
        return verdict("bspline_symmetry_support", false,
                       "n=" + std::to_string(n) + " x=" + x.to_string());
      }
    }
  }
  return verdict("bspline_symmetry_support", true, "n=1..8");
}

PropertyResult majorant_grid() {
  const double radius = TheoremConstants::standard().central_radius;
  constexpr int kPoints = 100'000;
  double min_gap = majorant_gap(0.0);
  int argmin = 0;
  for (int i = 1; i < kPoints; ++i) {
    const double g = majorant_gap(radius * i / (kPoints - 1));
    if (g < min_gap) {
      min_gap = g;
      argmin = i;
    }
  }
  return verdict("majorant_grid", min_gap >= -1e-15 && argmin == 0,
                 "min gap " + fmt("%.3g", min_gap) + " at grid index " + std::to_string(argmin));
}

PropertyResult monotonicity() {
  IntegralEstimate prev = integral_numeric(PValue(1.0));
  for (int i = 11; i <= 100; ++i) {
    const double p = i / 10.0;
    const IntegralEstimate cur = integral_numeric(PValue(p));
    if (!(prev.value - prev.error_bound > cur.value + cur.error_bound)) {
      return verdict("monotonicity", false, "not strictly decreasing at p=" + fmt("%.2f", p));
    }
    prev = cur;
  }
  return verdict("monotonicity", true, "I(p) strictly decreasing on p=1.0(0.1)10.0");
}

PropertyResult sandwich() {
  for (double p : {1.25, 1.5, 2.5, 3.7}) {
    const IntegralEstimate est = integral_numeric(PValue(p));
    const double hi = integral_exact(static_cast<int>(std::floor(p))).to_double();
    const double lo = integral_exact(static_cast<int>(std::ceil(p))).to_double();
    if (!(est.value - est.error_bound <= hi && est.value + est.error_bound >= lo)) {
      return verdict("sandwich", false, "p=" + fmt("%g", p));
    }
  }
  return verdict("sandwich", true, "I(ceil p) <= I(p) <= I(floor p) at p=1.25,1.5,2.5,3.7");
}

PropertyResult chain_grid() {
  std::vector<double> ps = p_grid(1.0, 5.0, 0.01);
  for (int p = 6; p <= 20; ++p) ps.push_back(p);
  ps.push_back(50.0);
  ps.push_back(100.0);
  const auto certs = certify_grid(ps, QuadratureConfig{}, TheoremConstants::standard());
  for (const Certificate& c : certs) {
    const bool strict = c.p == 1.0 ? std::fabs(c.margin1) <= 1e-8 : c.margin1 > 0.0;
    if (c.verdict != Verdict::pass || !strict || c.sandwich_holds == false) {
      return verdict("chain_grid", false, "p=" + fmt("%.15g", c.p) + " margin1=" + fmt("%.3g", c.margin1));
    }
  }
  return verdict("chain_grid", true, std::to_string(certs.size()) + " certificates pass");
}

PropertyResult p0_reproduction() {
  const double p0 = solve_p0(1e-10);
  return verdict("p0_reproduction", p0 >= 1.84135 && p0 <= 1.84145, "p0 = " + fmt("%.12g", p0));
}

PropertyResult crossover_consistency() {
  const TheoremConstants& c = TheoremConstants::standard();
  const double p0 = solve_p0(1e-10);
  const bool continuous = std::fabs(tail_corrected_factor(p0) - c.sqrt_pi_over_3) <= 1e-9;
  const bool below_after = tail_corrected_factor(p0 + 1e-3) < c.sqrt_pi_over_3;
  const bool above_before = tail_corrected_factor(p0 - 1e-3) > c.sqrt_pi_over_3;
  return verdict("crossover_consistency", continuous && below_after && above_before,
                 "branches meet at p0; tail branch exceeds sqrt(pi/3) below p0");
}

PropertyResult correction_monotone() {
  const TheoremConstants& c = TheoremConstants::standard();
  double prev = correction_factor(PValue(1.0), c);
  for (int i = 1; i <= 2000; ++i) {
    const double p = 1.0 + 0.05 * i;
    const double cur = correction_factor(PValue(p), c);
    if (cur > prev || cur < 1.0 || improved_bound(PValue(p), c) >= ball_bound(PValue(p))) {
      return verdict("correction_factor_monotone", false, "p=" + fmt("%g", p));
    }
    prev = cur;
  }
  return verdict("correction_factor_monotone", true,
                 "C non-increasing, >= 1, and improved bound < Ball bound on [1, 101]");
}

PropertyResult ratio_behaviour() {
  const QuadratureConfig cfg;
  double prev = asymptotic_ratio(PValue(2.0), cfg);
  for (int n = 3; n <= 50; ++n) {
    const double cur = asymptotic_ratio(PValue(n), cfg);
    if (!(cur > prev)) return verdict("asymptotic_ratio", false, "not increasing at n=" + std::to_string(n));
    prev = cur;
  }
  const double r100 = asymptotic_ratio(PValue(100.0), cfg);
  return verdict("asymptotic_ratio", std::fabs(r100 - 1.0) <= 5e-3,
                 "r increasing on 2..50, r(100) = " + fmt("%.9f", r100));
}

PropertyResult tail_bounds() {
  for (std::int64_t k : {1, 2, 5, 10, 100, 10'000}) {
    for (double p : {1.0, 1.3, 2.0, 3.5, 10.0}) {
      const TailEnclosure enc = tail_enclosure(k, PValue(p));
      if (!(enc.low <= enc.high) ||
          enc.high > tail_bound_crude(std::numbers::pi * static_cast<double>(k), p)) {
        return verdict("tail_enclosure", false, "K=" + std::to_string(k) + " p=" + fmt("%g", p));
      }
    }
  }
  return verdict("tail_enclosure", true, "low <= high <= crude bound on sampled (K, p)");
}

}  // namespace

std::vector<NamedProperty> self_check_properties() {
  return {
      {"oracle_equivalence", oracle_equivalence},
      {"plancherel", plancherel},
      {"bspline_closed_form_vs_recursion", closed_form_vs_recursion},
      {"partition_of_unity", partition_of_unity},
      {"bspline_symmetry_support", symmetry_and_support},
      {"majorant_grid", majorant_grid},
      {"monotonicity", monotonicity},
      {"sandwich", sandwich},
      {"chain_grid", chain_grid},
      {"p0_reproduction", p0_reproduction},
      {"crossover_consistency", crossover_consistency},
      {"correction_factor_monotone", correction_monotone},
      {"asymptotic_ratio", ratio_behaviour},
      {"tail_enclosure", tail_bounds},
  };
}

bool run_self_check(std::ostream& report) {
  bool all = true;
  for (const NamedProperty& prop : self_check_properties()) {
    const auto start = std::chrono::steady_clock::now();
    PropertyResult r;
    try {
      r = prop.run();
    } catch (const std::exception& e) {
      r = {prop.name, false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && r.passed;
    report << (r.passed ? "pass " : "fail ") << prop.name << "  " << r.detail << "  ("
           << fmt("%.2f", secs) << " s)\n";
  }
  report << (all ? "all properties pass\n" : "some properties FAILED\n");
  return all;
}

}  // namespace sincpow
