#pragma once

#include <span>
#include <string>
#include <string_view>

#include "sincpow/quadrature.hpp"
#include "sincpow/rational.hpp"
#include "sincpow/theorem.hpp"

namespace sincpow {

enum class Format { csv, json };

/// One line of a certify/scan table. CSV columns follow field order.
struct ScanRow {
  double p = 0.0;
  double integral = 0.0;
  double error_bound = 0.0;
  double c_factor = 0.0;
  double improved_bound = 0.0;
  double unit_bound = 0.0;
  double ball_bound = 0.0;
  double ratio = 0.0;
  Verdict verdict = Verdict::fail;
};

inline constexpr std::string_view kScanCsvHeader =
    "p,integral,error_bound,c_factor,improved_bound,unit_bound,ball_bound,ratio,verdict";

ScanRow make_scan_row(const Certificate& cert, const TheoremConstants& consts);

/// printf("%.15g").
std::string format_number(double v);

std::string render_scan(std::span<const ScanRow> rows, Format format);
std::string render_estimate(double p, const IntegralEstimate& est, Format format);
std::string render_exact(int n, const ExactRational& value, Format format);
std::string render_p0(double p0, double residual, Format format);
std::string render_bspline(int n, const ExactRational& x, const ExactRational& value, Format format);

}  // namespace sincpow
