#include "sincpow/report.hpp"

#include <cmath>
#include <cstdio>

namespace sincpow {

namespace {

std::string printf_double(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string quoted(std::string_view s) { return "\"" + std::string(s) + "\""; }

}  // namespace

ScanRow make_scan_row(const Certificate& cert, const TheoremConstants& consts) {
  ScanRow row;
  row.p = cert.p;
  row.integral = cert.integral.value;
  row.error_bound = cert.integral.error_bound;
  row.c_factor = cert.c_of_p;
  row.improved_bound = cert.improved_bound;
  row.unit_bound = cert.unit_bound;
  row.ball_bound = cert.ball_bound;
  row.ratio = cert.integral.value * std::sqrt(cert.p) / consts.sqrt_3_over_pi;
  row.verdict = cert.verdict;
  return row;
}

std::string format_number(double v) { return printf_double("%.15g", v); }

std::string render_scan(std::span<const ScanRow> rows, Format format) {
  std::string out;
  if (format == Format::csv) {
    out += kScanCsvHeader;
    out += '\n';
    for (const ScanRow& r : rows) {
      out += format_number(r.p) + ',' + format_number(r.integral) + ',' +
             format_number(r.error_bound) + ',' + format_number(r.c_factor) + ',' +
             format_number(r.improved_bound) + ',' + format_number(r.unit_bound) + ',' +
             format_number(r.ball_bound) + ',' + format_number(r.ratio) + ',' +
             std::string(to_string(r.verdict)) + '\n';
    }
    return out;
  }
  out += "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const ScanRow& r = rows[i];
    out += "{\"p\":" + format_number(r.p) + ",\"integral\":" + format_number(r.integral) +
           ",\"error_bound\":" + format_number(r.error_bound) +
           ",\"c_factor\":" + format_number(r.c_factor) +
           ",\"improved_bound\":" + format_number(r.improved_bound) +
           ",\"unit_bound\":" + format_number(r.unit_bound) +
           ",\"ball_bound\":" + format_number(r.ball_bound) +
           ",\"ratio\":" + format_number(r.ratio) +
           ",\"verdict\":" + quoted(to_string(r.verdict)) + "}";
    out += i + 1 < rows.size() ? ",\n" : "\n";
  }
  out += "]\n";
  return out;
}

std::string render_estimate(double p, const IntegralEstimate& est, Format format) {
  const std::string panels = std::to_string(est.panels_used);
  if (format == Format::csv) {
    return "p,value,error_bound,truncation_radius,panels_used\n" + format_number(p) + ',' +
           format_number(est.value) + ',' + format_number(est.error_bound) + ',' +
           format_number(est.truncation_radius) + ',' + panels + '\n';
  }
  return "{\"p\":" + format_number(p) + ",\"value\":" + format_number(est.value) +
         ",\"error_bound\":" + format_number(est.error_bound) +
         ",\"truncation_radius\":" + format_number(est.truncation_radius) +
         ",\"panels_used\":" + panels + "}\n";
}

std::string render_exact(int n, const ExactRational& value, Format format) {
  const std::string decimal = printf_double("%#.15g", value.to_double());
  if (format == Format::csv) {
    return "n,exact,decimal\n" + std::to_string(n) + ',' + value.to_string() + ',' + decimal + '\n';
  }
  return "{\"n\":" + std::to_string(n) + ",\"exact\":" + quoted(value.to_string()) +
         ",\"decimal\":" + decimal + "}\n";
}

std::string render_p0(double p0, double residual, Format format) {
  const std::string root = printf_double("%#.12g", p0);
  if (format == Format::csv) return "p0,residual\n" + root + ',' + format_number(residual) + '\n';
  return "{\"p0\":" + root + ",\"residual\":" + format_number(residual) + "}\n";
}

std::string render_bspline(int n, const ExactRational& x, const ExactRational& value,
                           Format format) {
  const std::string decimal = printf_double("%#.15g", value.to_double());
  if (format == Format::csv) {
    return "n,x,value,decimal\n" + std::to_string(n) + ',' + x.to_string() + ',' +
           value.to_string() + ',' + decimal + '\n';
  }
  return "{\"n\":" + std::to_string(n) + ",\"x\":" + quoted(x.to_string()) +
         ",\"value\":" + quoted(value.to_string()) + ",\"decimal\":" + decimal + "}\n";
}

}  // namespace sincpow
