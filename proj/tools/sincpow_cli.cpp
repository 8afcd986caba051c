// Command-line front end: eval, exact, certify, scan, p0, bspline, check.
//
// Exit codes: 0 success, 1 certification or property failure,
// 2 usage error, 3 numerical failure.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sincpow/bspline.hpp"
#include "sincpow/quadrature.hpp"
#include "sincpow/report.hpp"
#include "sincpow/roots.hpp"
#include "sincpow/selfcheck.hpp"
#include "sincpow/theorem.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutputOptions {
  std::string format = "csv";
  std::string out;

  sincpow::Format parsed() const {
    return format == "json" ? sincpow::Format::json : sincpow::Format::csv;
  }
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", opts.out, "Write output to this path instead of stdout");
}

void emit(const OutputOptions& opts, const std::string& text) {
  if (opts.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream file(opts.out, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + opts.out + "'");
  file << text;
}

sincpow::PValue checked_p(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw UsageError("--p must be a finite value >= 1");
  return sincpow::PValue(p);
}

sincpow::QuadratureConfig checked_config(double tol) {
  if (!(tol > 0.0)) throw UsageError("--tol must be > 0");
  sincpow::QuadratureConfig cfg;
  cfg.abs_tol = tol;
  return cfg;
}

std::vector<double> checked_grid(double from, double to, double step) {
  if (!(from >= 1.0)) throw UsageError("--p-from must be >= 1");
  if (!(to >= from)) throw UsageError("--p-to must be >= --p-from");
  if (!(step > 0.0)) throw UsageError("--step must be > 0");
  return sincpow::p_grid(from, to, step);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sinc-power integrals, exact B-spline oracles and the sharpened Ball inequality"};
  app.require_subcommand(1);

  OutputOptions out_eval, out_exact, out_cert, out_scan, out_p0, out_bspline;

  double eval_p = 0.0;
  double eval_tol = 1e-10;
  auto* eval = app.add_subcommand("eval", "Evaluate I(p) by quadrature with an error bound");
  eval->add_option("--p", eval_p, "Exponent p >= 1")->required();
  eval->add_option("--tol", eval_tol, "Absolute tolerance")->capture_default_str();
  add_output_options(eval, out_eval);

  int exact_n = 0;
  auto* exact = app.add_subcommand("exact", "Exact rational I(n) = beta^{2n}(0)");
  exact->add_option("--n", exact_n, "Integer n >= 1")->required();
  add_output_options(exact, out_exact);

  double grid_from = 1.0;
  double grid_to = -1.0;
  double grid_step = 0.01;
  double grid_tol = 1e-10;
  auto add_grid = [&](CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--p-from", grid_from, "First p")->required();
    cmd->add_option("--p-to", grid_to, "Last p (defaults to --p-from)");
    cmd->add_option("--step", grid_step, "Grid step")->capture_default_str();
    cmd->add_option("--tol", grid_tol, "Quadrature tolerance")->capture_default_str();
    add_output_options(cmd, opts);
  };
  auto* certify_cmd = app.add_subcommand("certify", "Certify the inequality chain on a p grid");
  add_grid(certify_cmd, out_cert);
  auto* scan = app.add_subcommand("scan", "Tabulate the chain and asymptotic ratio on a p grid");
  add_grid(scan, out_scan);

  double p0_tol = 1e-12;
  auto* p0 = app.add_subcommand("p0", "Solve for the crossover point p0");
  p0->add_option("--tol", p0_tol, "Root tolerance")->capture_default_str();
  add_output_options(p0, out_p0);

  int bspline_n = 0;
  std::string bspline_x = "0";
  auto* bspline = app.add_subcommand("bspline", "Exact centered cardinal B-spline value");
  bspline->add_option("--n", bspline_n, "Order n >= 1")->required();
  bspline->add_option("--x", bspline_x, "Rational abscissa, e.g. 1/2 or 0.25")->capture_default_str();
  add_output_options(bspline, out_bspline);

  auto* check = app.add_subcommand("check", "Run the self-check property suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (eval->parsed()) {
      const auto p = checked_p(eval_p);
      const auto est = sincpow::integral_numeric(p, checked_config(eval_tol));
      emit(out_eval, sincpow::render_estimate(p.value(), est, out_eval.parsed()));
      return kExitOk;
    }
    if (exact->parsed()) {
      if (exact_n < 1) throw UsageError("--n must be >= 1");
      emit(out_exact, sincpow::render_exact(exact_n, sincpow::integral_exact(exact_n),
                                            out_exact.parsed()));
      return kExitOk;
    }
    if (certify_cmd->parsed() || scan->parsed()) {
      const bool is_certify = certify_cmd->parsed();
      const OutputOptions& opts = is_certify ? out_cert : out_scan;
      if (grid_to < 0.0) grid_to = grid_from;
      const auto grid = checked_grid(grid_from, grid_to, grid_step);
      const auto& consts = sincpow::TheoremConstants::standard();
      const auto certs = sincpow::certify_grid(grid, checked_config(grid_tol), consts);
      std::vector<sincpow::ScanRow> rows;
      rows.reserve(certs.size());
      bool all_pass = true;
      for (const auto& c : certs) {
        rows.push_back(sincpow::make_scan_row(c, consts));
        all_pass = all_pass && c.verdict == sincpow::Verdict::pass;
      }
      emit(opts, sincpow::render_scan(rows, opts.parsed()));
      return (is_certify && !all_pass) ? kExitFailed : kExitOk;
    }
    if (p0->parsed()) {
      if (!(p0_tol > 0.0)) throw UsageError("--tol must be > 0");
      const double root = sincpow::solve_p0(p0_tol);
      emit(out_p0, sincpow::render_p0(root, sincpow::crossover_function(root), out_p0.parsed()));
      return kExitOk;
    }
    if (bspline->parsed()) {
      if (bspline_n < 1) throw UsageError("--n must be >= 1");
      sincpow::ExactRational x;
      try {
        x = sincpow::ExactRational::parse(bspline_x);
      } catch (const std::exception& e) {
        throw UsageError(std::string("--x: ") + e.what());
      }
      const auto v = sincpow::bspline_value(sincpow::BSplineOrder(bspline_n), x);
      emit(out_bspline, sincpow::render_bspline(bspline_n, x, v, out_bspline.parsed()));
      return kExitOk;
    }
    if (check->parsed()) {
      return sincpow::run_self_check(std::cout) ? kExitOk : kExitFailed;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const sincpow::ToleranceUnreachable& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const sincpow::BracketFailure& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}
