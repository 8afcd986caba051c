#pragma once

#include <stdexcept>
#include <vector>

#include "sincpow/rational.hpp"

namespace sincpow {

/// Order of a centered cardinal B-spline: the n-fold convolution of the
/// indicator of [-1/2, 1/2]. Degree n - 1, support [-n/2, n/2].
class BSplineOrder {
 public:
  explicit BSplineOrder(int n) : n_(n) {
    if (n < 1) throw std::domain_error("B-spline order must be >= 1");
  }
  int value() const noexcept { return n_; }

 private:
  int n_;
};

/// Polynomial with exact rational coefficients, coefficient i multiplies x^i.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<ExactRational> coeffs);

  const std::vector<ExactRational>& coefficients() const noexcept { return c_; }
  ExactRational operator()(const ExactRational& x) const;

  /// Antiderivative with zero constant term.
  RationalPolynomial antiderivative() const;
  /// x -> P(x + offset).
  RationalPolynomial shifted(const ExactRational& offset) const;

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) = default;

 private:
  void trim();
  std::vector<ExactRational> c_;
};

/// Piecewise polynomial on consecutive unit intervals [left + k, left + k + 1].
struct PiecewisePolynomial {
  ExactRational left;
  std::vector<RationalPolynomial> pieces;
};

/// Exact piecewise representation of the order-n B-spline, built by the
/// centered convolution recursion beta^n(x) = int_{-1/2}^{1/2} beta^{n-1}(x - y) dy.
PiecewisePolynomial bspline_pieces(BSplineOrder n);

/// beta^n(x) from the truncated-power closed form.
ExactRational bspline_value(BSplineOrder n, const ExactRational& x);

/// beta^n(x) from the convolution recursion. Agrees exactly with bspline_value.
ExactRational bspline_recursive(BSplineOrder n, const ExactRational& x);

/// I(n) = (1/pi) int (sin^2 t / t^2)^n dt = beta^{2n}(0), exactly.
ExactRational integral_exact(int n);

/// Gaussian prediction sqrt(6 / (pi N)) for beta^N(0).
double gaussian_center_approx(BSplineOrder order);

}  // namespace sincpow
