#include "sincpow/bspline.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace sincpow {

namespace {

mpz_class factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

ExactRational power(const ExactRational& base, unsigned long e) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), e);
  return ExactRational(num, den);
}

const ExactRational kHalf(mpz_class(1), mpz_class(2));

}  // namespace

RationalPolynomial::RationalPolynomial(std::vector<ExactRational> coeffs) : c_(std::move(coeffs)) {
  trim();
}

void RationalPolynomial::trim() {
  while (!c_.empty() && c_.back().sign() == 0) c_.pop_back();
}

ExactRational RationalPolynomial::operator()(const ExactRational& x) const {
  ExactRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial RationalPolynomial::antiderivative() const {
  std::vector<ExactRational> out(c_.size() + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    out[i + 1] = c_[i] / ExactRational(static_cast<long>(i + 1));
  }
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::shifted(const ExactRational& offset) const {
  // Horner in the polynomial ring: acc <- acc * (x + offset) + c_i.
  std::vector<ExactRational> acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    std::vector<ExactRational> next(acc.size() + 1);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] += acc[i];
      next[i] += acc[i] * offset;
    }
    next[0] += *it;
    acc = std::move(next);
  }
  return RationalPolynomial(std::move(acc));
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<ExactRational> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
  return RationalPolynomial(std::move(out));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<ExactRational> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
  return RationalPolynomial(std::move(out));
}

PiecewisePolynomial bspline_pieces(BSplineOrder n) {
  PiecewisePolynomial current{-kHalf, {RationalPolynomial({ExactRational(1)})}};
  for (int order = 2; order <= n.value(); ++order) {
    const std::size_t m = current.pieces.size();

    // Continuous antiderivative F of the previous spline, F(-inf) = 0.
    std::vector<RationalPolynomial> running(m);
    ExactRational accumulated;
    for (std::size_t j = 0; j < m; ++j) {
      const RationalPolynomial a = current.pieces[j].antiderivative();
      const ExactRational lo = current.left + ExactRational(static_cast<long>(j));
      const ExactRational hi = lo + ExactRational(1);
      running[j] = a + RationalPolynomial({accumulated - a(lo)});
      accumulated = running[j](hi);
    }
    const RationalPolynomial total({accumulated});

    // beta^order(x) = F(x + 1/2) - F(x - 1/2), piecewise on the new knots.
    PiecewisePolynomial next{current.left - kHalf, {}};
    next.pieces.reserve(m + 1);
    for (std::size_t k = 0; k <= m; ++k) {
      const RationalPolynomial upper = (k < m ? running[k] : total).shifted(kHalf);
      const RationalPolynomial lower =
          k == 0 ? RationalPolynomial() : running[k - 1].shifted(-kHalf);
      next.pieces.push_back(upper - lower);
    }
    current = std::move(next);
  }
  return current;
}

ExactRational bspline_recursive(BSplineOrder n, const ExactRational& x) {
  const ExactRational half_width(mpz_class(n.value()), mpz_class(2));
  const ExactRational ax = x.sign() < 0 ? -x : x;
  if (ax > half_width) return {};
  if (n.value() == 1 && ax == half_width) return kHalf;

  const PiecewisePolynomial pp = bspline_pieces(n);
  const ExactRational offset = x - pp.left;
  mpz_class k;
  mpz_fdiv_q(k.get_mpz_t(), offset.numerator().get_mpz_t(), offset.denominator().get_mpz_t());
  // x = n/2 falls past the last piece; every spline of order >= 2 vanishes there.
  if (k >= static_cast<long>(pp.pieces.size())) return {};
  return pp.pieces[k.get_ui()](x);
}

ExactRational bspline_value(BSplineOrder n, const ExactRational& x) {
  const int order = n.value();
  const ExactRational half_width(mpz_class(order), mpz_class(2));
  const ExactRational ax = x.sign() < 0 ? -x : x;
  if (ax > half_width) return {};
  if (order == 1) return ax == half_width ? kHalf : ExactRational(1);

  const auto degree = static_cast<unsigned long>(order - 1);
  ExactRational sum;
  for (int k = 0; k <= order; ++k) {
    const ExactRational shifted = x + half_width - ExactRational(k);
    if (shifted.sign() <= 0) continue;
    ExactRational term =
        ExactRational(binomial(static_cast<unsigned long>(order), static_cast<unsigned long>(k)),
                      mpz_class(1)) *
        power(shifted, degree);
    if (k % 2 == 1) term = -term;
    sum += term;
  }
  return sum / ExactRational(factorial(degree), mpz_class(1));
}

ExactRational integral_exact(int n) {
  if (n < 1) throw std::domain_error("integral_exact: n must be >= 1");
  const auto two_n = static_cast<unsigned long>(2 * n);
  mpz_class sum;
  for (int k = 0; k < n; ++k) {
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(n - k), two_n - 1);
    const mpz_class term = binomial(two_n, static_cast<unsigned long>(k)) * pw;
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return ExactRational(sum, factorial(two_n - 1));
}

double gaussian_center_approx(BSplineOrder order) {
  return std::sqrt(6.0 / (std::numbers::pi * order.value()));
}

}  // namespace sincpow
