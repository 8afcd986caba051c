#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "sincpow/bspline.hpp"

using namespace sincpow;

namespace {

ExactRational q(long num, long den = 1) { return ExactRational(mpz_class(num), mpz_class(den)); }

}  // namespace

TEST_CASE("ExactRational canonical form and serialization") {
  CHECK(q(6, -4).to_string() == "-3/2");
  CHECK(ExactRational(1).to_string() == "1/1");
  CHECK(ExactRational::parse("10/4") == q(5, 2));
  CHECK(ExactRational::parse("-0.25") == q(-1, 4));
  CHECK(ExactRational::parse(".5") == q(1, 2));
  CHECK(ExactRational::parse("7") == q(7));
  CHECK_THROWS_AS(ExactRational::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(ExactRational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(ExactRational::parse("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(q(1) / q(0), std::domain_error);
}

TEST_CASE("ExactRational::to_double rounds correctly") {
  // IEEE division of exactly representable operands is correctly rounded.
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> num(-(1L << 52), 1L << 52);
  std::uniform_int_distribution<long> den(1, 1L << 52);
  for (int i = 0; i < 20000; ++i) {
    const long a = num(rng);
    const long b = den(rng);
    CHECK(q(a, b).to_double() == static_cast<double>(a) / static_cast<double>(b));
  }
  CHECK(q(11, 20).to_double() == 0.55);
  CHECK(integral_exact(10).to_double() == 0.3066931017379824);
  CHECK(integral_exact(20).to_double() == 0.21768871958989375);
}

TEST_CASE("bspline_value examples") {
  CHECK(bspline_value(BSplineOrder(2), q(0)) == q(1));
  CHECK(bspline_value(BSplineOrder(4), q(0)) == q(2, 3));
  CHECK(bspline_value(BSplineOrder(4), q(1, 2)) == q(23, 48));
  CHECK(bspline_value(BSplineOrder(1), q(1, 2)) == q(1, 2));
  CHECK(bspline_value(BSplineOrder(1), q(-1, 2)) == q(1, 2));
  CHECK(bspline_value(BSplineOrder(1), q(3, 5)) == q(0));
  CHECK_THROWS_AS(BSplineOrder(0), std::domain_error);
}

TEST_CASE("bspline_recursive examples") {
  CHECK(bspline_recursive(BSplineOrder(2), q(1, 2)) == q(1, 2));
  CHECK(bspline_recursive(BSplineOrder(3), q(0)) == q(3, 4));
  CHECK(bspline_recursive(BSplineOrder(1), q(0)) == q(1));
}

TEST_CASE("recursion pieces have the expected shape") {
  const PiecewisePolynomial hat = bspline_pieces(BSplineOrder(2));
  CHECK(hat.left == q(-1));
  REQUIRE(hat.pieces.size() == 2);
  // 1 + x on [-1, 0], 1 - x on [0, 1].
  CHECK(hat.pieces[0] == RationalPolynomial({q(1), q(1)}));
  CHECK(hat.pieces[1] == RationalPolynomial({q(1), q(-1)}));
  const PiecewisePolynomial cubic = bspline_pieces(BSplineOrder(4));
  CHECK(cubic.pieces.size() == 4);
  for (const auto& piece : cubic.pieces) CHECK(piece.coefficients().size() == 4);
}

TEST_CASE("closed form equals the convolution recursion exactly") {
  for (int n = 1; n <= 8; ++n) {
    for (int j = -6 * n; j <= 6 * n; ++j) {
      const ExactRational x = q(j, 12);
      CHECK(bspline_value(BSplineOrder(n), x) == bspline_recursive(BSplineOrder(n), x));
    }
    CHECK(bspline_value(BSplineOrder(n), q(2, 7)) == bspline_recursive(BSplineOrder(n), q(2, 7)));
  }
}

TEST_CASE("symmetry, support and partition of unity") {
  for (int n = 1; n <= 8; ++n) {
    const BSplineOrder order(n);
    const ExactRational half_width = q(n, 2);
    for (int j = -5 * n; j <= 5 * n; ++j) {
      const ExactRational x = q(j, 10);
      const ExactRational v = bspline_value(order, x);
      CHECK(v == bspline_value(order, -x));
      const ExactRational ax = x.sign() < 0 ? -x : x;
      if (ax > half_width) CHECK(v.sign() == 0);
      if (ax < half_width) CHECK(v.sign() > 0);
    }
    for (int j = 0; j < 10; ++j) {
      const ExactRational x = q(j, 10);
      ExactRational sum;
      for (int k = -n; k <= n; ++k) sum += bspline_value(order, x - ExactRational(k));
      CHECK(sum == q(1));
    }
  }
}

TEST_CASE("integral_exact examples") {
  CHECK(integral_exact(1) == q(1));
  CHECK(integral_exact(2) == q(2, 3));
  CHECK(integral_exact(3) == q(11, 20));
  CHECK(integral_exact(4) == q(151, 315));
  CHECK_THROWS_AS(integral_exact(0), std::domain_error);
}

TEST_CASE("Plancherel identity: I(n) is the centre value of beta^{2n}") {
  for (int n = 1; n <= 15; ++n) {
    CHECK(integral_exact(n) == bspline_value(BSplineOrder(2 * n), q(0)));
  }
  // The recursion is an independent route to the same numbers.
  for (int n = 1; n <= 8; ++n) {
    CHECK(integral_exact(n) == bspline_recursive(BSplineOrder(2 * n), q(0)));
  }
}

TEST_CASE("gaussian_center_approx") {
  CHECK(gaussian_center_approx(BSplineOrder(4)) == doctest::Approx(0.690988298942671).epsilon(1e-13));
  CHECK(gaussian_center_approx(BSplineOrder(2)) == doctest::Approx(0.977205023805840).epsilon(1e-13));
  double prev = 1.0;
  for (int n = 5; n <= 50; ++n) {
    const double rel = std::fabs(bspline_value(BSplineOrder(2 * n), q(0)).to_double() /
                                     gaussian_center_approx(BSplineOrder(2 * n)) -
                                 1.0);
    CHECK(rel < prev);
    prev = rel;
  }
  CHECK(prev < 3e-3);
}
