#include "sincpow/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace sincpow {

ExactRational::ExactRational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
  if (den == 0) throw std::domain_error("ExactRational: zero denominator");
  q_.canonicalize();
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
  if (o.q_ == 0) throw std::domain_error("ExactRational: division by zero");
  q_ /= o.q_;
  return *this;
}

ExactRational ExactRational::parse(std::string_view text) {
  const std::string s(text);
  auto as_integer = [&](const std::string& part) {
    mpz_class z;
    if (part.empty() || z.set_str(part, 10) != 0) {
      throw std::invalid_argument("not a rational number: '" + s + "'");
    }
    return z;
  };
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    return ExactRational(as_integer(s.substr(0, slash)), as_integer(s.substr(slash + 1)));
  }
  if (const auto dot = s.find('.'); dot != std::string::npos) {
    const std::string frac = s.substr(dot + 1);
    std::string whole = s.substr(0, dot);
    const bool negative = !whole.empty() && whole.front() == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("not a rational number: '" + s + "'");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class digits = as_integer(frac);
    if (negative) digits = -digits;
    return ExactRational(as_integer(whole) * scale + digits, scale);
  }
  return ExactRational(as_integer(s), mpz_class(1));
}

double ExactRational::to_double() const {
  // mpq_get_d truncates. Form a quotient with at least 64 significant bits,
  // then round to nearest-even at 53 bits with a sticky remainder bit.
  const mpz_class& num = q_.get_num();
  if (num == 0) return 0.0;
  mpz_class n = abs(num);
  mpz_class d = q_.get_den();
  const long shift = 65 - static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) +
                     static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
  if (shift >= 0) {
    n <<= static_cast<mp_bitcnt_t>(shift);
  } else {
    d <<= static_cast<mp_bitcnt_t>(-shift);
  }
  mpz_class quotient, remainder;
  mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (remainder != 0) quotient |= 1;

  const auto drop = static_cast<mp_bitcnt_t>(mpz_sizeinbase(quotient.get_mpz_t(), 2) - 53);
  mpz_class top = quotient >> drop;
  mpz_class low = quotient - (top << drop);
  const mpz_class half = mpz_class(1) << (drop - 1);
  if (low > half || (low == half && mpz_odd_p(top.get_mpz_t()))) ++top;

  const double mag = std::ldexp(top.get_d(), static_cast<int>(drop) - static_cast<int>(shift));
  return sgn(num) < 0 ? -mag : mag;
}

std::string ExactRational::to_string() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

}  // namespace sincpow
