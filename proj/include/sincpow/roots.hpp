#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace sincpow {

class BracketFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Illinois-modified false position, interleaved with bisection so the bracket
// at least halves every two steps. Returns x with |x - root| <= tol.
template <class F>
double bracketed_root(F&& f, double lo, double hi, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("root tolerance must be > 0");
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) {
    throw BracketFailure("bracket failure: no sign change on [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
  }
  int side = 0;  // end replaced on the previous step: -1 lo, +1 hi
  for (int iter = 0; iter < 400; ++iter) {
    if (hi - lo <= 2.0 * tol) break;
    double x = 0.5 * (lo + hi);
    if (iter % 2 == 0) {
      const double secant = hi - fhi * (hi - lo) / (fhi - flo);
      if (secant > lo && secant < hi) x = secant;
    }
    const double fx = f(x);
    if (fx == 0.0) return x;
    if ((fx < 0.0) == (flo < 0.0)) {
      lo = x;
      flo = fx;
      if (side == -1) fhi *= 0.5;
      side = -1;
    } else {
      hi = x;
      fhi = fx;
      if (side == 1) flo *= 0.5;
      side = 1;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace sincpow
