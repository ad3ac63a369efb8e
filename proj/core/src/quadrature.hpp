#pragma once

#include <cmath>
#include <functional>

namespace dirac1d::detail {

struct QuadResult {
  double value = 0.0;
  double errorEstimate = 0.0;
  bool converged = true;
};

// Recursive adaptive Simpson with absolute tolerance and an interval floor;
// on a floor hit the local error estimate is accumulated and the result is
// flagged unconverged.
template <typename F>
QuadResult adaptive_simpson(F&& f, double a, double b, double tol,
                            double floor = 1e-14) {
  struct Impl {
    const F& f;
    double floor;
    QuadResult out;

    double simpson(double x0, double x2, double f0, double f1, double f2) {
      return (x2 - x0) / 6.0 * (f0 + 4.0 * f1 + f2);
    }

    double recurse(double x0, double x2, double f0, double f1, double f2,
                   double whole, double tol) {
      const double x1 = 0.5 * (x0 + x2);
      const double fl = f(0.5 * (x0 + x1));
      const double fr = f(0.5 * (x1 + x2));
      const double left = simpson(x0, x1, f0, fl, f1);
      const double right = simpson(x1, x2, f1, fr, f2);
      const double diff = left + right - whole;
      if (std::abs(diff) <= 15.0 * tol) {
        out.errorEstimate += std::abs(diff) / 15.0;
        return left + right + diff / 15.0;
      }
      if (x2 - x0 < floor) {
        out.errorEstimate += std::abs(diff);
        out.converged = false;
        return left + right;
      }
      return recurse(x0, x1, f0, fl, f1, left, 0.5 * tol) +
             recurse(x1, x2, f1, fr, f2, right, 0.5 * tol);
    }
  };

  Impl impl{f, floor, {}};
  const double fa = f(a), fm = f(0.5 * (a + b)), fb = f(b);
  const double whole = impl.simpson(a, b, fa, fm, fb);
  impl.out.value = impl.recurse(a, b, fa, fm, fb, whole, tol);
  return impl.out;
}

}  // namespace dirac1d::detail
