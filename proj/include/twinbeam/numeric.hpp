#ifndef TWINBEAM_NUMERIC_HPP
#define TWINBEAM_NUMERIC_HPP

#include <cmath>
#include <functional>
#include <utility>

#include "twinbeam/errors.hpp"

namespace twinbeam {

// Golden-section minimization of a unimodal function on [a, b].
// Returns the abscissa of the minimum to within x_tol.
inline double golden_section_minimize(const std::function<double(double)>& f,
                                      double a, double b, double x_tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  int iterations = 0;
  while (b - a > x_tol) {
    if (++iterations > 200) {
      throw ConvergenceError("golden_section_minimize: iteration cap reached");
    }
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return (a + b) / 2.0;
}

// Bisection on a bracketing interval [a, b] with f(a) and f(b) of opposite
// sign. Returns the root to within x_tol.
inline double bisect_root(const std::function<double(double)>& f,
                          double a, double b, double x_tol) {
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0) == (fb > 0)) {
    throw std::invalid_argument("bisect_root: interval does not bracket a root");
  }
  int iterations = 0;
  while (b - a > x_tol) {
    if (++iterations > 200) {
      throw ConvergenceError("bisect_root: iteration cap reached");
    }
    const double mid = 0.5 * (a + b);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0) == (fa > 0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace twinbeam

#endif
