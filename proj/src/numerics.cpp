#include "cutgeom/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace cutgeom {

Maximum golden_section_maximize(const std::function<double(double)>& f, double a, double b, double xtol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  const double fa = f(a), fb = f(b);
  double lo = a, hi = b;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c), fd = f(d);
  for (int iter = 0; iter < 200 && hi - lo > xtol; ++iter) {
    if (fc >= fd) {
      hi = d;
      d = c, fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d, fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  Maximum best = fc >= fd ? Maximum{c, fc} : Maximum{d, fd};
  // Ties go to the left endpoint.
  if (fb > best.value) best = {b, fb};
  if (fa >= best.value) best = {a, fa};
  return best;
}

namespace {

double simpson_step(const std::function<double(double)>& f, double a, double fa, double m, double fm, double b,
                    double fb, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_step(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        std::span<const double> breakpoints) {
  if (!(b > a)) return 0.0;
  std::vector<double> cuts{a};
  for (double x : breakpoints) {
    if (x > a && x < b) cuts.push_back(x);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  const double piece_tol = tol / static_cast<double>(cuts.size() - 1);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i], hi = cuts[i + 1];
    if (!(hi > lo)) continue;
    const double m = 0.5 * (lo + hi);
    const double flo = f(lo), fm = f(m), fhi = f(hi);
    total += simpson_step(f, lo, flo, m, fm, hi, fhi, simpson(flo, fm, fhi, hi - lo), piece_tol, 24);
  }
  return total;
}

}  // namespace cutgeom
