#pragma once

#include <functional>
#include <span>

namespace cutgeom {

struct Maximum {
  double x;
  double value;
};

/// Golden-section search for the maximum of a unimodal function on [a, b],
/// stopped once the bracket is narrower than `xtol`. The endpoints are
/// compared too, so monotone functions return the better endpoint.
Maximum golden_section_maximize(const std::function<double(double)>& f, double a, double b,
                                double xtol = 1e-12);

/// Adaptive Simpson quadrature with absolute tolerance `tol`. The interval is
/// first split at every breakpoint inside (a, b).
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        std::span<const double> breakpoints = {});

/// Three-point Simpson rule; exact for cubics.
inline double simpson(double fa, double fm, double fb, double h) { return h * (fa + 4.0 * fm + fb) / 6.0; }

}  // namespace cutgeom
