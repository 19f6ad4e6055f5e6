#include "cutgeom/extremal.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cutgeom/constants.hpp"
#include "cutgeom/measure.hpp"

namespace cutgeom {

namespace {

void require_dim(int n) {
  if (n < 2) throw std::domain_error("dimension n must be >= 2, got " + std::to_string(n));
}

}  // namespace

AnalyticProfile centered(const AnalyticProfile& p) {
  const double g = centroid_coordinate(p, Direction::axis(p.dim()));
  auto knots = p.knots();
  for (auto& k : knots) k.t -= g;
  return AnalyticProfile(p.dim(), std::move(knots));
}

AnalyticProfile grunbaum_cone(int n) {
  require_dim(n);
  return AnalyticProfile(n, {{-1.0 / (n + 1), 1.0}, {static_cast<double>(n) / (n + 1), 0.0}});
}

AnalyticProfile reflected_grunbaum_cone(int n) {
  require_dim(n);
  return AnalyticProfile(n, {{-static_cast<double>(n) / (n + 1), 0.0}, {1.0 / (n + 1), 1.0}});
}

AnalyticProfile truncated_cone(double lambda, int n) {
  require_dim(n);
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw std::domain_error("truncated_cone needs a finite lambda >= 0");
  }
  return AnalyticProfile(n, {{0.0, 1.0}, {1.0, lambda}});
}

AnalyticProfile truncated_cone_s(double s, int n) {
  require_dim(n);
  if (!(s >= 0.0 && s <= 1.0)) throw std::domain_error("truncated_cone_s needs s in [0, 1]");
  return AnalyticProfile(n, {{0.0, 1.0 - s}, {1.0, s}});
}

AnalyticProfile double_cone(double beta, int n) {
  require_dim(n);
  if (!(beta >= 0.0 && beta < 1.0)) throw std::domain_error("double_cone needs 0 <= beta < 1");
  // Base section measure n makes the two cones' volumes beta and 1 - beta.
  const double r = std::pow(n / unit_ball_volume(n - 1), 1.0 / (n - 1));
  if (beta == 0.0) return AnalyticProfile(n, {{0.0, r}, {1.0, 0.0}});
  return AnalyticProfile(n, {{0.0, 0.0}, {beta, r}, {1.0, 0.0}});
}

AnalyticProfile lower_extremizer(double alpha, int n) {
  require_dim(n);
  if (!(alpha > -1.0 && alpha < 1.0 / n)) {
    throw std::domain_error("lower_extremizer needs -1 < alpha < 1/n (the bound is 0 beyond)");
  }
  if (alpha <= 0.0) return grunbaum_cone(n);
  return centered(double_cone(beta0(alpha, n), n));
}

AnalyticProfile upper_extremizer(double alpha, int n, double tol) {
  const auto r = c2(alpha, n, tol);
  if (alpha <= 0.0) return reflected_grunbaum_cone(n);
  return centered(truncated_cone_s(r.near_optimal.front().s, n));
}

AnalyticProfile theorem5_equality_cone(double alpha, int n) {
  require_dim(n);
  if (!(alpha > -1.0 && alpha <= 1.0 / n)) {
    throw std::domain_error("theorem5_equality_cone needs -1 < alpha <= 1/n");
  }
  return alpha <= 0.0 ? reflected_grunbaum_cone(n) : grunbaum_cone(n);
}

}  // namespace cutgeom
