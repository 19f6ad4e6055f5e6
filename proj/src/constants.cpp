#include "cutgeom/constants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "cutgeom/numerics.hpp"

namespace cutgeom {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kScanPoints = 4097;

void require_range(double alpha, int n) {
  if (n < 2) throw std::domain_error("dimension n must be >= 2, got " + std::to_string(n));
  if (!(alpha > -1.0 && alpha < n)) {
    throw std::domain_error("alpha must lie in (-1, n), got " + std::to_string(alpha));
  }
}

double s_from_z(double z) {
  if (std::isnan(z)) throw std::domain_error("z is NaN");
  if (z > -1.0 && z < 0.0) throw std::domain_error("z must lie in (-inf, -1] U [0, inf)");
  if (std::isinf(z)) return 0.5;
  return (z + 1.0) / (2.0 * z + 1.0);
}

struct PowerSums {
  double plain;     // sum_k a^(n-1-k) b^k
  double weighted;  // sum_k (k+1) a^(n-1-k) b^k
};

PowerSums power_sums(double a, double b, int n) {
  PowerSums out{0.0, 0.0};
  for (int k = 0; k < n; ++k) {
    const double term = std::pow(a, n - 1 - k) * std::pow(b, k);
    out.plain += term;
    out.weighted += (k + 1) * term;
  }
  return out;
}

C2Argmax make_argmax(double s, double value) {
  C2Argmax out{s, 0.0, 0.0, value};
  out.lambda = s >= 1.0 ? kInf : s / (1.0 - s);
  out.z = s == 0.5 ? kInf : (1.0 - s) / (2.0 * s - 1.0);
  return out;
}

C2Result c2_search(double alpha, int n, double tol) {
  const auto f = [alpha, n](double s) { return phi_s(s, alpha, n); };
  std::vector<double> grid(kScanPoints);
  for (int i = 0; i < kScanPoints; ++i) grid[i] = f(static_cast<double>(i) / (kScanPoints - 1));
  const double scan_best = *std::max_element(grid.begin(), grid.end());
  const double h = 1.0 / (kScanPoints - 1);
  const double xtol = std::min(tol, 1e-12);

  std::vector<C2Argmax> found;
  for (int i = 0; i < kScanPoints; ++i) {
    const bool left_ok = i == 0 || grid[i] >= grid[i - 1];
    const bool right_ok = i == kScanPoints - 1 || grid[i] >= grid[i + 1];
    if (!left_ok || !right_ok || grid[i] < scan_best - 1e-6) continue;
    const double lo = std::max(0.0, (i - 1) * h), hi = std::min(1.0, (i + 1) * h);
    const auto m = golden_section_maximize(f, lo, hi, xtol);
    found.push_back(make_argmax(m.x, m.value));
  }
  std::sort(found.begin(), found.end(), [](const C2Argmax& a, const C2Argmax& b) { return a.value > b.value; });
  const double best = found.front().value;
  std::erase_if(found, [best](const C2Argmax& a) { return a.value < best - 1e-9; });
  // Neighbouring grid maxima on a flat top refine to the same point.
  std::vector<C2Argmax> unique;
  for (const auto& a : found) {
    const bool dup = std::any_of(unique.begin(), unique.end(),
                                 [&](const C2Argmax& u) { return std::abs(u.s - a.s) < 4 * h; });
    if (!dup) unique.push_back(a);
  }
  C2Result r;
  r.value = unique.front().value;
  r.argmax_z = unique.front().z;
  r.argmax_lambda = unique.front().lambda;
  r.method = C2Method::kNumericSup;
  r.near_optimal = std::move(unique);
  return r;
}

}  // namespace

const char* to_string(C2Method m) {
  switch (m) {
    case C2Method::kClosedFormNegAlpha:
      return "closed_form_neg_alpha";
    case C2Method::kClosedFormN2:
      return "closed_form_n2";
    case C2Method::kNumericSup:
      return "numeric_sup";
  }
  return "unknown";
}

double grunbaum_bound(int n) {
  if (n < 2) throw std::domain_error("dimension n must be >= 2");
  return std::pow(static_cast<double>(n) / (n + 1), n);
}

double makai_martini_bound(int n) {
  if (n < 2) throw std::domain_error("dimension n must be >= 2");
  return std::pow(static_cast<double>(n) / (n + 1), n - 1);
}

double c1(double alpha, int n) {
  require_range(alpha, n);
  if (alpha <= 0.0) return std::pow((n - alpha) / (n + 1), n);
  if (alpha < 1.0 / n) {
    return grunbaum_bound(n) * std::pow(alpha + 1.0, n - 1) * (1.0 - alpha * n);
  }
  return 0.0;
}

double truncated_cone_centroid_s(double s, int n) {
  const auto sums = power_sums(1.0 - s, s, n);
  return sums.weighted / ((n + 1) * sums.plain);
}

double phi_s(double s, double alpha, int n) {
  require_range(alpha, n);
  if (!(s >= 0.0 && s <= 1.0)) throw std::domain_error("s must lie in [0, 1]");
  const double a = 1.0 - s, b = s;
  const auto sums = power_sums(a, b, n);
  const double g = (alpha + 1.0) * sums.weighted / ((n + 1) * sums.plain);
  if (g >= 1.0) return 0.0;
  if (g <= 0.0) return 1.0;
  const double r_cut = a * (1.0 - g) + b * g;
  return std::clamp((1.0 - g) * power_sums(r_cut, b, n).plain / sums.plain, 0.0, 1.0);
}

double g_sub_l(double z, double alpha, int n) {
  require_range(alpha, n);
  return (alpha + 1.0) * truncated_cone_centroid_s(s_from_z(z), n);
}

double phi(double z, double alpha, int n) { return phi_s(s_from_z(z), alpha, n); }

C2Result c2(double alpha, int n, double tol) {
  require_range(alpha, n);
  if (!(tol > 0.0)) throw std::domain_error("tolerance must be positive");
  if (alpha <= 0.0) {
    // Attained by the cone with its apex at the bottom: s = 1, z = 0.
    const double v = 1.0 - std::pow(n * (alpha + 1.0) / (n + 1), n);
    return {v, 0.0, kInf, C2Method::kClosedFormNegAlpha, {}};
  }
  auto r = c2_numeric(alpha, n, tol);
  if (n == 2) {
    const double closed = c2_closed_n2(alpha);
    if (std::abs(closed - r.value) > 1e-6) {
      throw std::logic_error("numeric supremum disagrees with the planar closed form");
    }
    r.value = closed;
    r.method = C2Method::kClosedFormN2;
  }
  return r;
}

C2Result c2_numeric(double alpha, int n, double tol) {
  require_range(alpha, n);
  if (!(alpha > 0.0)) throw std::domain_error("the numeric supremum is defined for alpha > 0");
  if (!(tol > 0.0)) throw std::domain_error("tolerance must be positive");
  return c2_search(alpha, n, tol);
}

double c2_closed_n2(double alpha) {
  if (!(alpha > 0.0 && alpha < 2.0)) throw std::domain_error("c2_closed_n2 needs 0 < alpha < 2");
  if (alpha < 1.0) return (5.0 - 3.0 * alpha) / (9.0 * (alpha + 1.0));
  return (2.0 - alpha) * (2.0 - alpha) / 9.0;
}

double beta0(double alpha, int n) {
  if (n < 2 || !(alpha > 0.0 && alpha < 1.0 / n)) throw std::domain_error("beta0 needs 0 < alpha < 1/n");
  return (n + 1) * alpha / (alpha + 1.0);
}

double psi_branch_point(double alpha, int n) { return (alpha + 1.0) / (2.0 - (n - 1) * alpha); }

double psi(double beta, double alpha, int n) {
  if (n < 2 || !(alpha > 0.0 && alpha < 1.0 / n)) throw std::domain_error("psi needs 0 < alpha < 1/n");
  if (!(beta >= 0.0 && beta < 1.0)) throw std::domain_error("psi needs 0 <= beta < 1");
  const double g = (alpha + 1.0) * (beta * (n - 1) + 1.0) / (n + 1);
  if (beta <= psi_branch_point(alpha, n)) return std::pow(1.0 - g, n) / std::pow(1.0 - beta, n - 1);
  return 1.0 - std::pow(g, n) / std::pow(beta, n - 1);
}

double d_const(double alpha, int n) {
  require_range(alpha, n);
  if (alpha <= 0.0) return std::pow(n * (alpha + 1.0) / (n + 1), n - 1);
  if (alpha <= 1.0 / n) return std::pow((n - alpha) / (n + 1), n - 1);
  return 0.0;
}

BoundsTriple bounds(double alpha, int n, double tol) { return {c1(alpha, n), c2(alpha, n, tol), d_const(alpha, n)}; }

}  // namespace cutgeom
