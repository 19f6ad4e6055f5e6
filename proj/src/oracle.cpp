#include "cutgeom/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "cutgeom/detail/hull.hpp"
#include "cutgeom/measure.hpp"

namespace cutgeom {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

struct Sampler {
  std::vector<double> lo, hi;
  std::function<bool(const std::vector<double>&)> inside;
  std::function<double(const std::vector<double>&)> height;
};

Sampler make_sampler(const Body& body, const Direction& direction) {
  const int n = dimension(body);
  if (direction.dim() != n) throw std::invalid_argument("direction dimension does not match body");
  Sampler s;
  s.lo.assign(static_cast<std::size_t>(n), 0.0);
  s.hi.assign(static_cast<std::size_t>(n), 0.0);

  if (const auto* p = std::get_if<Polytope>(&body)) {
    const auto& hull = p->hull();
    for (int k = 0; k < n; ++k) {
      s.lo[k] = s.hi[k] = p->vertices()[hull.vertex_ids[0]][k];
      for (int id : hull.vertex_ids) {
        s.lo[k] = std::min(s.lo[k], p->vertices()[id][k]);
        s.hi[k] = std::max(s.hi[k], p->vertices()[id][k]);
      }
    }
    const double tol = 1e-12 * hull.scale;
    s.inside = [&hull, tol](const std::vector<double>& x) { return hull.contains(x, tol); };
    s.height = [d = direction.coords()](const std::vector<double>& x) {
      double h = 0.0;
      for (std::size_t k = 0; k < d.size(); ++k) h += d[k] * x[k];
      return h;
    };
    return s;
  }

  if (std::abs(std::abs(direction[0]) - 1.0) > 1e-12) {
    throw std::invalid_argument("profile bodies only support directions along their axis");
  }
  const double sign = direction[0] > 0.0 ? 1.0 : -1.0;
  s.height = [sign](const std::vector<double>& x) { return sign * x[0]; };
  double rmax = 0.0;
  if (const auto* a = std::get_if<AnalyticProfile>(&body)) {
    for (const auto& k : a->knots()) rmax = std::max(rmax, k.r);
    s.lo[0] = a->t_min();
    s.hi[0] = a->t_max();
    s.inside = [a](const std::vector<double>& x) {
      const double r = a->radius(x[0]);
      double y2 = 0.0;
      for (std::size_t k = 1; k < x.size(); ++k) y2 += x[k] * x[k];
      return y2 <= r * r;
    };
  } else {
    const auto& q = std::get<NumericProfile>(body);
    const auto peak = max_section(body, Direction::axis(n));
    rmax = std::pow(peak.area / unit_ball_volume(n - 1), 1.0 / (n - 1));
    s.lo[0] = q.t_min();
    s.hi[0] = q.t_max();
    s.inside = [&q](const std::vector<double>& x) {
      const double r = q.radius(x[0]);
      double y2 = 0.0;
      for (std::size_t k = 1; k < x.size(); ++k) y2 += x[k] * x[k];
      return y2 <= r * r;
    };
  }
  for (int k = 1; k < n; ++k) s.lo[k] = -rmax, s.hi[k] = rmax;
  return s;
}

}  // namespace

McMeasure mc_measure(const Body& body, const Direction& direction, double t, long samples, std::uint64_t seed) {
  if (samples < kMinSamples) throw std::invalid_argument("Monte Carlo needs at least 1000 samples");
  const auto s = make_sampler(body, direction);
  const std::size_t n = s.lo.size();
  double box = 1.0;
  for (std::size_t k = 0; k < n; ++k) box *= s.hi[k] - s.lo[k];
  if (!(box > 0.0)) throw std::invalid_argument("degenerate bounding box");

  Rng rng(seed);
  std::vector<double> x(n);
  long hits = 0, cut_hits = 0;
  // Welford running mean/variance of the accepted heights.
  double mean = 0.0, m2 = 0.0;
  for (long i = 0; i < samples; ++i) {
    for (std::size_t k = 0; k < n; ++k) x[k] = rng.uniform(s.lo[k], s.hi[k]);
    if (!s.inside(x)) continue;
    ++hits;
    const double h = s.height(x);
    if (h >= t) ++cut_hits;
    const double delta = h - mean;
    mean += delta / static_cast<double>(hits);
    m2 += delta * (h - mean);
  }
  const double N = static_cast<double>(samples);
  const double p = hits / N, q = cut_hits / N;
  McMeasure out;
  out.accepted = hits;
  out.accepted_cut = cut_hits;
  out.volume = {box * p, box * std::sqrt(p * (1.0 - p) / N), samples, seed};
  out.cut_volume = {box * q, box * std::sqrt(q * (1.0 - q) / N), samples, seed};
  if (hits > 1) {
    out.centroid = {mean, std::sqrt(m2 / (hits - 1) / hits), samples, seed};
    const double r = static_cast<double>(cut_hits) / hits;
    out.cut_ratio = {r, std::sqrt(r * (1.0 - r) / hits), samples, seed};
  } else {
    out.centroid = {mean, std::numeric_limits<double>::infinity(), samples, seed};
    out.cut_ratio = {0.0, std::numeric_limits<double>::infinity(), samples, seed};
  }
  return out;
}

Interval wilson_interval(long successes, long trials, double z) {
  if (trials <= 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials), p = successes / n, z2 = z * z;
  const double mid = (p + z2 / (2 * n)) / (1 + z2 / n);
  const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / (1 + z2 / n);
  return {std::max(0.0, mid - half), std::min(1.0, mid + half)};
}

McEstimate mc_volume(const Body& body, long samples, std::uint64_t seed) {
  return mc_measure(body, Direction::axis(dimension(body)), 0.0, samples, seed).volume;
}

McEstimate mc_cut_volume(const Body& body, const Direction& direction, double t, long samples,
                         std::uint64_t seed) {
  return mc_measure(body, direction, t, samples, seed).cut_volume;
}

McEstimate mc_centroid_coordinate(const Body& body, const Direction& direction, long samples,
                                  std::uint64_t seed) {
  return mc_measure(body, direction, 0.0, samples, seed).centroid;
}

Polytope random_polytope(int n, int num_points, std::uint64_t seed) {
  if (n != 2 && n != 3) throw std::invalid_argument("random_polytope supports n in {2, 3}");
  if (num_points < n + 1) throw std::invalid_argument("random_polytope needs at least n+1 points");
  Rng rng(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Point> pts;
    while (static_cast<int>(pts.size()) < num_points) {
      Point x(static_cast<std::size_t>(n));
      double r2 = 0.0;
      for (double& c : x) c = rng.uniform(-1.0, 1.0), r2 += c * c;
      if (r2 <= 1.0) pts.push_back(std::move(x));
    }
    const auto hull = detail::build_hull(n, pts);
    if (!hull) continue;
    std::vector<Point> verts;
    for (int id : hull->vertex_ids) verts.push_back(pts[id]);
    Polytope poly(n, std::move(verts));
    if (poly.has_hull()) return poly;
  }
  throw std::runtime_error("random_polytope: no full-dimensional sample in 100 attempts");
}

AnalyticProfile random_profile(int n, int num_knots, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_profile needs n >= 2");
  if (num_knots < 2) throw std::invalid_argument("random_profile needs at least two knots");
  Rng rng(seed);
  const auto k = static_cast<std::size_t>(num_knots);

  std::vector<double> t(k, 0.0);
  for (std::size_t i = 1; i < k; ++i) t[i] = t[i - 1] + rng.uniform(0.1, 1.1);
  for (double& x : t) x /= t.back();

  const auto end_radius = [&rng] { return rng.uniform() < 1.0 / 3.0 ? 0.0 : rng.uniform(0.1, 1.0); };
  double r_first = end_radius();
  const double r_last = end_radius();
  if (r_first == 0.0 && r_last == 0.0 && k == 2) r_first = rng.uniform(0.1, 1.0);

  std::vector<double> slopes(k - 1);
  for (double& s : slopes) s = rng.uniform(-3.0, 3.0);
  std::sort(slopes.begin(), slopes.end(), std::greater<>());
  std::vector<double> r(k, 0.0);
  for (std::size_t i = 1; i < k; ++i) r[i] = r[i - 1] + slopes[i - 1] * (t[i] - t[i - 1]);
  // Adding an affine function keeps the slopes strictly decreasing.
  const double tilt = r_last - r_first - r.back();
  for (std::size_t i = 0; i < k; ++i) r[i] += r_first + tilt * t[i];
  r.front() = r_first;
  r.back() = r_last;

  const double height = rng.uniform(0.5, 2.0);
  const double scale = rng.uniform(0.5, 2.0);
  const double offset = rng.uniform(-1.0, 1.0);
  std::vector<Knot> knots(k);
  for (std::size_t i = 0; i < k; ++i) knots[i] = {offset + height * t[i], scale * std::max(r[i], 0.0)};
  return AnalyticProfile(n, std::move(knots));
}

}  // namespace cutgeom
