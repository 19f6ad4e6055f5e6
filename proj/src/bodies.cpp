#include "cutgeom/bodies.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "cutgeom/detail/hull.hpp"

namespace cutgeom {

double unit_ball_volume(int k) {
  if (k < 0) throw std::invalid_argument("unit_ball_volume: negative dimension");
  // omega_k = omega_{k-2} * 2 pi / k, seeded with omega_0 = 1 and omega_1 = 2.
  double w = (k % 2 == 0) ? 1.0 : 2.0;
  for (int j = (k % 2 == 0) ? 2 : 3; j <= k; j += 2) w *= 2.0 * std::numbers::pi / j;
  return w;
}

// ---------------------------------------------------------------- Direction

Direction::Direction(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) throw std::invalid_argument("direction needs dimension >= 2");
  double s = 0.0;
  for (double x : coords_) s += x * x;
  if (!(std::abs(std::sqrt(s) - 1.0) <= 1e-12)) {
    throw std::invalid_argument("direction is not a unit vector");
  }
}

Direction Direction::normalized(std::vector<double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  const double len = std::sqrt(s);
  if (!(len > 0.0) || !std::isfinite(len)) {
    throw std::invalid_argument("direction must be a nonzero finite vector");
  }
  for (double& x : v) x /= len;
  return Direction(std::move(v));
}

Direction Direction::axis(int n, int i, bool negative) {
  if (i < 0 || i >= n) throw std::invalid_argument("axis index out of range");
  std::vector<double> v(static_cast<std::size_t>(n), 0.0);
  v[static_cast<std::size_t>(i)] = negative ? -1.0 : 1.0;
  return Direction(std::move(v));
}

Direction Direction::operator-() const {
  auto v = coords_;
  for (double& x : v) x = -x;
  return Direction(std::move(v));
}

// ---------------------------------------------------------------- Polytope

Polytope::Polytope(int dim, std::vector<Point> vertices) : dim_(dim), vertices_(std::move(vertices)) {
  if (auto h = detail::build_hull(dim_, vertices_)) {
    hull_ = std::make_shared<const detail::Hull>(std::move(*h));
  }
}

const detail::Hull& Polytope::hull() const {
  if (!hull_) throw std::invalid_argument("polytope is degenerate (not full-dimensional)");
  return *hull_;
}

// ---------------------------------------------------------------- profiles

AnalyticProfile::AnalyticProfile(int dim, std::vector<Knot> knots) : dim_(dim), knots_(std::move(knots)) {
  if (knots_.empty()) throw std::invalid_argument("profile needs at least one knot");
}

double AnalyticProfile::radius(double t) const {
  if (t < t_min() || t > t_max()) return 0.0;
  auto it = std::upper_bound(knots_.begin(), knots_.end(), t,
                             [](double x, const Knot& k) { return x < k.t; });
  if (it == knots_.end()) return knots_.back().r;
  if (it == knots_.begin()) return knots_.front().r;
  const Knot& b = *it;
  const Knot& a = *(it - 1);
  const double u = (t - a.t) / (b.t - a.t);
  return a.r + u * (b.r - a.r);
}

NumericProfile::NumericProfile(int dim, double t_min, double t_max, AreaFn area,
                               std::vector<double> breakpoints)
    : dim_(dim), t_min_(t_min), t_max_(t_max), area_(std::move(area)), breakpoints_(std::move(breakpoints)) {
  if (!area_) throw std::invalid_argument("numeric profile needs an area provider");
  breakpoints_.push_back(t_min_);
  breakpoints_.push_back(t_max_);
  std::erase_if(breakpoints_, [&](double b) { return !(b >= t_min_ && b <= t_max_); });
  std::sort(breakpoints_.begin(), breakpoints_.end());
  breakpoints_.erase(std::unique(breakpoints_.begin(), breakpoints_.end()), breakpoints_.end());
}

double NumericProfile::area(double t) const {
  if (t < t_min_ || t > t_max_) return 0.0;
  return std::max(0.0, area_(t));
}

double NumericProfile::radius(double t) const {
  return std::pow(area(t) / unit_ball_volume(dim_ - 1), 1.0 / (dim_ - 1));
}

// ---------------------------------------------------------------- helpers

int dimension(const Body& body) {
  return std::visit([](const auto& b) { return b.dim(); }, body);
}

bool is_profile(const Body& body) { return !std::holds_alternative<Polytope>(body); }

std::string describe(const Body& body) {
  std::ostringstream os;
  if (const auto* p = std::get_if<Polytope>(&body)) {
    os << "polytope(" << p->dim() << "d, " << p->vertices().size() << " vertices)";
  } else if (const auto* a = std::get_if<AnalyticProfile>(&body)) {
    os << "profile(" << a->dim() << "d, " << a->knots().size() << " knots)";
  } else {
    const auto& q = std::get<NumericProfile>(body);
    os << "numeric_profile(" << q.dim() << "d, [" << q.t_min() << ", " << q.t_max() << "])";
  }
  return os.str();
}

Body shift_axis(const Body& body, double dt) {
  if (const auto* a = std::get_if<AnalyticProfile>(&body)) {
    auto knots = a->knots();
    for (auto& k : knots) k.t += dt;
    return AnalyticProfile(a->dim(), std::move(knots));
  }
  if (const auto* q = std::get_if<NumericProfile>(&body)) {
    auto bps = q->breakpoints();
    for (double& b : bps) b += dt;
    return NumericProfile(q->dim(), q->t_min() + dt, q->t_max() + dt,
                          [src = *q, dt](double t) { return src.area(t - dt); }, std::move(bps));
  }
  std::vector<double> v(static_cast<std::size_t>(dimension(body)), 0.0);
  v[0] = dt;
  return translate(body, v);
}

Body translate(const Body& body, const std::vector<double>& vector) {
  if (static_cast<int>(vector.size()) != dimension(body)) {
    throw std::invalid_argument("translate: vector length does not match body dimension");
  }
  if (const auto* p = std::get_if<Polytope>(&body)) {
    auto verts = p->vertices();
    for (auto& v : verts) {
      for (std::size_t k = 0; k < v.size(); ++k) v[k] += vector[k];
    }
    return Polytope(p->dim(), std::move(verts));
  }
  for (std::size_t k = 1; k < vector.size(); ++k) {
    if (vector[k] != 0.0) {
      throw std::invalid_argument("translate: profile bodies only move along their axis");
    }
  }
  return shift_axis(body, vector[0]);
}

Body dilate(const Body& body, double factor) {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw std::invalid_argument("dilate: factor must be positive");
  }
  if (const auto* p = std::get_if<Polytope>(&body)) {
    auto verts = p->vertices();
    for (auto& v : verts) {
      for (double& x : v) x *= factor;
    }
    return Polytope(p->dim(), std::move(verts));
  }
  if (const auto* a = std::get_if<AnalyticProfile>(&body)) {
    auto knots = a->knots();
    for (auto& k : knots) k.t *= factor, k.r *= factor;
    return AnalyticProfile(a->dim(), std::move(knots));
  }
  const auto& q = std::get<NumericProfile>(body);
  auto bps = q.breakpoints();
  for (double& b : bps) b *= factor;
  const double area_scale = std::pow(factor, q.dim() - 1);
  return NumericProfile(
      q.dim(), q.t_min() * factor, q.t_max() * factor,
      [src = q, factor, area_scale](double t) { return area_scale * src.area(t / factor); },
      std::move(bps));
}

Body reflect(const Body& body) {
  if (const auto* p = std::get_if<Polytope>(&body)) {
    auto verts = p->vertices();
    for (auto& v : verts) {
      for (double& x : v) x = -x;
    }
    return Polytope(p->dim(), std::move(verts));
  }
  if (const auto* a = std::get_if<AnalyticProfile>(&body)) {
    std::vector<Knot> knots(a->knots().rbegin(), a->knots().rend());
    for (auto& k : knots) k.t = -k.t;
    return AnalyticProfile(a->dim(), std::move(knots));
  }
  const auto& q = std::get<NumericProfile>(body);
  auto bps = q.breakpoints();
  for (double& b : bps) b = -b;
  return NumericProfile(q.dim(), -q.t_max(), -q.t_min(),
                        [src = q](double t) { return src.area(-t); }, std::move(bps));
}

// ---------------------------------------------------------------- validate

namespace {

void check_polytope(const Polytope& p, std::vector<Diagnostic>& out) {
  if (p.dim() != 2 && p.dim() != 3) {
    out.push_back({"dimension", "polytope dimension must be 2 or 3, got " + std::to_string(p.dim())});
    return;
  }
  const auto& vs = p.vertices();
  if (static_cast<int>(vs.size()) < p.dim() + 1) {
    out.push_back({"vertex_count", "need at least " + std::to_string(p.dim() + 1) + " vertices, got " +
                                       std::to_string(vs.size())});
  }
  bool coords_ok = true;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (static_cast<int>(vs[i].size()) != p.dim()) {
      out.push_back({"vertex_dimension", "vertex " + std::to_string(i) + " has " +
                                             std::to_string(vs[i].size()) + " coordinates"});
      coords_ok = false;
      continue;
    }
    for (double x : vs[i]) {
      if (!std::isfinite(x)) {
        out.push_back({"finite", "vertex " + std::to_string(i) + " has a non-finite coordinate"});
        coords_ok = false;
        break;
      }
    }
  }
  if (coords_ok && static_cast<int>(vs.size()) >= p.dim() + 1 && !p.has_hull()) {
    out.push_back({"full_dimensional", "vertices lie in a common hyperplane"});
  }
}

void check_profile(const AnalyticProfile& a, std::vector<Diagnostic>& out) {
  if (a.dim() < 2) out.push_back({"dimension", "profile dimension must be >= 2"});
  const auto& k = a.knots();
  if (k.size() < 2) {
    out.push_back({"knot_count", "profile needs at least two knots"});
    return;
  }
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (!std::isfinite(k[i].t) || !std::isfinite(k[i].r)) {
      out.push_back({"finite", "knot " + std::to_string(i) + " is not finite"});
      return;
    }
    if (k[i].r < 0.0) out.push_back({"nonnegative_radius", "knot " + std::to_string(i) + " has r < 0"});
    if (i > 0 && i + 1 < k.size() && !(k[i].r > 0.0)) {
      out.push_back({"interior_radius", "interior knot " + std::to_string(i) + " has r = 0"});
    }
    if (i > 0 && !(k[i].t > k[i - 1].t)) {
      out.push_back({"increasing_t", "knot " + std::to_string(i) + " does not increase t"});
      return;
    }
  }
  for (std::size_t i = 1; i + 1 < k.size(); ++i) {
    const double s0 = (k[i].r - k[i - 1].r) / (k[i].t - k[i - 1].t);
    const double s1 = (k[i + 1].r - k[i].r) / (k[i + 1].t - k[i].t);
    if (s1 - s0 > 1e-10) {
      std::ostringstream os;
      os << "slope increases at knot " << i << " (" << s0 << " -> " << s1 << ")";
      out.push_back({"concavity", os.str()});
    }
  }
  bool positive = false;
  for (std::size_t i = 0; i + 1 < k.size(); ++i) positive = positive || k[i].r > 0.0 || k[i + 1].r > 0.0;
  if (!positive) out.push_back({"positive_volume", "profile has zero volume"});
}

void check_numeric(const NumericProfile& q, std::vector<Diagnostic>& out) {
  if (q.dim() < 2) out.push_back({"dimension", "profile dimension must be >= 2"});
  if (!(q.t_max() > q.t_min())) {
    out.push_back({"support", "empty support interval"});
    return;
  }
  constexpr int kGrid = 257;
  std::vector<double> root(kGrid);
  double peak = 0.0;
  for (int i = 0; i < kGrid; ++i) {
    const double t = q.t_min() + (q.t_max() - q.t_min()) * i / (kGrid - 1);
    const double a = q.area(t);
    if (a < 0.0) out.push_back({"nonnegative_area", "negative area at t=" + std::to_string(t)});
    root[i] = std::pow(std::max(a, 0.0), 1.0 / std::max(q.dim() - 1, 1));
    peak = std::max(peak, root[i]);
  }
  if (!(peak > 0.0)) {
    out.push_back({"positive_volume", "profile has zero volume"});
    return;
  }
  for (int i = 1; i + 1 < kGrid; ++i) {
    if (0.5 * (root[i - 1] + root[i + 1]) - root[i] > 1e-9 * peak) {
      out.push_back({"concavity", "A^(1/(n-1)) not concave near grid index " + std::to_string(i)});
      break;
    }
  }
}

}  // namespace

std::vector<Diagnostic> validate(const Body& body) {
  std::vector<Diagnostic> out;
  if (const auto* p = std::get_if<Polytope>(&body)) {
    check_polytope(*p, out);
  } else if (const auto* a = std::get_if<AnalyticProfile>(&body)) {
    check_profile(*a, out);
  } else {
    check_numeric(std::get<NumericProfile>(body), out);
  }
  return out;
}

}  // namespace cutgeom
