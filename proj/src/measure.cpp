#include "cutgeom/measure.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

#include "cutgeom/detail/hull.hpp"
#include "cutgeom/numerics.hpp"

namespace cutgeom {

namespace {

constexpr double kQuadTol = 1e-12;

double dot(const Point& x, const Direction& d) {
  double s = 0.0;
  for (int k = 0; k < d.dim(); ++k) s += x[static_cast<std::size_t>(k)] * d[k];
  return s;
}

/// +1 or -1 when the direction is the profile axis (or its negative).
int axis_sign(int dim, const Direction& d) {
  if (d.dim() != dim) throw std::invalid_argument("direction dimension does not match body");
  if (std::abs(std::abs(d[0]) - 1.0) > 1e-12) {
    throw std::invalid_argument("profile bodies only support directions along their axis");
  }
  return d[0] > 0.0 ? 1 : -1;
}

/// Precomputed projection of a polytope onto a direction and its orthogonal complement.
class Slicer {
 public:
  Slicer(const Polytope& p, const Direction& d) : poly_(p), hull_(&poly_.hull()), dim_(p.dim()) {
    if (d.dim() != dim_) throw std::invalid_argument("direction dimension does not match body");
    const auto& vs = p.vertices();
    height_.resize(vs.size());
    proj_.resize(vs.size());
    // Orthonormal basis of the complement of d.
    std::array<std::array<double, 3>, 2> basis{};
    if (dim_ == 2) {
      basis[0] = {-d[1], d[0], 0.0};
    } else {
      std::array<double, 3> xi{d[0], d[1], d[2]};
      int smallest = 0;
      for (int k = 1; k < 3; ++k) {
        if (std::abs(xi[k]) < std::abs(xi[smallest])) smallest = k;
      }
      std::array<double, 3> e{};
      e[smallest] = 1.0;
      // u = e - <e,xi> xi, normalized; w = xi x u.
      std::array<double, 3> u{};
      for (int k = 0; k < 3; ++k) u[k] = e[k] - xi[smallest] * xi[k];
      const double len = std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
      for (double& x : u) x /= len;
      basis[0] = u;
      basis[1] = {xi[1] * u[2] - xi[2] * u[1], xi[2] * u[0] - xi[0] * u[2], xi[0] * u[1] - xi[1] * u[0]};
    }
    lo_ = std::numeric_limits<double>::infinity();
    hi_ = -lo_;
    for (int id : hull_->vertex_ids) {
      const auto& v = vs[static_cast<std::size_t>(id)];
      height_[id] = dot(v, d);
      for (int b = 0; b < dim_ - 1; ++b) {
        double s = 0.0;
        for (int k = 0; k < dim_; ++k) s += basis[b][k] * v[k];
        proj_[id][b] = s;
      }
      lo_ = std::min(lo_, height_[id]);
      hi_ = std::max(hi_, height_[id]);
    }
  }

  double lo() const { return lo_; }
  double hi() const { return hi_; }

  std::vector<double> heights() const {
    std::vector<double> h;
    for (int id : hull_->vertex_ids) h.push_back(height_[id]);
    std::sort(h.begin(), h.end());
    h.erase(std::unique(h.begin(), h.end()), h.end());
    return h;
  }

  double area(double t) const {
    if (t < lo_ || t > hi_) return 0.0;
    std::vector<std::array<double, 2>> pts;
    pts.reserve(hull_->edges.size() + hull_->vertex_ids.size());
    for (int id : hull_->vertex_ids) {
      if (height_[id] == t) pts.push_back(proj_[id]);
    }
    for (const auto& [a, b] : hull_->edges) {
      const double ha = height_[a] - t, hb = height_[b] - t;
      if ((ha < 0.0 && hb > 0.0) || (ha > 0.0 && hb < 0.0)) {
        const double u = ha / (ha - hb);
        pts.push_back({proj_[a][0] + u * (proj_[b][0] - proj_[a][0]),
                       proj_[a][1] + u * (proj_[b][1] - proj_[a][1])});
      }
    }
    if (pts.empty()) return 0.0;
    if (dim_ == 2) {
      double mn = pts[0][0], mx = pts[0][0];
      for (const auto& q : pts) mn = std::min(mn, q[0]), mx = std::max(mx, q[0]);
      return mx - mn;
    }
    const auto ids = detail::convex_hull_2d(pts, 0.0);
    return std::max(0.0, detail::polygon_area(pts, ids));
  }

 private:
  Polytope poly_;  // keeps the shared hull alive
  const detail::Hull* hull_;
  int dim_;
  double lo_, hi_;
  std::vector<double> height_{};
  std::vector<std::array<double, 2>> proj_{};
};

/// Closed-form integrals over [0, h] of r^(n-1) and u * r^(n-1) for a linear
/// radius from r0 to r1, via the Bernstein expansion of r^(n-1):
/// each basis term integrates to 1/n, and against u to (k+1)/(n(n+1)).
struct ConeSlab {
  double integral;
  double first_moment;  // about the slab's lower end, in units of h^2
};

ConeSlab cone_slab(int n, double r0, double r1, double h) {
  double sum = 0.0, weighted = 0.0;
  // Terms r0^(n-1-k) r1^k for k = 0..n-1.
  std::vector<double> pw0(static_cast<std::size_t>(n), 1.0), pw1(static_cast<std::size_t>(n), 1.0);
  for (int k = 1; k < n; ++k) pw0[k] = pw0[k - 1] * r0, pw1[k] = pw1[k - 1] * r1;
  for (int k = 0; k < n; ++k) {
    const double term = pw0[n - 1 - k] * pw1[k];
    sum += term;
    weighted += (k + 1) * term;
  }
  return {h * sum / n, h * h * weighted / (static_cast<double>(n) * (n + 1))};
}

std::vector<Knot> oriented_knots(const AnalyticProfile& a, int sign) {
  if (sign > 0) return a.knots();
  std::vector<Knot> k(a.knots().rbegin(), a.knots().rend());
  for (auto& x : k) x.t = -x.t;
  return k;
}

}  // namespace

double polytope_section_area(const Polytope& p, const Direction& direction, double t) {
  return Slicer(p, direction).area(t);
}

// ---------------------------------------------------------------- SectionCurve

SectionCurve::SectionCurve(const Body& body, const Direction& direction)
    : dim_(dimension(body)), omega_(unit_ball_volume(dimension(body) - 1)) {
  if (const auto* p = std::get_if<Polytope>(&body)) {
    backend_ = Backend::kPolytope;
    auto slicer = std::make_shared<const Slicer>(*p, direction);
    breakpoints_ = slicer->heights();
    area_fn_ = [slicer](double t) { return slicer->area(t); };
  } else if (const auto* a = std::get_if<AnalyticProfile>(&body)) {
    backend_ = Backend::kProfile;
    for (const auto& k : oriented_knots(*a, axis_sign(dim_, direction))) {
      breakpoints_.push_back(k.t);
      radii_.push_back(k.r);
    }
  } else {
    const auto& q = std::get<NumericProfile>(body);
    backend_ = Backend::kNumeric;
    const int sign = axis_sign(dim_, direction);
    for (double b : q.breakpoints()) breakpoints_.push_back(sign * b);
    std::sort(breakpoints_.begin(), breakpoints_.end());
    area_fn_ = [q, sign](double t) { return q.area(sign * t); };
  }
  if (breakpoints_.size() < 2) throw std::invalid_argument("body has an empty support");

  const std::size_t m = breakpoints_.size();
  suffix_.assign(m, 0.0);
  for (std::size_t j = m - 1; j-- > 0;) {
    suffix_[j] = suffix_[j + 1] + slab_integral(j, breakpoints_[j]);
    moment_ += slab_moment(j);
  }
  if (!(suffix_.front() > 0.0)) throw std::invalid_argument("body has zero volume");
}

double SectionCurve::raw_area(double t) const {
  if (backend_ == Backend::kProfile) {
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
    double r;
    if (it == breakpoints_.end()) {
      r = radii_.back();
    } else if (it == breakpoints_.begin()) {
      r = radii_.front();
    } else {
      const std::size_t j = static_cast<std::size_t>(it - breakpoints_.begin());
      const double u = (t - breakpoints_[j - 1]) / (breakpoints_[j] - breakpoints_[j - 1]);
      r = radii_[j - 1] + u * (radii_[j] - radii_[j - 1]);
    }
    return omega_ * std::pow(r, dim_ - 1);
  }
  return area_fn_(t);
}

double SectionCurve::area(double t) const {
  if (t < t_min() || t > t_max()) return 0.0;
  return raw_area(t);
}

double SectionCurve::slab_integral(std::size_t j, double lo) const {
  const double hi = breakpoints_[j + 1];
  if (!(hi > lo)) return 0.0;
  switch (backend_) {
    case Backend::kProfile: {
      const double u = (lo - breakpoints_[j]) / (hi - breakpoints_[j]);
      const double r0 = lo == breakpoints_[j] ? radii_[j] : radii_[j] + u * (radii_[j + 1] - radii_[j]);
      return omega_ * cone_slab(dim_, r0, radii_[j + 1], hi - lo).integral;
    }
    case Backend::kPolytope:
      return simpson(area_fn_(lo), area_fn_(0.5 * (lo + hi)), area_fn_(hi), hi - lo);
    case Backend::kNumeric:
      return adaptive_simpson(area_fn_, lo, hi, kQuadTol);
  }
  return 0.0;
}

double SectionCurve::slab_moment(std::size_t j) const {
  const double lo = breakpoints_[j], hi = breakpoints_[j + 1];
  switch (backend_) {
    case Backend::kProfile: {
      const auto s = cone_slab(dim_, radii_[j], radii_[j + 1], hi - lo);
      return omega_ * (lo * s.integral + s.first_moment);
    }
    case Backend::kPolytope: {
      const double m = 0.5 * (lo + hi);
      return simpson(lo * area_fn_(lo), m * area_fn_(m), hi * area_fn_(hi), hi - lo);
    }
    case Backend::kNumeric:
      return adaptive_simpson([this](double t) { return t * area_fn_(t); }, lo, hi, kQuadTol);
  }
  return 0.0;
}

double SectionCurve::cut_volume(double t) const {
  if (t <= t_min()) return volume();
  if (t >= t_max()) return 0.0;
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  const std::size_t j = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  return suffix_[j + 1] + slab_integral(j, t);
}

MaxSection SectionCurve::max_section() const {
  std::vector<MaxSection> candidates;
  for (double b : breakpoints_) candidates.push_back({b, area(b)});
  if (backend_ != Backend::kProfile) {
    // A^(1/(n-1)) is concave, so A is unimodal on every slab.
    for (std::size_t j = 0; j + 1 < breakpoints_.size(); ++j) {
      const auto m = golden_section_maximize([this](double t) { return area(t); }, breakpoints_[j],
                                             breakpoints_[j + 1], 1e-12);
      candidates.push_back({m.x, m.value});
    }
  }
  double best = 0.0;
  for (const auto& c : candidates) best = std::max(best, c.area);
  MaxSection out{std::numeric_limits<double>::infinity(), best};
  for (const auto& c : candidates) {
    if (c.area >= best * (1.0 - 1e-12) && c.t0 < out.t0) out = c;
  }
  return out;
}

// ---------------------------------------------------------------- free functions

double support(const Body& body, const Direction& direction) {
  if (const auto* p = std::get_if<Polytope>(&body)) {
    if (direction.dim() != p->dim()) throw std::invalid_argument("direction dimension does not match body");
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& v : p->vertices()) best = std::max(best, dot(v, direction));
    return best;
  }
  const int sign = axis_sign(dimension(body), direction);
  if (const auto* a = std::get_if<AnalyticProfile>(&body)) return sign > 0 ? a->t_max() : -a->t_min();
  const auto& q = std::get<NumericProfile>(body);
  return sign > 0 ? q.t_max() : -q.t_min();
}

double section_area(const Body& body, const Direction& direction, double t) {
  if (const auto* p = std::get_if<Polytope>(&body)) return polytope_section_area(*p, direction, t);
  if (const auto* a = std::get_if<AnalyticProfile>(&body)) {
    const int sign = axis_sign(a->dim(), direction);
    return unit_ball_volume(a->dim() - 1) * std::pow(a->radius(sign * t), a->dim() - 1);
  }
  const auto& q = std::get<NumericProfile>(body);
  return q.area(axis_sign(q.dim(), direction) * t);
}

double cut_volume(const Body& body, const Direction& direction, double t) {
  return SectionCurve(body, direction).cut_volume(t);
}

double volume(const Body& body) {
  const int n = dimension(body);
  return SectionCurve(body, Direction::axis(n)).volume();
}

double centroid_coordinate(const Body& body, const Direction& direction) {
  return SectionCurve(body, direction).centroid();
}

Point centroid(const Body& body) {
  const int n = dimension(body);
  Point g(static_cast<std::size_t>(n), 0.0);
  const auto* p = std::get_if<Polytope>(&body);
  if (!p) {
    g[0] = centroid_coordinate(body, Direction::axis(n));
    return g;
  }
  const auto& h = p->hull();
  const auto& vs = p->vertices();
  double total = 0.0;
  if (n == 2) {
    const auto& o = vs[h.vertex_ids[0]];
    for (std::size_t i = 1; i + 1 < h.vertex_ids.size(); ++i) {
      const auto& a = vs[h.vertex_ids[i]];
      const auto& b = vs[h.vertex_ids[i + 1]];
      const double w = 0.5 * ((a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]));
      total += w;
      for (int k = 0; k < 2; ++k) g[k] += w * (o[k] + a[k] + b[k]) / 3.0;
    }
  } else {
    Point ref(3, 0.0);
    for (int id : h.vertex_ids) {
      for (int k = 0; k < 3; ++k) ref[k] += vs[id][k] / static_cast<double>(h.vertex_ids.size());
    }
    for (const auto& f : h.facets) {
      const auto& a = vs[f.ids[0]];
      const auto& b = vs[f.ids[1]];
      const auto& c = vs[f.ids[2]];
      const std::array<double, 3> u{a[0] - ref[0], a[1] - ref[1], a[2] - ref[2]};
      const std::array<double, 3> v{b[0] - ref[0], b[1] - ref[1], b[2] - ref[2]};
      const std::array<double, 3> w{c[0] - ref[0], c[1] - ref[1], c[2] - ref[2]};
      const double det = u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) +
                         u[2] * (v[0] * w[1] - v[1] * w[0]);
      const double vol = std::abs(det) / 6.0;
      total += vol;
      for (int k = 0; k < 3; ++k) g[k] += vol * (ref[k] + a[k] + b[k] + c[k]) / 4.0;
    }
  }
  for (double& x : g) x /= total;
  return g;
}

MaxSection max_section(const Body& body, const Direction& direction) {
  return SectionCurve(body, direction).max_section();
}

Body schwarz_symmetral(const Body& body, const Direction& direction) {
  if (const auto* a = std::get_if<AnalyticProfile>(&body)) {
    return AnalyticProfile(a->dim(), oriented_knots(*a, axis_sign(a->dim(), direction)));
  }
  if (const auto* q = std::get_if<NumericProfile>(&body)) {
    return axis_sign(q->dim(), direction) > 0 ? body : reflect(body);
  }
  const auto& p = std::get<Polytope>(body);
  auto slicer = std::make_shared<const Slicer>(p, direction);
  const auto heights = slicer->heights();
  if (p.dim() == 2) {
    // Chord length is linear between projected vertices, and the unit 1-ball has length 2.
    std::vector<Knot> knots;
    for (double t : heights) knots.push_back({t, 0.5 * slicer->area(t)});
    return AnalyticProfile(2, std::move(knots));
  }
  return NumericProfile(p.dim(), slicer->lo(), slicer->hi(), [slicer](double t) { return slicer->area(t); },
                        heights);
}

}  // namespace cutgeom
