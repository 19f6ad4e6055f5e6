#include "cutgeom/detail/hull.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <utility>

namespace cutgeom::detail {

namespace {

using Vec3 = std::array<double, 3>;

Vec3 to3(const Point& p) {
  return {p[0], p[1], p.size() > 2 ? p[2] : 0.0};
}

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

double cross2(const std::array<double, 2>& o, const std::array<double, 2>& a,
              const std::array<double, 2>& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

double bbox_diameter(int dim, const std::vector<Point>& pts) {
  double d2 = 0.0;
  for (int k = 0; k < dim; ++k) {
    double lo = pts[0][k], hi = pts[0][k];
    for (const auto& p : pts) {
      lo = std::min(lo, p[k]);
      hi = std::max(hi, p[k]);
    }
    d2 += (hi - lo) * (hi - lo);
  }
  return std::sqrt(d2);
}

std::optional<Hull> build_hull_2d(const std::vector<Point>& pts, double scale) {
  std::vector<std::array<double, 2>> flat(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) flat[i] = {pts[i][0], pts[i][1]};
  const double eps = 1e-12 * scale * scale;
  auto ids = convex_hull_2d(flat, eps);
  if (ids.size() < 3) return std::nullopt;
  if (polygon_area(flat, ids) <= eps) return std::nullopt;

  Hull h;
  h.dim = 2;
  h.scale = scale;
  h.vertex_ids = ids;
  const std::size_t m = ids.size();
  for (std::size_t i = 0; i < m; ++i) {
    const int a = ids[i], b = ids[(i + 1) % m];
    h.edges.push_back({a, b});
    // Outward normal of a counter-clockwise edge is the edge direction rotated clockwise.
    const double ex = flat[b][0] - flat[a][0], ey = flat[b][1] - flat[a][1];
    const double len = std::hypot(ex, ey);
    Facet f;
    f.ids = {a, b, -1};
    f.normal = {ey / len, -ex / len, 0.0};
    f.offset = f.normal[0] * flat[a][0] + f.normal[1] * flat[a][1];
    h.facets.push_back(f);
  }
  return h;
}

struct Face {
  std::array<int, 3> v;
  Vec3 n;
  double d;
};

Face make_face(const std::vector<Vec3>& p, int a, int b, int c, const Vec3& interior) {
  Face f{{a, b, c}, cross(sub(p[b], p[a]), sub(p[c], p[a])), 0.0};
  const double len = norm(f.n);
  for (auto& x : f.n) x /= len;
  f.d = dot(f.n, p[a]);
  if (dot(f.n, interior) > f.d) {
    std::swap(f.v[1], f.v[2]);
    for (auto& x : f.n) x = -x;
    f.d = -f.d;
  }
  return f;
}

std::optional<Hull> build_hull_3d(const std::vector<Point>& pts, double scale) {
  std::vector<Vec3> p(pts.size());
  std::transform(pts.begin(), pts.end(), p.begin(), to3);
  const int np = static_cast<int>(p.size());
  const double eps = 1e-10 * scale;

  // Initial simplex from extreme points.
  int i0 = 0;
  for (int i = 1; i < np; ++i) {
    if (p[i][0] < p[i0][0]) i0 = i;
  }
  int i1 = -1;
  double best = 0.0;
  for (int i = 0; i < np; ++i) {
    const double d = norm(sub(p[i], p[i0]));
    if (d > best) best = d, i1 = i;
  }
  if (i1 < 0 || best <= eps) return std::nullopt;
  int i2 = -1;
  best = 0.0;
  const Vec3 e01 = sub(p[i1], p[i0]);
  for (int i = 0; i < np; ++i) {
    const double d = norm(cross(e01, sub(p[i], p[i0]))) / norm(e01);
    if (d > best) best = d, i2 = i;
  }
  if (i2 < 0 || best <= eps) return std::nullopt;
  Vec3 n012 = cross(e01, sub(p[i2], p[i0]));
  const double n012_len = norm(n012);
  for (auto& x : n012) x /= n012_len;
  int i3 = -1;
  best = 0.0;
  for (int i = 0; i < np; ++i) {
    const double d = std::abs(dot(n012, sub(p[i], p[i0])));
    if (d > best) best = d, i3 = i;
  }
  if (i3 < 0 || best <= eps) return std::nullopt;

  Vec3 interior{};
  for (int id : {i0, i1, i2, i3}) {
    for (int k = 0; k < 3; ++k) interior[k] += 0.25 * p[id][k];
  }
  std::vector<Face> faces{make_face(p, i0, i1, i2, interior), make_face(p, i0, i1, i3, interior),
                          make_face(p, i0, i2, i3, interior), make_face(p, i1, i2, i3, interior)};

  for (int q = 0; q < np; ++q) {
    if (q == i0 || q == i1 || q == i2 || q == i3) continue;
    std::vector<char> visible(faces.size(), 0);
    bool any = false;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (dot(faces[f].n, p[q]) - faces[f].d > eps) visible[f] = 1, any = true;
    }
    if (!any) continue;
    std::set<std::pair<int, int>> directed;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (!visible[f]) continue;
      const auto& v = faces[f].v;
      for (int k = 0; k < 3; ++k) directed.insert({v[k], v[(k + 1) % 3]});
    }
    std::vector<Face> next;
    next.reserve(faces.size() + 8);
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (!visible[f]) next.push_back(faces[f]);
    }
    for (const auto& [a, b] : directed) {
      if (!directed.count({b, a})) next.push_back(make_face(p, a, b, q, interior));
    }
    faces = std::move(next);
  }

  Hull h;
  h.dim = 3;
  h.scale = scale;
  std::set<int> ids;
  std::set<std::pair<int, int>> edges;
  for (const auto& f : faces) {
    Facet out;
    out.ids = f.v;
    out.normal = f.n;
    out.offset = f.d;
    h.facets.push_back(out);
    for (int k = 0; k < 3; ++k) {
      ids.insert(f.v[k]);
      const int a = f.v[k], b = f.v[(k + 1) % 3];
      edges.insert({std::min(a, b), std::max(a, b)});
    }
  }
  h.vertex_ids.assign(ids.begin(), ids.end());
  for (const auto& [a, b] : edges) h.edges.push_back({a, b});
  return h;
}

}  // namespace

bool Hull::contains(std::span<const double> x, double tol) const {
  for (const auto& f : facets) {
    double s = 0.0;
    for (int k = 0; k < dim; ++k) s += f.normal[k] * x[k];
    if (s > f.offset + tol) return false;
  }
  return true;
}

std::vector<int> convex_hull_2d(std::span<const std::array<double, 2>> pts, double eps) {
  std::vector<int> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return pts[a] < pts[b]; });
  order.erase(std::unique(order.begin(), order.end(),
                          [&](int a, int b) { return pts[a] == pts[b]; }),
              order.end());
  if (order.size() < 3) return order;

  std::vector<int> hull(2 * order.size());
  std::size_t k = 0;
  for (int id : order) {
    while (k >= 2 && cross2(pts[hull[k - 2]], pts[hull[k - 1]], pts[id]) <= eps) --k;
    hull[k++] = id;
  }
  const std::size_t lower = k + 1;
  for (auto it = order.rbegin() + 1; it != order.rend(); ++it) {
    while (k >= lower && cross2(pts[hull[k - 2]], pts[hull[k - 1]], pts[*it]) <= eps) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return hull;
}

double polygon_area(std::span<const std::array<double, 2>> pts, std::span<const int> ccw_ids) {
  const std::size_t m = ccw_ids.size();
  if (m < 3) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& a = pts[ccw_ids[i]];
    const auto& b = pts[ccw_ids[(i + 1) % m]];
    s += a[0] * b[1] - a[1] * b[0];
  }
  return 0.5 * s;
}

std::optional<Hull> build_hull(int dim, const std::vector<Point>& pts) {
  if ((dim != 2 && dim != 3) || static_cast<int>(pts.size()) < dim + 1) return std::nullopt;
  for (const auto& p : pts) {
    if (static_cast<int>(p.size()) != dim) return std::nullopt;
    for (double x : p) {
      if (!std::isfinite(x)) return std::nullopt;
    }
  }
  const double scale = bbox_diameter(dim, pts);
  if (!(scale > 0.0)) return std::nullopt;
  return dim == 2 ? build_hull_2d(pts, scale) : build_hull_3d(pts, scale);
}

}  // namespace cutgeom::detail
