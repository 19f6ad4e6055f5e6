#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "cutgeom/bodies.hpp"

namespace cutgeom::detail {

/// Supporting half-space normal . x <= offset, |normal| = 1.
struct Facet {
  std::array<int, 3> ids{-1, -1, -1};  // third id unused in 2-D
  std::array<double, 3> normal{};
  double offset = 0.0;
};

struct Hull {
  int dim = 0;
  std::vector<int> vertex_ids;  // extreme points; counter-clockwise in 2-D
  std::vector<std::array<int, 2>> edges;
  std::vector<Facet> facets;  // triangulated in 3-D
  double scale = 1.0;         // bounding-box diameter of the input

  bool contains(std::span<const double> x, double tol) const;
};

/// Returns nullopt when the points do not span R^dim.
std::optional<Hull> build_hull(int dim, const std::vector<Point>& pts);

/// Counter-clockwise convex hull of planar points (indices), collinear points
/// dropped. Fewer than three ids means the input is degenerate.
std::vector<int> convex_hull_2d(std::span<const std::array<double, 2>> pts,
                                double eps);

double polygon_area(std::span<const std::array<double, 2>> pts,
                    std::span<const int> ccw_ids);

}  // namespace cutgeom::detail
