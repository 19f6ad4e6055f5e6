#pragma once

#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace cutgeom {

using Point = std::vector<double>;

/// Volume of the closed unit Euclidean ball in R^k (k >= 0).
double unit_ball_volume(int k);

/// Unit vector selecting the slicing axis.
class Direction {
 public:
  /// Throws std::invalid_argument unless |coords| == 1 within 1e-12 and size >= 2.
  explicit Direction(std::vector<double> coords);

  /// Normalizes `v`; throws std::invalid_argument on a zero or non-finite vector.
  static Direction normalized(std::vector<double> v);
  /// The i-th coordinate axis of R^n, optionally negated.
  static Direction axis(int n, int i = 0, bool negative = false);

  int dim() const { return static_cast<int>(coords_.size()); }
  const std::vector<double>& coords() const { return coords_; }
  double operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  Direction operator-() const;

 private:
  std::vector<double> coords_;
};

namespace detail {
struct Hull;
}

/// Convex hull of a finite point set in R^2 or R^3.
///
/// The vertex list is kept exactly as given. The hull (facets with outward
/// normals and the edge graph) is built once at construction when the points
/// are full-dimensional; otherwise `has_hull()` is false and `validate` names
/// the problem.
class Polytope {
 public:
  Polytope(int dim, std::vector<Point> vertices);

  int dim() const { return dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  bool has_hull() const { return hull_ != nullptr; }
  /// Throws std::invalid_argument when the polytope is degenerate.
  const detail::Hull& hull() const;

 private:
  int dim_;
  std::vector<Point> vertices_;
  std::shared_ptr<const detail::Hull> hull_;
};

struct Knot {
  double t;
  double r;
  friend bool operator==(const Knot&, const Knot&) = default;
};

/// Body of revolution about the first coordinate axis whose section at
/// height t is the (dim-1)-ball of radius r(t); r is piecewise linear
/// between knots.
class AnalyticProfile {
 public:
  AnalyticProfile(int dim, std::vector<Knot> knots);

  int dim() const { return dim_; }
  const std::vector<Knot>& knots() const { return knots_; }
  double t_min() const { return knots_.front().t; }
  double t_max() const { return knots_.back().t; }
  /// Linear interpolation of the radius; 0 outside the support.
  double radius(double t) const;

 private:
  int dim_;
  std::vector<Knot> knots_;
};

/// Body of revolution given only through its section-area function.
///
/// The provider must be reentrant; it is only queried on [t_min, t_max].
class NumericProfile {
 public:
  using AreaFn = std::function<double(double)>;

  NumericProfile(int dim, double t_min, double t_max, AreaFn area,
                 std::vector<double> breakpoints);

  int dim() const { return dim_; }
  double t_min() const { return t_min_; }
  double t_max() const { return t_max_; }
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  double area(double t) const;
  double radius(double t) const;

 private:
  int dim_;
  double t_min_;
  double t_max_;
  AreaFn area_;
  std::vector<double> breakpoints_;
};

using Body = std::variant<Polytope, AnalyticProfile, NumericProfile>;

int dimension(const Body& body);
bool is_profile(const Body& body);
/// Short human-readable descriptor, e.g. "polytope(3d, 12 vertices)".
std::string describe(const Body& body);

/// Translate by `vector` (length = body dimension). Profiles only accept
/// axial shifts: every component after the first must be zero.
Body translate(const Body& body, const std::vector<double>& vector);
/// Axial shift of a profile body; for polytopes use `translate`.
Body shift_axis(const Body& body, double dt);
/// Dilation about the origin; throws std::invalid_argument if factor <= 0.
Body dilate(const Body& body, double factor);
/// Reflection x -> -x.
Body reflect(const Body& body);

struct Diagnostic {
  std::string invariant;
  std::string detail;
};

/// Every violated body invariant; empty iff the body is valid.
std::vector<Diagnostic> validate(const Body& body);

}  // namespace cutgeom
