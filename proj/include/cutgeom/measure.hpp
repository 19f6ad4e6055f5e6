#pragma once

#include <functional>
#include <vector>

#include "cutgeom/bodies.hpp"

namespace cutgeom {

struct MaxSection {
  double t0;
  double area;
};

/// The parallel section function A(t) of a body along a direction, with the
/// integrals of A precomputed slab by slab.
///
/// Slabs are delimited by the breakpoints (projected vertices or knots).
/// Integration is closed form for analytic profiles, three-point Simpson for
/// polytopes (A has degree <= n-1 <= 2 on each slab, so the rule is exact for
/// both A and t*A), and adaptive Simpson at 1e-12 for numeric profiles.
///
/// For profile bodies the direction must be the profile axis or its negative.
class SectionCurve {
 public:
  SectionCurve(const Body& body, const Direction& direction);

  int dim() const { return dim_; }
  double t_min() const { return breakpoints_.front(); }
  double t_max() const { return breakpoints_.back(); }
  const std::vector<double>& breakpoints() const { return breakpoints_; }

  /// (n-1)-volume of the slice at height t; 0 outside the support.
  double area(double t) const;
  /// Volume of the part at height >= t.
  double cut_volume(double t) const;
  double volume() const { return suffix_.front(); }
  /// Height of the centroid along the direction.
  double centroid() const { return moment_ / volume(); }
  /// Leftmost maximizer of A with its value.
  MaxSection max_section() const;

 private:
  enum class Backend { kProfile, kPolytope, kNumeric };

  double raw_area(double t) const;
  double slab_integral(std::size_t j, double lo) const;
  double slab_moment(std::size_t j) const;

  Backend backend_;
  int dim_;
  double omega_;  // unit (n-1)-ball volume
  std::vector<double> breakpoints_;
  std::vector<double> radii_;  // profile radius at each breakpoint
  std::function<double(double)> area_fn_;
  std::vector<double> suffix_;  // suffix_[j] = integral of A over [breakpoints_[j], t_max]
  double moment_ = 0.0;
};

double support(const Body& body, const Direction& direction);
double section_area(const Body& body, const Direction& direction, double t);
double cut_volume(const Body& body, const Direction& direction, double t);
/// Throws std::invalid_argument for a degenerate body.
double volume(const Body& body);
double centroid_coordinate(const Body& body, const Direction& direction);
/// Full centroid; for profiles (c, 0, ..., 0) in axis coordinates. Polytopes
/// use an exact simplex decomposition.
Point centroid(const Body& body);
MaxSection max_section(const Body& body, const Direction& direction);

/// Body of revolution about the direction with the same section areas. The
/// result's axis is the profile axis (first coordinate). 2-D polytopes and
/// analytic profiles yield analytic profiles; 3-D polytopes and numeric
/// profiles yield numeric profiles.
Body schwarz_symmetral(const Body& body, const Direction& direction);

/// Slice of a polytope by the hyperplane <x, direction> = t.
double polytope_section_area(const Polytope& p, const Direction& direction, double t);

}  // namespace cutgeom
