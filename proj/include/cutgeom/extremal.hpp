#pragma once

#include "cutgeom/bodies.hpp"

namespace cutgeom {

// Bodies attaining the bounds in `constants.hpp`. All are profiles about the
// first axis. Constructors named "centered" shift the body so its centroid
// sits at the origin; the others keep the normalized height [0, 1].

/// Cone with unit base at t = -1/(n+1) and apex at n/(n+1); centered.
AnalyticProfile grunbaum_cone(int n);
/// Apex at -n/(n+1), unit base at 1/(n+1); centered.
AnalyticProfile reflected_grunbaum_cone(int n);

/// Knots {(0, 1), (1, lambda)}; lambda = 0 is a cone, lambda = 1 a cylinder.
AnalyticProfile truncated_cone(double lambda, int n);
/// Same family in the compact parameter s in [0, 1]: knots {(0, 1-s), (1, s)}.
AnalyticProfile truncated_cone_s(double s, int n);

/// Unit-volume double cone: knots {(0,0), (beta, r), (1,0)} where the base
/// section has measure n. beta = 0 degenerates to the cone {(0, r), (1, 0)}.
AnalyticProfile double_cone(double beta, int n);

/// Centered minimizer of the cut ratio for -1 < alpha < 1/n.
AnalyticProfile lower_extremizer(double alpha, int n);
/// Centered maximizer of the cut ratio for -1 < alpha < n.
AnalyticProfile upper_extremizer(double alpha, int n, double tol = 1e-9);
/// Centered cone attaining the section bound for -1 < alpha <= 1/n: base
/// toward +axis for alpha <= 0, toward -axis for alpha > 0.
AnalyticProfile theorem5_equality_cone(double alpha, int n);

/// Shift a profile so that its centroid lies at t = 0.
AnalyticProfile centered(const AnalyticProfile& p);

}  // namespace cutgeom
