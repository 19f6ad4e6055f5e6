#pragma once

#include <vector>

namespace cutgeom {

enum class C2Method { kClosedFormNegAlpha, kClosedFormN2, kNumericSup };

const char* to_string(C2Method m);

/// A maximizer of the truncated-cone cut ratio on the compactified domain.
///
/// `s` in [0, 1] parametrizes the truncated cone with radius
/// (1 - s)(1 - t) + s t on the normalized height [0, 1]; the homothety
/// coefficient is lambda = s / (1 - s) and the profile parameter is
/// z = 1 / (lambda - 1) = (1 - s) / (2s - 1).
struct C2Argmax {
  double s;
  double z;       // +-inf at s = 1/2
  double lambda;  // +inf at s = 1
  double value;
};

struct C2Result {
  double value;
  double argmax_z;
  double argmax_lambda;
  C2Method method;
  /// All maximizers whose value is within 1e-9 of the best, best first.
  /// Empty for the closed-form branch.
  std::vector<C2Argmax> near_optimal;
};

struct BoundsTriple {
  double c1;
  C2Result c2;
  double d;
};

/// Grunbaum lower bound (n/(n+1))^n.
double grunbaum_bound(int n);
/// Centroid-section bound (n/(n+1))^(n-1).
double makai_martini_bound(int n);

/// Sharp lower bound on the cut ratio. Throws std::domain_error unless
/// -1 < alpha < n and n >= 2.
double c1(double alpha, int n);

/// Scaled centroid height (alpha + 1) * g of the truncated cone with
/// section area (t + z)^(n-1) on [0, 1]. Throws std::domain_error for
/// z in (-1, 0).
double g_sub_l(double z, double alpha, int n);

/// Cut ratio of the same truncated cone above g_sub_l, clamped to [0, 1].
double phi(double z, double alpha, int n);

/// phi in the compact parametrization s in [0, 1] (see C2Argmax).
double phi_s(double s, double alpha, int n);
/// Centroid height on [0, 1] of the truncated cone with parameter s.
double truncated_cone_centroid_s(double s, int n);

/// Sharp upper bound. For alpha <= 0 this is the closed form attained by a
/// cone; for alpha > 0 the supremum of phi found by a 4097-point scan of s
/// with golden-section refinement of every local maximum.
C2Result c2(double alpha, int n, double tol = 1e-9);

/// The numeric supremum of phi for alpha in (0, n), in every dimension
/// including n = 2 (where `c2` reports the closed form instead).
C2Result c2_numeric(double alpha, int n, double tol = 1e-9);

/// Two-branch closed form of the upper bound in the plane, 0 < alpha < 2.
double c2_closed_n2(double alpha);

/// Optimal double-cone base height for 0 < alpha < 1/n.
double beta0(double alpha, int n);
/// Cut ratio of the unit-volume double cone with base at height beta.
double psi(double beta, double alpha, int n);
/// Branch point of psi: (alpha + 1) / (2 - (n - 1) alpha).
double psi_branch_point(double alpha, int n);

/// Sharp lower bound for the section-to-maximal-section ratio.
double d_const(double alpha, int n);

BoundsTriple bounds(double alpha, int n, double tol = 1e-9);

}  // namespace cutgeom
