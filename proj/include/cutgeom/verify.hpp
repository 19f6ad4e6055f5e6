#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cutgeom/bodies.hpp"

namespace cutgeom {

/// Hyperplane <x, direction> = alpha * h(-direction) of a centered body.
class CutSpec {
 public:
  /// Throws std::domain_error unless -1 < alpha < n.
  CutSpec(Direction direction, double alpha);

  const Direction& direction() const { return direction_; }
  double alpha() const { return alpha_; }
  int dim() const { return direction_.dim(); }

 private:
  Direction direction_;
  double alpha_;
};

enum class Quantity { kCutRatio, kSectionRatio, kSupportRatio, kConcavityA, kConcavityV, kSymmetralConsistency };
enum class CheckBackend { kExact, kMonteCarlo };
enum class Equality { kNone, kLower, kUpper };

const char* to_string(Quantity q);
const char* to_string(CheckBackend b);
const char* to_string(Equality e);

struct ReportContext {
  std::string check;  // e.g. "theorem4", "grunbaum"
  std::string body;   // descriptor
  std::vector<double> direction;
  std::optional<double> alpha;
  std::optional<std::uint64_t> seed;
};

/// One comparison of a measured quantity against its bounds.
/// pass <=> lower - tolerance <= measured <= upper + tolerance, where an
/// absent bound is not checked.
struct VerifyReport {
  Quantity quantity = Quantity::kCutRatio;
  double measured = 0.0;
  std::optional<double> lower;
  std::optional<double> upper;
  double tolerance = 0.0;
  CheckBackend backend = CheckBackend::kExact;
  bool pass = false;
  /// Which bound `measured` attains within tolerance, if any.
  Equality equality = Equality::kNone;
  ReportContext context;
};

constexpr double kExactTolerance = 1e-9;
constexpr double kMcSigmas = 4.0;

/// Translate so that the centroid is at the origin.
Body center(const Body& body);

/// |K n H+| / |K| for the centered body.
double cut_ratio(const Body& body, const CutSpec& cut);
/// |K n H| / max_t A(t) for the centered body.
double section_ratio(const Body& body, const CutSpec& cut);

VerifyReport check_theorem4(const Body& body, const CutSpec& cut, double tol = kExactTolerance);
VerifyReport check_theorem5(const Body& body, const CutSpec& cut, double tol = kExactTolerance);
VerifyReport check_grunbaum(const Body& body, const Direction& direction, double tol = kExactTolerance);
VerifyReport check_minkowski_radon(const Body& body, const Direction& direction, double tol = kExactTolerance);

enum class ConcavityTarget { kSection, kCutVolume };

/// Midpoint concavity of A^(1/(n-1)) or V^(1/n) on a uniform grid inside the
/// open support. measured = worst violation (<= 0 when concave), upper = 0.
VerifyReport check_concavity(const Body& body, const Direction& direction, ConcavityTarget which,
                             int grid_points = 257, double tol = kExactTolerance);

/// |cut_ratio(body) - cut_ratio(symmetral)| against 0.
VerifyReport check_symmetral(const Body& body, const CutSpec& cut, double tol = kExactTolerance);

/// Hit-or-miss estimate of the cut ratio against the bounds. The tolerance is
/// the larger half of the Wilson interval at kMcSigmas, which matches
/// kMcSigmas standard errors except near ratios of 0 or 1.
VerifyReport check_theorem4_mc(const Body& body, const CutSpec& cut, long samples, std::uint64_t seed);

enum class FuzzBodyKind { kProfile, kPolytope };

struct FuzzConfig {
  std::vector<int> dims;
  int bodies_per_dim = 0;
  int alphas_per_body = 3;
  long mc_samples = 0;  // 0 disables the Monte Carlo checks
  std::uint64_t seed = 0;
  FuzzBodyKind kind = FuzzBodyKind::kProfile;
  double tol = kExactTolerance;
  int grid_points = 257;
};

struct FuzzFailure {
  std::uint64_t body_seed;
  VerifyReport report;
};

struct FuzzReport {
  std::vector<VerifyReport> reports;  // sorted by (seed, check, alpha)
  int total = 0;
  int passed = 0;
  /// Smallest slack to the nearest bound per check name (negative on failure).
  std::map<std::string, double> worst_margin;
  std::vector<FuzzFailure> failures;
  std::string rng = "mt19937_64";
};

/// Stratified alpha for draw `j` of a body in dimension n: strata
/// (-1+eps, 0], (0, 1/n], (1/n, n-eps) in rotation, eps = 1e-3.
double stratified_alpha(int j, int n, double u);

/// Random body `index` of dimension n for the given kind and root seed.
Body fuzz_body(FuzzBodyKind kind, int n, int index, std::uint64_t seed, std::uint64_t* body_seed = nullptr);

/// Everything `fuzz_suite` checks for one body: the body, its direction (a
/// random sign of the axis for profiles, uniform on the sphere for
/// polytopes) and its stratified alphas.
struct FuzzCase {
  Body body;
  Direction direction;
  std::vector<double> alphas;
  std::uint64_t body_seed;
};

FuzzCase fuzz_case(const FuzzConfig& config, int n, int index);

FuzzReport fuzz_suite(const FuzzConfig& config);

/// Distance from measured to the violated side (negative) or the nearest bound.
double margin(const VerifyReport& r);

}  // namespace cutgeom
