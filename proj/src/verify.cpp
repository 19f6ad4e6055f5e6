#include "cutgeom/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <tuple>

#include "cutgeom/constants.hpp"
#include "cutgeom/measure.hpp"
#include "cutgeom/oracle.hpp"

namespace cutgeom {

CutSpec::CutSpec(Direction direction, double alpha) : direction_(std::move(direction)), alpha_(alpha) {
  const int n = direction_.dim();
  if (!(alpha_ > -1.0 && alpha_ < n)) {
    throw std::domain_error("alpha must lie in (-1, n), got " + std::to_string(alpha_));
  }
}

const char* to_string(Quantity q) {
  switch (q) {
    case Quantity::kCutRatio:
      return "cut_ratio";
    case Quantity::kSectionRatio:
      return "section_ratio";
    case Quantity::kSupportRatio:
      return "support_ratio";
    case Quantity::kConcavityA:
      return "concavity_A";
    case Quantity::kConcavityV:
      return "concavity_V";
    case Quantity::kSymmetralConsistency:
      return "symmetral_consistency";
  }
  return "unknown";
}

const char* to_string(CheckBackend b) { return b == CheckBackend::kExact ? "exact" : "monte_carlo"; }

const char* to_string(Equality e) {
  switch (e) {
    case Equality::kLower:
      return "lower";
    case Equality::kUpper:
      return "upper";
    case Equality::kNone:
      break;
  }
  return "none";
}

namespace {

void finish(VerifyReport& r) {
  const bool lower_ok = !r.lower || r.lower.value() - r.tolerance <= r.measured;
  const bool upper_ok = !r.upper || r.measured <= r.upper.value() + r.tolerance;
  r.pass = lower_ok && upper_ok && std::isfinite(r.measured);
  r.equality = Equality::kNone;
  if (r.lower && std::abs(r.measured - *r.lower) <= r.tolerance) {
    r.equality = Equality::kLower;
  } else if (r.upper && std::abs(r.measured - *r.upper) <= r.tolerance) {
    r.equality = Equality::kUpper;
  }
}

ReportContext context(const char* check, const Body& body, const Direction& d, std::optional<double> alpha) {
  return {check, describe(body), d.coords(), alpha, std::nullopt};
}

/// Section curve of the centered body.
SectionCurve centered_curve(const Body& body, const Direction& d) { return SectionCurve(center(body), d); }

}  // namespace

Body center(const Body& body) {
  if (std::holds_alternative<Polytope>(body)) {
    auto g = centroid(body);
    for (double& x : g) x = -x;
    return translate(body, g);
  }
  return shift_axis(body, -centroid_coordinate(body, Direction::axis(dimension(body))));
}

double cut_ratio(const Body& body, const CutSpec& cut) {
  const auto curve = centered_curve(body, cut.direction());
  const double t = cut.alpha() * (-curve.t_min());
  return std::clamp(curve.cut_volume(t) / curve.volume(), 0.0, 1.0);
}

double section_ratio(const Body& body, const CutSpec& cut) {
  const auto curve = centered_curve(body, cut.direction());
  const double t = cut.alpha() * (-curve.t_min());
  return curve.area(t) / curve.max_section().area;
}

VerifyReport check_theorem4(const Body& body, const CutSpec& cut, double tol) {
  VerifyReport r;
  r.quantity = Quantity::kCutRatio;
  r.measured = cut_ratio(body, cut);
  r.lower = c1(cut.alpha(), cut.dim());
  r.upper = c2(cut.alpha(), cut.dim()).value;
  r.tolerance = tol;
  r.context = context("theorem4", body, cut.direction(), cut.alpha());
  finish(r);
  return r;
}

VerifyReport check_theorem5(const Body& body, const CutSpec& cut, double tol) {
  VerifyReport r;
  r.quantity = Quantity::kSectionRatio;
  r.measured = section_ratio(body, cut);
  r.lower = d_const(cut.alpha(), cut.dim());
  r.tolerance = tol;
  r.context = context("theorem5", body, cut.direction(), cut.alpha());
  finish(r);
  return r;
}

VerifyReport check_grunbaum(const Body& body, const Direction& direction, double tol) {
  const int n = direction.dim();
  VerifyReport r;
  r.quantity = Quantity::kCutRatio;
  r.measured = cut_ratio(body, CutSpec(direction, 0.0));
  r.lower = grunbaum_bound(n);
  r.upper = 1.0 - grunbaum_bound(n);
  r.tolerance = tol;
  r.context = context("grunbaum", body, direction, 0.0);
  finish(r);
  return r;
}

VerifyReport check_minkowski_radon(const Body& body, const Direction& direction, double tol) {
  const int n = direction.dim();
  const auto curve = centered_curve(body, direction);
  VerifyReport r;
  r.quantity = Quantity::kSupportRatio;
  r.measured = -curve.t_min() / curve.t_max();
  r.lower = 1.0 / n;
  r.upper = static_cast<double>(n);
  r.tolerance = tol;
  r.context = context("minkowski_radon", body, direction, std::nullopt);
  finish(r);
  return r;
}

VerifyReport check_concavity(const Body& body, const Direction& direction, ConcavityTarget which, int grid_points,
                             double tol) {
  if (grid_points < 3) throw std::invalid_argument("concavity grid needs at least 3 points");
  const SectionCurve curve(body, direction);
  const int n = curve.dim();
  const double lo = curve.t_min(), width = curve.t_max() - curve.t_min();
  std::vector<double> f(static_cast<std::size_t>(grid_points));
  for (int i = 0; i < grid_points; ++i) {
    const double t = lo + width * (i + 1) / (grid_points + 1);
    f[i] = which == ConcavityTarget::kSection ? std::pow(curve.area(t), 1.0 / (n - 1))
                                              : std::pow(curve.cut_volume(t), 1.0 / n);
  }
  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 1; i + 1 < grid_points; ++i) worst = std::max(worst, 0.5 * (f[i - 1] + f[i + 1]) - f[i]);

  VerifyReport r;
  r.quantity = which == ConcavityTarget::kSection ? Quantity::kConcavityA : Quantity::kConcavityV;
  r.measured = worst;
  r.upper = 0.0;
  r.tolerance = tol;
  r.context = context(which == ConcavityTarget::kSection ? "concavity_A" : "concavity_V", body, direction,
                      std::nullopt);
  finish(r);
  r.equality = Equality::kNone;
  return r;
}

VerifyReport check_symmetral(const Body& body, const CutSpec& cut, double tol) {
  const Body sym = schwarz_symmetral(body, cut.direction());
  const CutSpec axial(Direction::axis(cut.dim()), cut.alpha());
  VerifyReport r;
  r.quantity = Quantity::kSymmetralConsistency;
  r.measured = std::abs(cut_ratio(body, cut) - cut_ratio(sym, axial));
  r.lower = 0.0;
  r.upper = 0.0;
  r.tolerance = tol;
  r.context = context("symmetral", body, cut.direction(), cut.alpha());
  finish(r);
  r.equality = Equality::kNone;
  return r;
}

VerifyReport check_theorem4_mc(const Body& body, const CutSpec& cut, long samples, std::uint64_t seed) {
  const Body centered_body = center(body);
  const double h_minus = support(centered_body, -cut.direction());
  const auto est = mc_measure(centered_body, cut.direction(), cut.alpha() * h_minus, samples, seed);
  VerifyReport r;
  r.quantity = Quantity::kCutRatio;
  r.backend = CheckBackend::kMonteCarlo;
  r.measured = est.cut_ratio.value;
  r.lower = c1(cut.alpha(), cut.dim());
  r.upper = c2(cut.alpha(), cut.dim()).value;
  // Half-width of the Wilson interval on the far side; about kMcSigmas
  // standard errors away from 0 and 1, and never zero.
  const auto ci = wilson_interval(est.accepted_cut, est.accepted, kMcSigmas);
  r.tolerance = std::max(r.measured - ci.lo, ci.hi - r.measured);
  r.context = context("theorem4_mc", body, cut.direction(), cut.alpha());
  r.context.seed = seed;
  finish(r);
  return r;
}

double margin(const VerifyReport& r) {
  double m = std::numeric_limits<double>::infinity();
  if (r.lower) m = std::min(m, r.measured - (*r.lower - r.tolerance));
  if (r.upper) m = std::min(m, (*r.upper + r.tolerance) - r.measured);
  return m;
}

double stratified_alpha(int j, int n, double u) {
  constexpr double eps = 1e-3;
  switch (j % 3) {
    case 0:
      return -1.0 + eps + u * (1.0 - eps);  // (-1+eps, 0]
    case 1:
      return (1.0 - u) / n;  // (0, 1/n]
    default:
      return 1.0 / n + (1.0 - u) * (n - eps - 1.0 / n);  // (1/n, n-eps]
  }
}

Body fuzz_body(FuzzBodyKind kind, int n, int index, std::uint64_t seed, std::uint64_t* body_seed) {
  const std::uint64_t salt = kind == FuzzBodyKind::kProfile ? 0x70726f66ULL : 0x706f6c79ULL;
  const std::uint64_t s = derive_seed(seed ^ salt, static_cast<std::uint64_t>(n) * 1000003ULL + index);
  if (body_seed) *body_seed = s;
  Rng rng(derive_seed(s, 0));
  if (kind == FuzzBodyKind::kProfile) {
    const int knots = 2 + static_cast<int>(rng.next() % 6);
    return random_profile(n, knots, s);
  }
  const int points = n + 1 + static_cast<int>(rng.next() % 16);
  return random_polytope(n, points, s);
}

FuzzCase fuzz_case(const FuzzConfig& config, int n, int index) {
  std::uint64_t body_seed = 0;
  Body body = fuzz_body(config.kind, n, index, config.seed, &body_seed);
  Rng rng(derive_seed(body_seed, 1));
  auto direction = Direction::axis(n);
  if (config.kind == FuzzBodyKind::kProfile) {
    direction = Direction::axis(n, 0, rng.uniform() < 0.5);
  } else {
    std::vector<double> v(static_cast<std::size_t>(n));
    double r2 = 0.0;
    do {
      r2 = 0.0;
      for (double& x : v) x = rng.uniform(-1.0, 1.0), r2 += x * x;
    } while (r2 > 1.0 || r2 < 1e-6);
    direction = Direction::normalized(v);
  }
  std::vector<double> alphas;
  for (int j = 0; j < config.alphas_per_body; ++j) alphas.push_back(stratified_alpha(j, n, rng.uniform()));
  return {std::move(body), std::move(direction), std::move(alphas), body_seed};
}

FuzzReport fuzz_suite(const FuzzConfig& config) {
  FuzzReport out;
  std::vector<std::pair<std::uint64_t, VerifyReport>> tagged;
  for (int n : config.dims) {
    for (int b = 0; b < config.bodies_per_dim; ++b) {
      const auto fc = fuzz_case(config, n, b);
      const auto& body = fc.body;
      const auto& dir = fc.direction;
      auto add = [&](VerifyReport r) {
        if (!r.context.seed) r.context.seed = fc.body_seed;
        tagged.emplace_back(fc.body_seed, std::move(r));
      };
      add(check_grunbaum(body, dir, config.tol));
      add(check_minkowski_radon(body, dir, config.tol));
      add(check_concavity(body, dir, ConcavityTarget::kSection, config.grid_points, config.tol));
      add(check_concavity(body, dir, ConcavityTarget::kCutVolume, config.grid_points, config.tol));
      for (std::size_t j = 0; j < fc.alphas.size(); ++j) {
        const CutSpec cut(dir, fc.alphas[j]);
        add(check_theorem4(body, cut, config.tol));
        add(check_theorem5(body, cut, config.tol));
        add(check_symmetral(body, cut, config.tol));
        if (config.mc_samples > 0) {
          add(check_theorem4_mc(body, cut, config.mc_samples, derive_seed(fc.body_seed, 100 + j)));
        }
      }
    }
  }
  std::stable_sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) {
    const double aa = a.second.context.alpha.value_or(-2.0), ba = b.second.context.alpha.value_or(-2.0);
    return std::tie(a.first, a.second.context.check, aa) < std::tie(b.first, b.second.context.check, ba);
  });
  for (auto& [seed, r] : tagged) {
    ++out.total;
    if (r.pass) {
      ++out.passed;
    } else {
      out.failures.push_back({seed, r});
    }
    const double m = margin(r);
    auto [it, inserted] = out.worst_margin.emplace(r.context.check, m);
    if (!inserted) it->second = std::min(it->second, m);
    out.reports.push_back(std::move(r));
  }
  return out;
}

}  // namespace cutgeom
