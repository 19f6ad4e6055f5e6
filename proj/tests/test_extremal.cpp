#include <gtest/gtest.h>

#include <cmath>

#include "cutgeom/constants.hpp"
#include "cutgeom/extremal.hpp"
#include "cutgeom/measure.hpp"
#include "cutgeom/oracle.hpp"
#include "cutgeom/verify.hpp"

using namespace cutgeom;

namespace {

double ratio(const Body& b, double alpha) {
  const int n = dimension(b);
  return cut_ratio(b, CutSpec(Direction::axis(n), alpha));
}

double width(const AnalyticProfile& p) { return p.t_max() - p.t_min(); }

}  // namespace

TEST(GrunbaumCone, Examples) {
  EXPECT_NEAR(ratio(grunbaum_cone(2), 0), 4.0 / 9.0, 1e-15);
  EXPECT_NEAR(ratio(grunbaum_cone(3), 0), 27.0 / 64.0, 1e-15);
  for (int n = 2; n <= 7; ++n) {
    const auto g = grunbaum_cone(n);
    EXPECT_NEAR(centroid_coordinate(g, Direction::axis(n)), 0.0, 1e-12);
    EXPECT_NEAR(support(g, Direction::axis(n)), n * support(g, Direction::axis(n, 0, true)), 1e-14);
    EXPECT_TRUE(validate(g).empty());
  }
}

TEST(ReflectedCone, Examples) {
  EXPECT_NEAR(ratio(reflected_grunbaum_cone(2), 0), 5.0 / 9.0, 1e-15);
  EXPECT_EQ(ratio(reflected_grunbaum_cone(2), 0.5), 0.0);
  for (int n = 2; n <= 6; ++n) {
    EXPECT_NEAR(ratio(reflected_grunbaum_cone(n), 0), 1 - grunbaum_bound(n), 1e-14);
  }
}

TEST(TruncatedCone, Examples) {
  EXPECT_NEAR(volume(truncated_cone(0, 3)), M_PI / 3, 1e-15);
  for (int n = 2; n <= 5; ++n) EXPECT_NEAR(volume(truncated_cone(1, n)), unit_ball_volume(n - 1), 1e-14);
  EXPECT_NEAR(ratio(truncated_cone(2, 2), 0.5), phi(1, 0.5, 2), 1e-13);
  EXPECT_THROW(truncated_cone(-0.1, 3), std::domain_error);
}

TEST(DoubleCone, Examples) {
  EXPECT_NEAR(volume(double_cone(0.5, 2)), 1.0, 1e-15);
  EXPECT_NEAR(centroid_coordinate(double_cone(0.6, 2), Direction::axis(2)), 1.6 / 3.0, 1e-15);
  for (int n = 2; n <= 5; ++n) {
    const double a = 0.5 / n;
    // ratio of the uncentered body must be taken after centering: cut_ratio centers.
    EXPECT_NEAR(ratio(double_cone(0, n), a), psi(0, a, n), 1e-13);
    EXPECT_NEAR(volume(double_cone(0.3, n)), 1.0, 1e-14);
    for (double beta : {0.1, 0.4, 0.8}) EXPECT_NEAR(ratio(double_cone(beta, n), a), psi(beta, a, n), 1e-13);
  }
  EXPECT_THROW(double_cone(1.0, 2), std::domain_error);
}

TEST(LowerExtremizer, Examples) {
  EXPECT_NEAR(ratio(lower_extremizer(0.25, 2), 0.25), 5.0 / 18.0, 1e-13);
  EXPECT_NEAR(ratio(lower_extremizer(-0.5, 2), -0.5), std::pow(2.5 / 3.0, 2), 1e-13);
  EXPECT_THROW(lower_extremizer(0.5, 2), std::domain_error);
  // Near 0 the double cone collapses onto the cone.
  EXPECT_NEAR(ratio(lower_extremizer(1e-9, 3), 1e-9), grunbaum_bound(3), 1e-7);
}

TEST(LowerExtremizer, IsLocalMinimum) {
  Rng rng(77);
  for (int n = 2; n <= 4; ++n) {
    const double a = 0.6 / n, best = ratio(lower_extremizer(a, n), a), b0 = beta0(a, n);
    for (int i = 0; i < 200; ++i) {
      const double beta = std::clamp(b0 + rng.uniform(-0.05, 0.05), 0.0, 0.999);
      EXPECT_LE(best, ratio(double_cone(beta, n), a) + 1e-12);
    }
  }
}

TEST(UpperExtremizer, Examples) {
  EXPECT_NEAR(ratio(upper_extremizer(1, 2), 1), 1.0 / 9.0, 1e-9);
  EXPECT_NEAR(ratio(upper_extremizer(-0.25, 3), -0.25), 1 - std::pow(3 * 0.75 / 4, 3), 1e-13);
  EXPECT_NEAR(ratio(upper_extremizer(0.5, 2), 0.5), 7.0 / 27.0, 1e-6);
}

TEST(UpperExtremizer, IsLocalMaximum) {
  Rng rng(78);
  for (int n = 2; n <= 4; ++n) {
    for (double a : {0.2, 0.7}) {
      const auto r = c2(a, n);
      const double best = ratio(upper_extremizer(a, n), a);
      EXPECT_NEAR(best, r.value, 1e-8);
      const double s0 = r.near_optimal.front().s;
      for (int i = 0; i < 200; ++i) {
        const double s = std::clamp(s0 + rng.uniform(-0.05, 0.05), 0.0, 1.0);
        EXPECT_GE(best, ratio(truncated_cone_s(s, n), a) - 1e-12);
      }
    }
  }
}

TEST(SectionEqualityCone, Examples) {
  auto sec = [](double a, int n) {
    return section_ratio(theorem5_equality_cone(a, n), CutSpec(Direction::axis(n), a));
  };
  EXPECT_NEAR(sec(0.25, 2), 7.0 / 12.0, 1e-14);
  EXPECT_NEAR(sec(-0.5, 2), 1.0 / 3.0, 1e-14);
  EXPECT_NEAR(sec(0, 3), 9.0 / 16.0, 1e-14);
  EXPECT_THROW(theorem5_equality_cone(0.6, 2), std::domain_error);
}

TEST(Extremal, AllValidAndCentered) {
  for (int n = 2; n <= 5; ++n) {
    std::vector<AnalyticProfile> bodies{grunbaum_cone(n), reflected_grunbaum_cone(n)};
    for (double a : {-0.5, 0.0, 0.5 / n}) {
      bodies.push_back(lower_extremizer(a, n));
      bodies.push_back(upper_extremizer(a, n));
      bodies.push_back(theorem5_equality_cone(a, n));
    }
    bodies.push_back(upper_extremizer(1.5, n));
    for (const auto& b : bodies) {
      EXPECT_TRUE(validate(b).empty());
      EXPECT_LE(std::abs(centroid_coordinate(b, Direction::axis(n))), 1e-10 * width(b));
    }
  }
}
