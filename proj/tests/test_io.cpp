#include <gtest/gtest.h>

#include "cutgeom/extremal.hpp"
#include "cutgeom/io.hpp"
#include "cutgeom/measure.hpp"
#include "cutgeom/oracle.hpp"
#include "cutgeom/verify.hpp"

using namespace cutgeom;

TEST(BodyJson, RoundTrip) {
  const auto p = random_polytope(3, 9, 12);
  const auto back = std::get<Polytope>(body_from_json(body_to_json(p)));
  EXPECT_EQ(back.vertices(), p.vertices());
  const auto q = random_profile(5, 6, 12);
  EXPECT_EQ(std::get<AnalyticProfile>(body_from_json(body_to_json(q))).knots(), q.knots());
  EXPECT_EQ(body_to_json(grunbaum_cone(3)), R"({"dim":3,"knots":[[-0.25,1.0],[0.75,0.0]],"type":"profile"})");
}

TEST(BodyJson, Errors) {
  EXPECT_THROW(body_from_json("{"), ParseError);
  EXPECT_THROW(body_from_json(R"({"type":"sphere","dim":3})"), ParseError);
  EXPECT_THROW(body_from_json(R"({"type":"profile","dim":3,"knots":[[0,1,2]]})"), ParseError);
  EXPECT_THROW(body_from_json(R"({"type":"polytope","dim":2})"), ParseError);
  const NumericProfile np(3, 0, 1, [](double) { return 1.0; }, {});
  EXPECT_THROW(body_to_json(np), std::invalid_argument);
}

TEST(Resample, ExactAtKnotsAndCubeIsConstant) {
  const Polytope cube(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  const auto sym = std::get<NumericProfile>(schwarz_symmetral(cube, Direction::axis(3, 2)));
  const auto prof = resample_profile(sym, 8);
  EXPECT_TRUE(validate(prof).empty());
  EXPECT_NEAR(volume(prof), 1.0, 1e-12);
  for (const auto& k : prof.knots()) EXPECT_NEAR(k.r, 1.0 / std::sqrt(M_PI), 1e-15);

  const auto p = random_polytope(3, 20, 3);
  const auto d = Direction::normalized({1, 1, 0});
  const auto s = std::get<NumericProfile>(schwarz_symmetral(p, d));
  const auto r = resample_profile(s, 64);
  EXPECT_TRUE(validate(r).empty());
  for (const auto& k : r.knots()) EXPECT_NEAR(section_area(r, Direction::axis(3), k.t), s.area(k.t), 1e-12);
}

TEST(ReportJson, RoundTrip) {
  auto r = check_theorem4_mc(random_polytope(2, 7, 1), CutSpec(Direction::normalized({1, 3}), 0.4), 5000, 77);
  const auto back = report_from_json(report_to_json(r));
  EXPECT_EQ(back.quantity, r.quantity);
  EXPECT_EQ(back.measured, r.measured);
  EXPECT_EQ(back.lower, r.lower);
  EXPECT_EQ(back.upper, r.upper);
  EXPECT_EQ(back.tolerance, r.tolerance);
  EXPECT_EQ(back.backend, r.backend);
  EXPECT_EQ(back.pass, r.pass);
  EXPECT_EQ(back.equality, r.equality);
  EXPECT_EQ(back.context.check, r.context.check);
  EXPECT_EQ(back.context.body, r.context.body);
  EXPECT_EQ(back.context.direction, r.context.direction);
  EXPECT_EQ(back.context.alpha, r.context.alpha);
  EXPECT_EQ(back.context.seed, r.context.seed);

  const auto c = check_concavity(grunbaum_cone(3), Direction::axis(3), ConcavityTarget::kSection);
  const auto cb = report_from_json(report_to_json(c));
  EXPECT_FALSE(cb.lower.has_value());
  EXPECT_FALSE(cb.context.alpha.has_value());
  EXPECT_FALSE(cb.context.seed.has_value());
  EXPECT_EQ(report_to_json(cb), report_to_json(c));
  EXPECT_THROW(report_from_json(R"({"quantity":"volume"})"), ParseError);
}
