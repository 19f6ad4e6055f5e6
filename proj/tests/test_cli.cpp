#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "cutgeom/io.hpp"
#include "cutgeom/measure.hpp"
#include "cutgeom/oracle.hpp"

using namespace cutgeom;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CUTGEOM_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "cutgeom_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

constexpr const char* kCubeJson =
    R"({"type":"polytope","dim":3,"vertices":[[0,0,0],[1,0,0],[0,1,0],[0,0,1],[1,1,0],[1,0,1],[0,1,1],[1,1,1]]})";

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST(CliConstants, Examples) {
  auto r = run("constants --n 2 --alpha 1");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["c2"].get<double>(), 1.0 / 9.0, 1e-15);
  EXPECT_EQ(j["method"], "closed_form_n2");

  r = run("constants --n 3 --alpha 0");
  ASSERT_EQ(r.code, 0);
  j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["c1"].get<double>(), 0.421875);
  EXPECT_TRUE(j["c2_argmax_lambda"].is_null());
  for (const char* key : {"n", "alpha", "c1", "c2", "c2_argmax_lambda", "d", "method"}) EXPECT_TRUE(j.contains(key));

  EXPECT_EQ(run("constants --n 2 --alpha 2.5").code, 2);
  EXPECT_EQ(run("constants --n 1 --alpha 0").code, 2);
  EXPECT_EQ(run("constants --n 2").code, 2);
  EXPECT_EQ(run("constants --n 2 --alpha abc").code, 2);
}

TEST(CliSweep, ClosedFormsAndDeterminism) {
  const auto a = scratch("sweep_a.csv"), b = scratch("sweep_b.csv");
  ASSERT_EQ(run("sweep --n 2 --alpha-min -0.5 --alpha-max 1.5 --steps 9 --out " + a.string()).code, 0);
  ASSERT_EQ(run("sweep --n 2 --alpha-min -0.5 --alpha-max 1.5 --steps 9 --out " + b.string()).code, 0);
  const auto text = slurp(a);
  EXPECT_EQ(text, slurp(b));
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "alpha,c1,c2,d,lambda0");
  int rows = 0;
  bool saw_zero = false;
  while (std::getline(in, line)) {
    ++rows;
    double alpha, c1, c2, d;
    char lam[64];
    ASSERT_EQ(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%63s", &alpha, &c1, &c2, &d, lam), 5) << line;
    if (alpha == 0.0) {
      saw_zero = true;
      EXPECT_NEAR(c1, 4.0 / 9.0, 1e-15);
      EXPECT_NEAR(c2, 5.0 / 9.0, 1e-15);
      EXPECT_NEAR(d, 2.0 / 3.0, 1e-15);
      EXPECT_STREQ(lam, "inf");
    }
  }
  EXPECT_EQ(rows, 9);
  EXPECT_TRUE(saw_zero);

  const auto one = run("sweep --n 3 --alpha-min 0.1 --alpha-max 0.2 --steps 1");
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(std::count(one.out.begin(), one.out.end(), '\n'), 2);

  EXPECT_EQ(run("sweep --n 2 --alpha-min 0 --alpha-max 1 --steps 3 --out /nonexistent_dir/x.csv").code, 3);
  EXPECT_EQ(run("sweep --n 2 --alpha-min 1 --alpha-max 0 --steps 3").code, 2);
}

TEST(CliExtremalVerify, RoundTripsAchieveBounds) {
  const auto g = scratch("grunbaum.json");
  ASSERT_EQ(run("extremal --kind grunbaum-cone --n 3 --out " + g.string()).code, 0);
  auto r = run("verify --body " + g.string() + " --alpha 0");
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  bool equality = false;
  while (std::getline(lines, line)) {
    const auto rep = report_from_json(line);
    EXPECT_TRUE(rep.pass);
    equality = equality || (rep.context.check == "theorem4" && rep.equality == Equality::kLower);
    ++count;
  }
  EXPECT_EQ(count, 5);
  EXPECT_TRUE(equality);

  struct Case {
    std::string args;
    double alpha;
    const char* check;
  };
  for (const Case& c : {Case{"--kind lower --n 3 --alpha 0.2", 0.2, "theorem4"},
                        Case{"--kind upper --n 3 --alpha 0.7", 0.7, "theorem4"},
                        Case{"--kind t5-cone --n 4 --alpha 0.1", 0.1, "theorem5"},
                        Case{"--kind reflected-cone --n 2", 0.0, "theorem4"}}) {
    const auto path = scratch("ext.json");
    ASSERT_EQ(run("extremal " + c.args + " --out " + path.string()).code, 0) << c.args;
    const auto v = run("verify --body " + path.string() + " --alpha " + std::to_string(c.alpha));
    EXPECT_EQ(v.code, 0) << c.args;
    std::istringstream ls(v.out);
    bool attained = false;
    while (std::getline(ls, line)) {
      const auto rep = report_from_json(line);
      if (rep.context.check == c.check) attained = rep.equality != Equality::kNone;
    }
    EXPECT_TRUE(attained) << c.args;
  }

  EXPECT_EQ(run("extremal --kind double-cone --n 3 --beta 0.4").code, 0);
  EXPECT_EQ(run("extremal --kind truncated-cone --n 3 --lambda 0.5").code, 0);
  EXPECT_EQ(run("extremal --kind truncated-cone --n 3").code, 2);
  EXPECT_EQ(run("extremal --kind pyramid --n 3").code, 2);
  EXPECT_EQ(run("extremal --kind lower --n 2 --alpha 0.9").code, 2);
  EXPECT_EQ(run("extremal --kind t5-cone --n 3 --alpha 1").code, 0);
}

TEST(CliVerify, Errors) {
  const auto bad = scratch("bad.json");
  write(bad, R"({"type":"profile","dim":3,"knots":[[0,0],[0.5,0.2],[1,1]]})");
  EXPECT_EQ(run("verify --body " + bad.string() + " --alpha 0").code, 2);
  const auto garbage = scratch("garbage.json");
  write(garbage, "not json");
  EXPECT_EQ(run("verify --body " + garbage.string() + " --alpha 0").code, 2);
  EXPECT_EQ(run("verify --body /nonexistent.json --alpha 0").code, 2);
  const auto cube = scratch("cube.json");
  write(cube, kCubeJson);
  EXPECT_EQ(run("verify --body " + cube.string() + " --alpha 0 --direction 0,0,0").code, 2);
  EXPECT_EQ(run("verify --body " + cube.string() + " --alpha 0 --direction 1,1").code, 2);
  EXPECT_EQ(run("verify --body " + cube.string() + " --alpha 3.5").code, 2);
}

TEST(CliVerify, FuzzBodyWithMonteCarloPasses) {
  const auto path = scratch("fuzz.json");
  write(path, body_to_json(random_polytope(3, 16, 2024)));
  const auto args = "verify --body " + path.string() + " --alpha 0.4 --direction 1,2,-1 --mc-samples 100000 --seed 9";
  const auto a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("monte_carlo"), std::string::npos);
}

TEST(CliSymmetrize, Examples) {
  const auto cube = scratch("cube.json"), out = scratch("cube_sym.json");
  write(cube, kCubeJson);
  ASSERT_EQ(run("symmetrize --body " + cube.string() + " --direction 0,0,1 --knot-budget 4 --out " + out.string()).code,
            0);
  const auto prof = std::get<AnalyticProfile>(body_from_json(slurp(out)));
  for (const auto& k : prof.knots()) EXPECT_NEAR(k.r, 1.0 / std::sqrt(M_PI), 1e-15);
  EXPECT_NEAR(volume(prof), 1.0, 1e-9);

  const auto prof_in = scratch("prof.json"), prof_out = scratch("prof_sym.json");
  const auto p = random_profile(4, 5, 1);
  write(prof_in, body_to_json(p));
  ASSERT_EQ(run("symmetrize --body " + prof_in.string() + " --out " + prof_out.string()).code, 0);
  EXPECT_EQ(std::get<AnalyticProfile>(body_from_json(slurp(prof_out))).knots(), p.knots());

  const auto tri = scratch("tri.json");
  const auto tp = random_polytope(2, 8, 5);
  write(tri, body_to_json(tp));
  const auto r = run("symmetrize --body " + tri.string() + " --direction 0.3,0.4");
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(volume(body_from_json(r.out)), volume(tp), 1e-9 * volume(tp));

  EXPECT_EQ(run("symmetrize --body /nonexistent.json").code, 2);
}
