// cutgeom: constants, sweeps, extremal bodies, verification and symmetrization.
//
// Exit codes: 0 success, 1 a check failed, 2 bad input (parse or range),
// 3 output path not writable.

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "cutgeom/constants.hpp"
#include "cutgeom/extremal.hpp"
#include "cutgeom/io.hpp"
#include "cutgeom/measure.hpp"
#include "cutgeom/verify.hpp"

using namespace cutgeom;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kBadInput = 2, kUnwritable = 3 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct WriteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::optional<std::string>& path, const std::string& text) {
  if (!path) {
    std::cout << text;
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out || !(out << text) || !out.flush()) throw WriteError("cannot write " + *path);
}

/// Comma-separated reals, normalized; defaults to the first axis.
Direction parse_direction(const std::optional<std::string>& text, int n) {
  if (!text) return Direction::axis(n);
  std::vector<double> v;
  std::stringstream ss(*text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double x = 0.0;
    const char* b = item.data();
    const char* e = b + item.size();
    while (b < e && *b == ' ') ++b;
    const auto res = std::from_chars(b, e, x);
    if (res.ec != std::errc() || res.ptr != e) throw InputError("bad direction component '" + item + "'");
    v.push_back(x);
  }
  if (static_cast<int>(v.size()) != n) {
    throw InputError("direction has " + std::to_string(v.size()) + " components, body dimension is " +
                     std::to_string(n));
  }
  return Direction::normalized(std::move(v));
}

Body load_body(const std::string& path) {
  Body body = body_from_json(read_file(path));
  const auto diags = validate(body);
  if (!diags.empty()) {
    std::string msg = "invalid body:";
    for (const auto& d : diags) msg += "\n  " + d.invariant + ": " + d.detail;
    throw InputError(msg);
  }
  return body;
}

int cmd_constants(int n, double alpha, double tol) {
  const auto b = bounds(alpha, n, tol);
  nlohmann::json j = {{"n", n},
                      {"alpha", alpha},
                      {"c1", b.c1},
                      {"c2", b.c2.value},
                      {"c2_argmax_lambda", std::isfinite(b.c2.argmax_lambda) ? nlohmann::json(b.c2.argmax_lambda)
                                                                             : nlohmann::json(nullptr)},
                      {"d", b.d},
                      {"method", to_string(b.c2.method)}};
  std::cout << j.dump() << "\n";
  return kOk;
}

int cmd_sweep(int n, double lo, double hi, int steps, const std::optional<std::string>& out, double tol) {
  if (!(lo > -1.0 && lo < hi && hi < n)) throw std::domain_error("need -1 < alpha-min < alpha-max < n");
  if (steps < 1) throw std::domain_error("steps must be >= 1");
  std::string csv = "alpha,c1,c2,d,lambda0\n";
  for (int i = 0; i < steps; ++i) {
    const double alpha = steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
    const auto b = bounds(alpha, n, tol);
    const double lambda0 = b.c2.method == C2Method::kClosedFormNegAlpha
                               ? std::numeric_limits<double>::infinity()
                               : b.c2.argmax_lambda;
    csv += fmt(alpha) + "," + fmt(b.c1) + "," + fmt(b.c2.value) + "," + fmt(b.d) + "," + fmt(lambda0) + "\n";
  }
  write_output(out, csv);
  return kOk;
}

int cmd_verify(const std::string& body_path, double alpha, const std::optional<std::string>& dir_text,
               long samples, std::uint64_t seed, double tol) {
  const Body body = load_body(body_path);
  const int n = dimension(body);
  const Direction dir = parse_direction(dir_text, n);
  if (is_profile(body) && std::abs(std::abs(dir[0]) - 1.0) > 1e-12) {
    throw InputError("profile bodies can only be cut along their axis");
  }
  const CutSpec cut(dir, alpha);
  std::vector<VerifyReport> reports{check_theorem4(body, cut, tol), check_theorem5(body, cut, tol),
                                    check_minkowski_radon(body, dir, tol),
                                    check_concavity(body, dir, ConcavityTarget::kSection, 257, tol),
                                    check_concavity(body, dir, ConcavityTarget::kCutVolume, 257, tol)};
  if (samples > 0) reports.push_back(check_theorem4_mc(body, cut, samples, seed));
  bool ok = true;
  for (const auto& r : reports) {
    std::cout << report_to_json(r) << "\n";
    ok = ok && r.pass;
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_extremal(const std::string& kind, int n, std::optional<double> alpha, std::optional<double> beta,
                 std::optional<double> lambda, const std::optional<std::string>& out, double tol) {
  auto need = [&kind](const std::optional<double>& v, const char* flag) {
    if (!v) throw InputError("kind '" + kind + "' needs " + flag);
    return *v;
  };
  AnalyticProfile body = grunbaum_cone(std::max(n, 2));
  if (kind == "grunbaum-cone") {
    body = grunbaum_cone(n);
  } else if (kind == "reflected-cone") {
    body = reflected_grunbaum_cone(n);
  } else if (kind == "double-cone") {
    body = double_cone(beta ? *beta : beta0(need(alpha, "--beta or --alpha"), n), n);
  } else if (kind == "truncated-cone") {
    body = truncated_cone(need(lambda, "--lambda"), n);
  } else if (kind == "lower") {
    body = lower_extremizer(need(alpha, "--alpha"), n);
  } else if (kind == "upper") {
    body = upper_extremizer(need(alpha, "--alpha"), n, tol);
  } else if (kind == "t5-cone") {
    const double a = need(alpha, "--alpha");
    if (a > 1.0 / n && a < n) {
      std::cerr << "note: for alpha > 1/n the section bound is 0 and no extremizer is unique; "
                   "emitting the reflected cone\n";
      body = reflected_grunbaum_cone(n);
    } else {
      body = theorem5_equality_cone(a, n);
    }
  } else {
    throw InputError("unknown kind '" + kind + "'");
  }
  write_output(out, body_to_json(body) + "\n");
  return kOk;
}

int cmd_symmetrize(const std::string& body_path, const std::optional<std::string>& dir_text,
                   const std::optional<std::string>& out, int knot_budget) {
  const Body body = load_body(body_path);
  const Direction dir = parse_direction(dir_text, dimension(body));
  Body sym = schwarz_symmetral(body, dir);
  if (const auto* q = std::get_if<NumericProfile>(&sym)) sym = resample_profile(*q, knot_budget);
  write_output(out, body_to_json(sym) + "\n");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cut-volume and section bounds for convex bodies"};
  app.require_subcommand(1);

  int n = 0, steps = 0, knot_budget = 64;
  double alpha = 0.0, alpha_min = 0.0, alpha_max = 0.0, tol = kExactTolerance;
  std::optional<double> alpha_opt, beta, lambda;
  std::optional<std::string> out, direction;
  std::string body_path, kind;
  long samples = 0;
  std::uint64_t seed = 0;

  auto* constants = app.add_subcommand("constants", "print c1, c2 and d as JSON");
  constants->add_option("--n", n, "dimension")->required();
  constants->add_option("--alpha", alpha, "cut parameter")->required();
  constants->add_option("--tol", tol, "optimizer tolerance");

  auto* sweep = app.add_subcommand("sweep", "tabulate the constants over an alpha range as CSV");
  sweep->add_option("--n", n)->required();
  sweep->add_option("--alpha-min", alpha_min)->required();
  sweep->add_option("--alpha-max", alpha_max)->required();
  sweep->add_option("--steps", steps)->required();
  sweep->add_option("--out", out, "CSV path (default stdout)");
  sweep->add_option("--tol", tol);

  auto* verify = app.add_subcommand("verify", "check a body against the bounds; JSON lines");
  verify->add_option("--body", body_path)->required();
  verify->add_option("--alpha", alpha)->required();
  verify->add_option("--direction", direction, "comma-separated, normalized on input");
  verify->add_option("--mc-samples", samples, "Monte Carlo samples (0 = exact only)");
  verify->add_option("--seed", seed);
  verify->add_option("--tol", tol);

  auto* extremal = app.add_subcommand("extremal", "write an extremal body as JSON");
  extremal->add_option("--kind", kind)
      ->required()
      ->check(CLI::IsMember(
          {"grunbaum-cone", "reflected-cone", "double-cone", "truncated-cone", "lower", "upper", "t5-cone"}));
  extremal->add_option("--n", n)->required();
  extremal->add_option("--alpha", alpha_opt);
  extremal->add_option("--beta", beta, "double-cone base height");
  extremal->add_option("--lambda", lambda, "truncated-cone homothety coefficient");
  extremal->add_option("--out", out);
  extremal->add_option("--tol", tol);

  auto* symmetrize = app.add_subcommand("symmetrize", "Schwarz symmetral as a profile body");
  symmetrize->add_option("--body", body_path)->required();
  symmetrize->add_option("--direction", direction);
  symmetrize->add_option("--out", out);
  symmetrize->add_option("--knot-budget", knot_budget, "extra knots when resampling");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*constants) return cmd_constants(n, alpha, tol);
    if (*sweep) return cmd_sweep(n, alpha_min, alpha_max, steps, out, tol);
    if (*verify) return cmd_verify(body_path, alpha, direction, samples, seed, tol);
    if (*extremal) return cmd_extremal(kind, n, alpha_opt, beta, lambda, out, tol);
    if (*symmetrize) return cmd_symmetrize(body_path, direction, out, knot_budget);
  } catch (const WriteError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnwritable;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
