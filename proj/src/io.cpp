#include "cutgeom/io.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>

#include "cutgeom/measure.hpp"

namespace cutgeom {

using nlohmann::json;

namespace {

template <class E>
E enum_from(const std::string& s, std::initializer_list<E> values) {
  for (E e : values) {
    if (s == to_string(e)) return e;
  }
  throw ParseError("unknown enum value '" + s + "'");
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> number_or_null(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}

}  // namespace

std::string body_to_json(const Body& body) {
  json j;
  if (const auto* p = std::get_if<Polytope>(&body)) {
    j["type"] = "polytope";
    j["dim"] = p->dim();
    j["vertices"] = p->vertices();
  } else if (const auto* a = std::get_if<AnalyticProfile>(&body)) {
    j["type"] = "profile";
    j["dim"] = a->dim();
    json knots = json::array();
    for (const auto& k : a->knots()) knots.push_back({k.t, k.r});
    j["knots"] = std::move(knots);
  } else {
    throw std::invalid_argument("numeric profiles must be resampled before serialization");
  }
  return j.dump();
}

Body body_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    const auto type = j.at("type").get<std::string>();
    const int dim = j.at("dim").get<int>();
    if (type == "polytope") {
      return Polytope(dim, j.at("vertices").get<std::vector<Point>>());
    }
    if (type == "profile") {
      std::vector<Knot> knots;
      for (const auto& k : j.at("knots")) {
        if (!k.is_array() || k.size() != 2) throw ParseError("a knot must be a [t, r] pair");
        knots.push_back({k[0].get<double>(), k[1].get<double>()});
      }
      return AnalyticProfile(dim, std::move(knots));
    }
    throw ParseError("unknown body type '" + type + "'");
  } catch (const json::exception& e) {
    throw ParseError(std::string("body JSON: ") + e.what());
  }
}

AnalyticProfile resample_profile(const NumericProfile& p, int knot_budget) {
  if (knot_budget < 0) throw std::invalid_argument("knot budget must be nonnegative");
  std::vector<double> ts = p.breakpoints();
  for (int i = 1; i <= knot_budget; ++i) {
    ts.push_back(p.t_min() + (p.t_max() - p.t_min()) * i / (knot_budget + 1));
  }
  std::sort(ts.begin(), ts.end());
  const double eps = 1e-12 * std::max(1.0, p.t_max() - p.t_min());
  ts.erase(std::unique(ts.begin(), ts.end(), [eps](double a, double b) { return b - a <= eps; }), ts.end());
  std::vector<Knot> knots;
  knots.reserve(ts.size());
  for (double t : ts) knots.push_back({t, p.radius(t)});
  return AnalyticProfile(p.dim(), std::move(knots));
}

std::string report_to_json(const VerifyReport& r) {
  json ctx = {{"check", r.context.check},
              {"body", r.context.body},
              {"direction", r.context.direction},
              {"alpha", optional_number(r.context.alpha)},
              {"seed", r.context.seed ? json(*r.context.seed) : json(nullptr)}};
  json j = {{"quantity", to_string(r.quantity)},
            {"measured", r.measured},
            {"lower", optional_number(r.lower)},
            {"upper", optional_number(r.upper)},
            {"tolerance", r.tolerance},
            {"backend", to_string(r.backend)},
            {"pass", r.pass},
            {"equality", to_string(r.equality)},
            {"context", std::move(ctx)}};
  return j.dump();
}

VerifyReport report_from_json(const std::string& line) {
  try {
    const json j = json::parse(line);
    VerifyReport r;
    r.quantity = enum_from<Quantity>(j.at("quantity").get<std::string>(),
                                     {Quantity::kCutRatio, Quantity::kSectionRatio, Quantity::kSupportRatio,
                                      Quantity::kConcavityA, Quantity::kConcavityV,
                                      Quantity::kSymmetralConsistency});
    r.measured = j.at("measured").get<double>();
    r.lower = number_or_null(j, "lower");
    r.upper = number_or_null(j, "upper");
    r.tolerance = j.at("tolerance").get<double>();
    r.backend = enum_from<CheckBackend>(j.at("backend").get<std::string>(),
                                        {CheckBackend::kExact, CheckBackend::kMonteCarlo});
    r.pass = j.at("pass").get<bool>();
    r.equality = enum_from<Equality>(j.at("equality").get<std::string>(),
                                     {Equality::kNone, Equality::kLower, Equality::kUpper});
    const auto& c = j.at("context");
    r.context.check = c.at("check").get<std::string>();
    r.context.body = c.at("body").get<std::string>();
    r.context.direction = c.at("direction").get<std::vector<double>>();
    r.context.alpha = number_or_null(c, "alpha");
    if (c.contains("seed") && !c.at("seed").is_null()) r.context.seed = c.at("seed").get<std::uint64_t>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("report JSON: ") + e.what());
  }
}

}  // namespace cutgeom
