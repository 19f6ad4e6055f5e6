#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cutgeom/constants.hpp"
#include "cutgeom/extremal.hpp"
#include "cutgeom/io.hpp"
#include "cutgeom/measure.hpp"
#include "cutgeom/oracle.hpp"
#include "cutgeom/verify.hpp"

namespace py = pybind11;
using namespace cutgeom;

namespace {

// Body is a variant of classes without default constructors, which pybind11's
// variant caster cannot hold, so conversion happens explicitly here.
Body to_body(const py::handle& h) {
  if (py::isinstance<Polytope>(h)) return h.cast<Polytope>();
  if (py::isinstance<AnalyticProfile>(h)) return h.cast<AnalyticProfile>();
  if (py::isinstance<NumericProfile>(h)) return h.cast<NumericProfile>();
  throw py::type_error("expected Polytope, AnalyticProfile or NumericProfile");
}

py::object from_body(const Body& b) {
  return std::visit([](const auto& x) { return py::cast(x); }, b);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cut-volume and section bounds for convex bodies";

  // ---------------------------------------------------------------- bodies
  py::class_<Direction>(m, "Direction")
      .def(py::init<std::vector<double>>())
      .def_static("normalized", &Direction::normalized)
      .def_static("axis", &Direction::axis, py::arg("n"), py::arg("i") = 0, py::arg("negative") = false)
      .def_property_readonly("dim", &Direction::dim)
      .def_property_readonly("coords", &Direction::coords)
      .def("__neg__", [](const Direction& d) { return -d; })
      .def("__repr__", [](const Direction& d) {
        std::string s = "Direction([";
        for (std::size_t i = 0; i < d.coords().size(); ++i) s += (i ? ", " : "") + std::to_string(d.coords()[i]);
        return s + "])";
      });

  py::class_<Polytope>(m, "Polytope")
      .def(py::init<int, std::vector<Point>>(), py::arg("dim"), py::arg("vertices"))
      .def_property_readonly("dim", &Polytope::dim)
      .def_property_readonly("vertices", &Polytope::vertices)
      .def("__repr__", [](const Polytope& p) { return describe(p); });

  py::class_<AnalyticProfile>(m, "AnalyticProfile")
      .def(py::init([](int dim, const std::vector<std::pair<double, double>>& knots) {
             std::vector<Knot> k;
             for (const auto& [t, r] : knots) k.push_back({t, r});
             return AnalyticProfile(dim, std::move(k));
           }),
           py::arg("dim"), py::arg("knots"))
      .def_property_readonly("dim", &AnalyticProfile::dim)
      .def_property_readonly("knots",
                             [](const AnalyticProfile& a) {
                               std::vector<std::pair<double, double>> out;
                               for (const auto& k : a.knots()) out.emplace_back(k.t, k.r);
                               return out;
                             })
      .def("radius", &AnalyticProfile::radius)
      .def("__repr__", [](const AnalyticProfile& a) { return describe(a); });

  py::class_<NumericProfile>(m, "NumericProfile")
      .def(py::init<int, double, double, NumericProfile::AreaFn, std::vector<double>>(), py::arg("dim"),
           py::arg("t_min"), py::arg("t_max"), py::arg("area"), py::arg("breakpoints") = std::vector<double>{})
      .def_property_readonly("dim", &NumericProfile::dim)
      .def_property_readonly("t_min", &NumericProfile::t_min)
      .def_property_readonly("t_max", &NumericProfile::t_max)
      .def("area", &NumericProfile::area)
      .def("__repr__", [](const NumericProfile& q) { return describe(q); });

  m.def("unit_ball_volume", &unit_ball_volume);
  m.def("translate", [](py::object b, const std::vector<double>& v) { return from_body(translate(to_body(b), v)); });
  m.def("dilate", [](py::object b, double f) { return from_body(dilate(to_body(b), f)); });
  m.def("reflect", [](py::object b) { return from_body(reflect(to_body(b))); });
  m.def("validate", [](py::object b) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& d : validate(to_body(b))) out.emplace_back(d.invariant, d.detail);
    return out;
  });

  // ---------------------------------------------------------------- measure
  m.def("support", [](py::object b, const Direction& d) { return support(to_body(b), d); });
  m.def("section_area", [](py::object b, const Direction& d, double t) { return section_area(to_body(b), d, t); });
  m.def("cut_volume", [](py::object b, const Direction& d, double t) { return cut_volume(to_body(b), d, t); });
  m.def("volume", [](py::object b) { return volume(to_body(b)); });
  m.def("centroid_coordinate", [](py::object b, const Direction& d) { return centroid_coordinate(to_body(b), d); });
  m.def("centroid", [](py::object b) { return centroid(to_body(b)); });
  m.def("max_section", [](py::object b, const Direction& d) {
    const auto s = max_section(to_body(b), d);
    return std::make_pair(s.t0, s.area);
  });
  m.def("schwarz_symmetral",
        [](py::object b, const Direction& d) { return from_body(schwarz_symmetral(to_body(b), d)); });

  // ---------------------------------------------------------------- constants
  py::class_<C2Result>(m, "C2Result")
      .def_readonly("value", &C2Result::value)
      .def_readonly("argmax_z", &C2Result::argmax_z)
      .def_readonly("argmax_lambda", &C2Result::argmax_lambda)
      .def_property_readonly("method", [](const C2Result& r) { return std::string(to_string(r.method)); });

  m.def("grunbaum_bound", &grunbaum_bound);
  m.def("makai_martini_bound", &makai_martini_bound);
  m.def("c1", &c1, py::arg("alpha"), py::arg("n"));
  m.def("c2", &c2, py::arg("alpha"), py::arg("n"), py::arg("tol") = 1e-9);
  m.def("c2_numeric", &c2_numeric, py::arg("alpha"), py::arg("n"), py::arg("tol") = 1e-9);
  m.def("c2_closed_n2", &c2_closed_n2);
  m.def("d_const", &d_const, py::arg("alpha"), py::arg("n"));
  m.def("g_sub_l", &g_sub_l, py::arg("z"), py::arg("alpha"), py::arg("n"));
  m.def("phi", &phi, py::arg("z"), py::arg("alpha"), py::arg("n"));
  m.def("beta0", &beta0, py::arg("alpha"), py::arg("n"));
  m.def("psi", &psi, py::arg("beta"), py::arg("alpha"), py::arg("n"));

  // ---------------------------------------------------------------- extremal
  m.def("grunbaum_cone", &grunbaum_cone);
  m.def("reflected_grunbaum_cone", &reflected_grunbaum_cone);
  m.def("truncated_cone", &truncated_cone, py::arg("lam"), py::arg("n"));
  m.def("double_cone", &double_cone, py::arg("beta"), py::arg("n"));
  m.def("lower_extremizer", &lower_extremizer, py::arg("alpha"), py::arg("n"));
  m.def("upper_extremizer", &upper_extremizer, py::arg("alpha"), py::arg("n"), py::arg("tol") = 1e-9);
  m.def("theorem5_equality_cone", &theorem5_equality_cone, py::arg("alpha"), py::arg("n"));

  // ---------------------------------------------------------------- oracle
  py::class_<McEstimate>(m, "McEstimate")
      .def_readonly("value", &McEstimate::value)
      .def_readonly("std_error", &McEstimate::std_error)
      .def_readonly("samples", &McEstimate::samples)
      .def_readonly("seed", &McEstimate::seed);
  m.def("mc_volume",
        [](py::object b, long s, std::uint64_t seed) {
          return mc_volume(to_body(b), s, seed);
        }, py::arg("body"), py::arg("samples"), py::arg("seed"));
  m.def("mc_cut_volume",
        [](py::object b, const Direction& d, double t, long s, std::uint64_t seed) {
          return mc_cut_volume(to_body(b), d, t, s, seed);
        }, py::arg("body"), py::arg("direction"), py::arg("t"), py::arg("samples"),
        py::arg("seed"));
  m.def("mc_centroid_coordinate",
        [](py::object b, const Direction& d, long s, std::uint64_t seed) {
          return mc_centroid_coordinate(to_body(b), d, s, seed);
        }, py::arg("body"), py::arg("direction"),
        py::arg("samples"), py::arg("seed"));
  m.def("random_polytope", &random_polytope, py::arg("n"), py::arg("num_points"), py::arg("seed"));
  m.def("random_profile", &random_profile, py::arg("n"), py::arg("num_knots"), py::arg("seed"));

  // ---------------------------------------------------------------- verify
  py::class_<CutSpec>(m, "CutSpec")
      .def(py::init<Direction, double>(), py::arg("direction"), py::arg("alpha"))
      .def_property_readonly("direction", &CutSpec::direction)
      .def_property_readonly("alpha", &CutSpec::alpha);

  py::class_<VerifyReport>(m, "VerifyReport")
      .def_property_readonly("quantity", [](const VerifyReport& r) { return std::string(to_string(r.quantity)); })
      .def_readonly("measured", &VerifyReport::measured)
      .def_readonly("lower", &VerifyReport::lower)
      .def_readonly("upper", &VerifyReport::upper)
      .def_readonly("tolerance", &VerifyReport::tolerance)
      .def_property_readonly("backend", [](const VerifyReport& r) { return std::string(to_string(r.backend)); })
      .def_readonly("passed", &VerifyReport::pass)
      .def_property_readonly("equality", [](const VerifyReport& r) { return std::string(to_string(r.equality)); })
      .def_property_readonly("check", [](const VerifyReport& r) { return r.context.check; })
      .def("to_json", &report_to_json);

  m.def("center", [](py::object b) { return from_body(center(to_body(b))); });
  m.def("cut_ratio", [](py::object b, const CutSpec& c) { return cut_ratio(to_body(b), c); });
  m.def("section_ratio", [](py::object b, const CutSpec& c) { return section_ratio(to_body(b), c); });
  m.def("check_theorem4",
        [](py::object b, const CutSpec& c, double tol) {
          return check_theorem4(to_body(b), c, tol);
        }, py::arg("body"), py::arg("cut"), py::arg("tol") = kExactTolerance);
  m.def("check_theorem5",
        [](py::object b, const CutSpec& c, double tol) {
          return check_theorem5(to_body(b), c, tol);
        }, py::arg("body"), py::arg("cut"), py::arg("tol") = kExactTolerance);
  m.def("check_grunbaum",
        [](py::object b, const Direction& d, double tol) {
          return check_grunbaum(to_body(b), d, tol);
        }, py::arg("body"), py::arg("direction"),
        py::arg("tol") = kExactTolerance);
  m.def("check_minkowski_radon",
        [](py::object b, const Direction& d, double tol) {
          return check_minkowski_radon(to_body(b), d, tol);
        }, py::arg("body"), py::arg("direction"),
        py::arg("tol") = kExactTolerance);
  m.def(
      "check_concavity",
      [](py::object b, const Direction& d, const std::string& which, int grid, double tol) {
        if (which != "A" && which != "V") throw py::value_error("which must be 'A' or 'V'");
        const auto target = which == "A" ? ConcavityTarget::kSection : ConcavityTarget::kCutVolume;
        return check_concavity(to_body(b), d, target, grid, tol);
      },
      py::arg("body"), py::arg("direction"), py::arg("which"), py::arg("grid_points") = 257,
      py::arg("tol") = kExactTolerance);
  m.def("check_theorem4_mc",
        [](py::object b, const CutSpec& c, long s, std::uint64_t seed) {
          return check_theorem4_mc(to_body(b), c, s, seed);
        }, py::arg("body"), py::arg("cut"), py::arg("samples"),
        py::arg("seed"));
  m.def(
      "fuzz_suite",
      [](const std::vector<int>& dims, int bodies_per_dim, const std::string& kind, std::uint64_t seed,
         int alphas_per_body, long mc_samples) {
        if (kind != "profile" && kind != "polytope") throw py::value_error("kind must be 'profile' or 'polytope'");
        FuzzConfig c;
        c.dims = dims;
        c.bodies_per_dim = bodies_per_dim;
        c.kind = kind == "profile" ? FuzzBodyKind::kProfile : FuzzBodyKind::kPolytope;
        c.seed = seed;
        c.alphas_per_body = alphas_per_body;
        c.mc_samples = mc_samples;
        const auto r = fuzz_suite(c);
        py::dict out;
        out["total"] = r.total;
        out["passed"] = r.passed;
        out["worst_margin"] = r.worst_margin;
        out["failure_seeds"] = [&r] {
          std::vector<std::uint64_t> s;
          for (const auto& f : r.failures) s.push_back(f.body_seed);
          return s;
        }();
        out["rng"] = r.rng;
        return out;
      },
      py::arg("dims"), py::arg("bodies_per_dim"), py::arg("kind") = "profile", py::arg("seed") = 0,
      py::arg("alphas_per_body") = 3, py::arg("mc_samples") = 0);

  // ---------------------------------------------------------------- io
  m.def("body_to_json", [](py::object b) { return body_to_json(to_body(b)); });
  m.def("body_from_json", [](const std::string& s) { return from_body(body_from_json(s)); });
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
}
