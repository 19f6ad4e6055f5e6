#pragma once

#include <stdexcept>
#include <string>

#include "cutgeom/bodies.hpp"
#include "cutgeom/verify.hpp"

namespace cutgeom {

/// Malformed JSON or a document that does not describe a body/report.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Body JSON:
//   {"type":"polytope","dim":3,"vertices":[[x,y,z],...]}
//   {"type":"profile","dim":n,"knots":[[t,r],...]}
// Reals are written in shortest round-trip form.

/// Numeric profiles are not serializable; resample them first with
/// `resample_profile`. Throws std::invalid_argument for them.
std::string body_to_json(const Body& body);
/// Parses without validating convexity; call `validate` on the result.
Body body_from_json(const std::string& text);

/// Piecewise-linear radius through the body's breakpoints plus `knot_budget`
/// evenly spaced heights. Exact at every knot; the interpolant of a concave
/// radius is concave, so the result is a valid analytic profile.
AnalyticProfile resample_profile(const NumericProfile& p, int knot_budget);

/// One line, no trailing newline.
std::string report_to_json(const VerifyReport& report);
VerifyReport report_from_json(const std::string& line);

}  // namespace cutgeom
