#pragma once

// JSON encodings of the external interfaces. Polynomials serialize as an
// array of {"t": int, "q": int, "c": decimal string} sorted by (t, q)
// ascending; coefficients travel as strings so no width is ever lost.

#include "json.hpp"

#include "wreath/bipoly.hpp"
#include "wreath/mahonian.hpp"

namespace wreath {

nlohmann::json poly_to_json(const BiPoly& p);
BiPoly poly_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerificationReport& report);

}  // namespace wreath
