// Deterministic JSON emission: object keys sorted (nlohmann default map),
// big integers and rationals as decimal strings, reals fixed at 17
// significant digits, so identical flags give byte-identical output.
#pragma once

#include <json.hpp>

#include "support/intutil.hpp"
#include "support/real.hpp"

namespace edsp {

using Json = nlohmann::json;

inline Json json_int(const Int& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

inline Json json_rat(const Rat& v) {
  if (v.get_den() == 1) return json_int(Int(v.get_num()));
  return Json(v.get_str());
}

inline Json json_real(const Real& v) { return Json(v.str(17)); }

std::string dump_sorted(const Json& j);

}  // namespace edsp
