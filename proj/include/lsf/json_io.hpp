#pragma once

#include <json.hpp>

#include "lsf/closedform.hpp"
#include "lsf/lorentz.hpp"
#include "lsf/symfunc.hpp"

namespace lsf {

// Key order is fixed so identical values serialize to identical bytes.
using Json = nlohmann::ordered_json;

// {"degree": d, "basis": "m"|"mtilde"|"s"|"ns", "coeffs": {"[2,1,1]": "5/3"}}
Json to_json(const SymPoly& f);
SymPoly sympoly_from_json(const Json& j);

// {"lorentzian": bool, "failure": {"kind": ..., "witness": ...} | null,
//  "opCount": n}. Minor index sets and exchange coordinates are 1-based.
Json to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);

Json to_json(const RegionVerdict& r);

}  // namespace lsf
