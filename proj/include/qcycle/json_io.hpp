#pragma once

#include "qcycle/charseries.hpp"
#include "qcycle/cycles.hpp"
#include "qcycle/orbit.hpp"

#include <json.hpp>

namespace qc {

using json = nlohmann::ordered_json;

struct JsonError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// [[scalar, {var: exponent, ...}], ...]
json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const json& j);
// a bare polynomial, or {"num": poly, "den": [[poly, multiplicity], ...]}
json ratfn_to_json(const RationalFn& f);
RationalFn ratfn_from_json(const json& j);

// {"n", "l", "terms": [{"subset": [...], "coeff": ...}]}
json wedge_to_json(const WedgeElem& p);
WedgeElem wedge_from_json(const json& j);

// {"weight", "window": [n_min, n_max], "components": [{"n", "element"}]}
json tower_to_json(int weight, const std::map<int, WedgeElem>& comps);
std::pair<int, std::map<int, WedgeElem>> tower_from_json(const json& j);

json series_to_json(const TruncSeries& s);
json qz_to_json(const QZSeries& s);
json dims_to_json(const OrbitReport& r);
std::map<std::pair<int, int>, int> dims_from_json(const json& j);

}  // namespace qc
