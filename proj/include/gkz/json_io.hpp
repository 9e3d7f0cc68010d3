// JSON readers/writers for every type the CLI exchanges. Formats:
//   curve          {"k": [1,3], "d": 4}
//   exponent       [a1, a2]
//   polynomial     {"support": [0,1,3,4], "terms": [{"e": [-1,2,0,0], "c": "-1/2"}, ...]}
//   point          [[re, im], ...] (plain numbers mean real), support order
//   classification {"alpha": ..., "tag": ..., "rank": ..., "rational_dim": ..., "witness": ...}
#pragma once

#include <json.hpp>

#include "gkz/numeric.hpp"

namespace gkz {

using Json = nlohmann::ordered_json;

Json curve_to_json(const CurveMatrix& A);
CurveMatrix curve_from_json(const Json& j);

Json exponent_to_json(Exponent alpha);
Exponent exponent_from_json(const Json& j);

// Terms in canonical (ascending lexicographic) order; rationals as "p/q" with
// the "/q" omitted when q == 1.
Json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);

Json point_to_json(const Point& x);
Point point_from_json(const Json& j, const CurveMatrix& A);

Json classification_to_json(const CurveMatrix& A, Exponent alpha);
Json cm_to_json(const CurveMatrix& A);
Json basis_to_json(const CurveMatrix& A, Exponent alpha);

}  // namespace gkz
