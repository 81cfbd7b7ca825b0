#pragma once

// JSON renderings. Big integers and rationals are always strings.

#include "germdyn/bipoly.hpp"
#include "germdyn/bounds.hpp"
#include "germdyn/cantor.hpp"
#include "germdyn/proximity.hpp"
#include "germdyn/recurrence.hpp"

#include <json.hpp>

namespace germdyn {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& v);
Json to_json(const Rational& v);
/// {"num": "<decimal>", "exp2": k}
Json to_json(const Dyadic& d);
/// [{"index", "coefficient"}, ...], zero coefficients included.
Json to_json(const USeries<Dyadic>& s);
/// [{"i", "j", "coefficient"}, ...]
Json to_json(const BiPoly& p);
/// {"kind": "exact" | "at_least" | "infinite", "value"}
Json to_json(const Multiplicity& m);
/// {n, M, nu, mu_digits}
Json to_json(const Witness& w);
/// {order, coeffs, onset, char_poly, lead}
Json to_json(const RecurrenceModel& m);
Json to_json(const RootBracket& b);
Json to_json(const IntegerMatrix& m);
Json to_json(const RationalMatrix& m);
Json to_json(const std::vector<Integer>& v);
Json to_json(const std::vector<Rational>& v);

}  // namespace germdyn
