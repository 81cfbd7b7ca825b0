#pragma once

// Text literals for polynomials, maps, ideals and proximity charts.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary | implicit-factor)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' integer)?
//   atom   := number | 'x' | 'y' | '(' expr ')'
//
// Numbers are integers or decimals; '/' only divides by nonzero constants.

#include "germdyn/bipoly.hpp"
#include "germdyn/intersect.hpp"
#include "germdyn/monomial.hpp"
#include "germdyn/proximity.hpp"

#include <string_view>
#include <vector>

namespace germdyn {

/// Throws ParseError with the offending position.
BiPoly parse_poly(std::string_view text);

/// Comma-separated polynomials, optionally wrapped in one pair of parentheses.
std::vector<BiPoly> parse_poly_list(std::string_view text);

/// "(P, Q)" or "P, Q".
MapGerm parse_map(std::string_view text);

/// A list of monomials, e.g. "x^2,y^3" or "x^2, x*y, y^3"; NotPrimary when
/// it is not m-primary, ParseError when an entry is not a monomial.
MonomialIdeal2 parse_monomial_ideal(std::string_view text);

/// {"points": r, "proximate": [[i, j], ...], "axis": "x" | "y"}.
ProximityChart parse_chart(std::string_view json_text);

}  // namespace germdyn
