#pragma once

#include "polydual/dual.hpp"
#include "polydual/poly.hpp"

#include <string>
#include <string_view>

namespace polydual {

// Grammar (whitespace ignored):
//   expr    := [+|-] term { (+|-) term }
//   term    := factor { [*] factor }
//   factor  := primary [ ^ exponent ]
//   primary := literal | x | a<i> | ( expr )
// Literals are canonical element indices, or `(c1,c2,...)` tuples over a
// direct sum. `a1..ak` are the dual variables and need k >= i.
// Errors are ParseError carrying the byte offset.

Poly parse_poly(std::string_view text, const RingPtr& ring);
DualPoly parse_dual_poly(std::string_view text, const RingPtr& ring, std::size_t k);
DualElement parse_dual_element(std::string_view text, const DualRing& ring);

/// Canonical text: terms by descending degree, `c*x^e`, unit coefficients
/// dropped, `0` for the zero polynomial. Parses back to an equal polynomial.
std::string format_poly(const Poly& f);
std::string format_dual_poly(const DualPoly& f);

}  // namespace polydual
