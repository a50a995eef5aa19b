#pragma once
#include <string>

#include "germzeta/poly.hpp"

namespace germzeta {

// Grammar (whitespace insignificant, no implicit multiplication):
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' nat)?
//   base     := 'x' | 'y' | rational | '(' expr ')'
//   rational := int ('/' posint)?
// Throws SyntaxError with a byte position on any violation.
BiPoly parse_poly(const std::string& text);

// Canonical text form that parses back to the same polynomial.
std::string unparse(const BiPoly& p);

}  // namespace germzeta
