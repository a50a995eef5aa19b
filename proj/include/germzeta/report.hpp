#pragma once
#include <string>
#include <utility>
#include <vector>

#include "germzeta/ratfun.hpp"
#include "germzeta/resolve.hpp"

namespace germzeta {

// Numerator/denominator coefficient lists (ascending), scaled by one common
// factor so both are integral and jointly primitive, denominator leading
// coefficient positive.
std::pair<std::vector<mpz_class>, std::vector<mpz_class>> cleared_coeffs(const RatFun1& z);

// Serialization of a resolution graph. graph_from_json accepts exactly the
// emitted schema and throws BadReport otherwise; emit + parse is lossless.
std::string graph_to_json(const ResolutionGraph& g);
ResolutionGraph graph_from_json(const std::string& text);

// DOT rendering: filled nodes "E<i>(N,nu)" for exceptionals, open nodes
// "branch(N)x<orbit>" for branch orbits.
std::string emit_dot(const ResolutionGraph& g);

// \frac{...}{...} with integer-cleared coefficients; the denominator is
// factored into integer linear factors when all its roots are rational.
std::string emit_latex(const RatFun1& z);

}  // namespace germzeta
