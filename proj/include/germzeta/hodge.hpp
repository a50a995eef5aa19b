#pragma once
#include "germzeta/poly.hpp"
#include "germzeta/resolve.hpp"

namespace germzeta {

// Hodge-polynomial refinement of the zeta function, collapsed to two
// variables: x stands for w = uv and y for T = (uv)^(-s). Stored reduced;
// the denominator divides w^2 times the product of w^nu - T^N over the
// graph components.
struct HodgeZeta {
  BiPoly num;  // variables (w, T) = (x, y) of BiPoly
  BiPoly den;
};

HodgeZeta zeta_hodge(const ResolutionGraph& g);

// Exact limit at u = 1 of the substitution w = u^q, T = u^p for s0 = -p/q in
// lowest terms. Agrees with the plain zeta function at every non-pole s0;
// throws PoleAtSpecialization when the limit diverges.
Rat hodge_specialize_top(const HodgeZeta& zh, const Rat& s0);

// Order of the irreducible factor w^a - T^b (s0 = -a/b in lowest terms,
// a, b > 0) in the denominator minus its order in the numerator; positive
// means s0 is a pole at this level.
int hodge_pole_order(const HodgeZeta& zh, const Rat& s0);

}  // namespace germzeta
