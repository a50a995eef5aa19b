#pragma once
#include <string>
#include <vector>

#include "germzeta/poly.hpp"

namespace germzeta {

struct GermFactor {
  BiPoly poly;       // squarefree, primitive-normalized, vanishes at the origin
  int multiplicity;  // >= 1
  bool operator==(const GermFactor&) const = default;
};

// A plane curve germ at the origin in factored squarefree form. Factors are
// pairwise coprime; components of the input that do not vanish at the origin
// are recorded in dropped_units (they are local units and do not affect the germ).
struct FactoredGerm {
  std::vector<GermFactor> factors;
  std::vector<std::string> dropped_units;
  bool operator==(const FactoredGerm& o) const { return factors == o.factors; }
};

// Squarefree-decompose p and keep the part vanishing at the origin.
// Throws ZeroPolynomial on p = 0 and NotAGerm when no factor vanishes.
FactoredGerm germ_localize(const BiPoly& p);

// Order of vanishing at the origin of prod factor_i^{mult_i}.
long multiplicity(const FactoredGerm& g);

}  // namespace germzeta
