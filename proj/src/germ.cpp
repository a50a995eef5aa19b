#include "germzeta/germ.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "germzeta/parse.hpp"

namespace germzeta {

namespace {

// Content of p with respect to the variable picked by `coeffs_in_x`:
// gcd of the coefficient polynomials in the other variable.
UniPoly content(const BiPoly& p, bool coeffs_in_x) {
  UniPoly c;
  std::map<int, UniPoly> slices;
  for (const auto& [k, v] : p.terms()) {
    int outer = coeffs_in_x ? k.second : k.first;
    int inner = coeffs_in_x ? k.first : k.second;
    slices[outer].set_coeff(inner, v);
  }
  for (const auto& [e, s] : slices) c = poly_gcd(c, s);
  return c;
}

BiPoly lift(const UniPoly& u, bool as_x) {
  BiPoly b;
  for (const auto& [e, v] : u.terms()) b.set_coeff(as_x ? e : 0, as_x ? 0 : e, v);
  return b;
}

// Splits a squarefree polynomial into the parts we can certify: single-variable
// unit components live in the contents, so after peeling x- and y-contents any
// unit content factor is exposed. The content-free remainder is kept whole; a
// unit component entangled in it (genuinely bivariate, coprime to the germ
// part) stays attached, which leaves every downstream invariant intact because
// such a component never vanishes above the origin.
void split_units(const BiPoly& f, std::vector<BiPoly>& germ_parts, std::vector<BiPoly>& unit_parts) {
  if (!f.coeff(0, 0).is_zero()) {
    unit_parts.push_back(f);
    return;
  }
  BiPoly rest = f;
  for (bool coeffs_in_x : {true, false}) {
    UniPoly c = content(rest, coeffs_in_x);
    if (c.degree() < 1) continue;
    BiPoly cb = lift(c, coeffs_in_x);
    rest = rest.divide_exact(cb).value();
    // f squarefree: the content is squarefree, so the variable divides at most once.
    if (c.coeff(0).is_zero()) {
      germ_parts.push_back(coeffs_in_x ? BiPoly::var_x() : BiPoly::var_y());
      cb = coeffs_in_x ? cb.divide_xpow(1) : cb.divide_ypow(1);
    }
    if (!cb.is_constant()) unit_parts.push_back(cb.primitive_normalized());
  }
  if (rest.is_constant()) return;
  if (rest.coeff(0, 0).is_zero())
    germ_parts.push_back(rest.primitive_normalized());
  else
    unit_parts.push_back(rest.primitive_normalized());
}

}  // namespace

FactoredGerm germ_localize(const BiPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("germ of the zero polynomial");
  FactoredGerm g;
  for (const auto& sf : squarefree_decompose(p)) {
    std::vector<BiPoly> germ_parts, unit_parts;
    split_units(sf.factor, germ_parts, unit_parts);
    for (auto& q : germ_parts) g.factors.push_back({std::move(q), sf.multiplicity});
    for (const auto& u : unit_parts)
      g.dropped_units.push_back(unparse(u) +
                                (sf.multiplicity > 1 ? "^" + std::to_string(sf.multiplicity) : ""));
  }
  if (g.factors.empty()) throw NotAGerm();
  return g;
}

long multiplicity(const FactoredGerm& g) {
  long m = 0;
  for (const auto& f : g.factors) m += static_cast<long>(f.multiplicity) * f.poly.origin_multiplicity();
  return m;
}

}  // namespace germzeta
