#include "germzeta/hodge.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "germzeta/errors.hpp"

namespace germzeta {

namespace {

// w^nu - T^N, monic in w.
BiPoly component_factor(long nu, long N) {
  BiPoly f = BiPoly::monomial(static_cast<int>(nu), 0, Rat(1));
  f.set_coeff(0, static_cast<int>(N), Rat(-1));
  return f;
}

struct Stratum {
  BiPoly hodge;                 // Hodge polynomial of the stratum, in w
  std::vector<size_t> members;  // component indices
};

long to_long(const mpz_class& z, const char* what) {
  if (!z.fits_slong_p()) throw ParamOutOfRange(std::string("value out of range: ") + what);
  return z.get_si();
}

}  // namespace

HodgeZeta zeta_hodge(const ResolutionGraph& g) {
  std::vector<std::pair<long, long>> comp;  // (nu, N)
  std::vector<Stratum> strata;
  auto w_plus = [](long c) {  // w + c
    BiPoly p = BiPoly::var_x();
    p.set_coeff(0, 0, Rat(c));
    return p;
  };

  if (g.nc_at_origin) {
    const auto& nc = *g.nc_at_origin;
    Stratum s;
    s.hodge = BiPoly::constant(Rat(1));  // one point stratum either way
    for (long N : nc.branch_N) {
      comp.emplace_back(1, N);
      s.members.push_back(comp.size() - 1);
    }
    strata.push_back(std::move(s));
  } else {
    std::map<int, size_t> exc_index;
    for (const auto& e : g.exceptionals) {
      exc_index[e.id] = comp.size();
      comp.emplace_back(e.nu, e.N);
    }
    for (const auto& e : g.exceptionals)
      strata.push_back({w_plus(1 - g.neighbor_weight(e.id)), {exc_index[e.id]}});
    for (const auto& [a, b] : g.edges)
      strata.push_back({BiPoly::constant(Rat(1)), {exc_index[a], exc_index[b]}});
    for (const auto& br : g.branches) {
      comp.emplace_back(1, br.N);
      strata.push_back(
          {BiPoly::constant(Rat(br.orbit_size)), {exc_index[br.host], comp.size() - 1}});
    }
  }

  // Common denominator w^2 * prod of all component factors; every stratum
  // contributes H * (w-1)^|I| * T^(sum N) * prod of the factors it omits.
  BiPoly w_minus_1 = w_plus(-1);
  BiPoly num;
  for (const auto& s : strata) {
    BiPoly term = s.hodge;
    long sumN = 0;
    for (size_t c : s.members) {
      term = term * w_minus_1;
      sumN += comp[c].second;
    }
    term = term * BiPoly::monomial(0, static_cast<int>(sumN), Rat(1));
    for (size_t c = 0; c < comp.size(); ++c)
      if (std::find(s.members.begin(), s.members.end(), c) == s.members.end())
        term = term * component_factor(comp[c].first, comp[c].second);
    num = num + term;
  }
  if (num.is_zero()) throw InvariantViolation("empty stratification");

  // Reduce: powers of w first, then each component factor by iterated gcd.
  int wpow = 2;
  int min_w = num.degree_x();
  for (const auto& [e, c] : num.terms()) min_w = std::min(min_w, e.first);
  int cancel = std::min(wpow, min_w);
  if (cancel > 0) {
    num = num.divide_xpow(cancel);
    wpow -= cancel;
  }
  std::vector<BiPoly> factors;
  for (const auto& [nu, N] : comp) factors.push_back(component_factor(nu, N));
  for (auto& f : factors) {
    while (!f.is_constant()) {
      BiPoly g2 = bipoly_gcd(num, f);
      if (g2.is_constant()) break;
      num = *num.divide_exact(g2);
      f = *f.divide_exact(g2);
    }
  }

  BiPoly den = BiPoly::monomial(wpow, 0, Rat(1));
  for (const auto& f : factors) den = den * f;
  Rat unit;
  den = den.primitive_normalized(&unit);
  num = num * unit.inverse();
  return {num, den};
}

Rat hodge_specialize_top(const HodgeZeta& zh, const Rat& s0) {
  long q = to_long(s0.den(), "specialization denominator");
  long p = to_long(-s0.num(), "specialization numerator");
  auto substitute = [&](const BiPoly& poly) {
    std::map<long, Rat> acc;
    for (const auto& [e, c] : poly.terms()) {
      long exp = q * e.first + p * e.second;  // w^a T^b -> u^(qa+pb)
      acc[exp] = acc[exp] + c;
    }
    return acc;
  };
  auto num_u = substitute(zh.num);
  auto den_u = substitute(zh.den);
  auto low = [](const std::map<long, Rat>& m) {
    long lo = 0;
    bool first = true;
    for (const auto& [e, c] : m)
      if (!c.is_zero() && (first || e < lo)) lo = e, first = false;
    return lo;
  };
  long shift = std::min(low(num_u), low(den_u));
  auto to_poly = [&](const std::map<long, Rat>& m) {
    UniPoly p2;
    for (const auto& [e, c] : m)
      if (!c.is_zero()) p2.set_coeff(static_cast<int>(e - shift), c);
    return p2;
  };
  UniPoly n = to_poly(num_u), d = to_poly(den_u);
  if (d.is_zero()) throw PoleAtSpecialization("denominator collapses at this direction");
  if (n.is_zero()) return Rat(0);
  while (d.eval(Rat(1)).is_zero()) {
    if (!n.eval(Rat(1)).is_zero()) throw PoleAtSpecialization("limit diverges at u = 1");
    n = n.deflate(Rat(1), 1);
    d = d.deflate(Rat(1), 1);
  }
  return n.eval(Rat(1)) / d.eval(Rat(1));
}

int hodge_pole_order(const HodgeZeta& zh, const Rat& s0) {
  if (!(s0 < Rat(0))) throw ParamOutOfRange("pole candidates are negative");
  long a = to_long(-s0.num(), "pole numerator");
  long b = to_long(s0.den(), "pole denominator");
  BiPoly f = component_factor(a, b);  // w^a - T^b, irreducible since gcd(a,b) = 1
  return factor_order(zh.den, f) - factor_order(zh.num, f);
}

}  // namespace germzeta
