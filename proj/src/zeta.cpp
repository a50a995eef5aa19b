#include "germzeta/zeta.hpp"

#include <algorithm>

#include "germzeta/errors.hpp"

namespace germzeta {

namespace {

// 1 / (nu + N s)
RatFun1 lin_inv(long nu, long N) {
  return RatFun1(UniPoly::constant(Rat(1)), UniPoly::from_coeffs({Rat(nu), Rat(N)}));
}

bool divides(long d, long n) { return d == 0 ? n == 0 : n % d == 0; }

}  // namespace

RatFun1 zeta_top(const ResolutionGraph& g) { return zeta_d(g, 1); }

RatFun1 zeta_d(const ResolutionGraph& g, long d) {
  if (d < 1) throw ParamOutOfRange("restriction d must be >= 1");
  if (g.nc_at_origin) {
    const NcAtOrigin& nc = *g.nc_at_origin;
    if (nc.branch_N.size() == 1) {
      // One smooth branch: point stratum on it, chi = 1.
      long N = nc.branch_N[0];
      return divides(d, N) ? lin_inv(1, N) : RatFun1();
    }
    // Two transversal branches: only the intersection point stratum counts.
    long N1 = nc.branch_N[0], N2 = nc.branch_N[1];
    if (!divides(d, N1) || !divides(d, N2)) return RatFun1();
    return lin_inv(1, N1) * lin_inv(1, N2);
  }
  RatFun1 z;
  for (const auto& e : g.exceptionals) {
    if (!divides(d, e.N)) continue;
    long chi = g.chi_open(e.id);
    if (chi != 0) z = z + RatFun1(UniPoly::constant(Rat(chi))) * lin_inv(e.nu, e.N);
  }
  for (const auto& [a, b] : g.edges) {
    const auto& ea = g.exc(a);
    const auto& eb = g.exc(b);
    if (!divides(d, ea.N) || !divides(d, eb.N)) continue;
    z = z + lin_inv(ea.nu, ea.N) * lin_inv(eb.nu, eb.N);
  }
  for (const auto& br : g.branches) {
    const auto& h = g.exc(br.host);
    if (!divides(d, h.N) || !divides(d, br.N)) continue;
    z = z + RatFun1(UniPoly::constant(Rat(br.orbit_size))) * lin_inv(h.nu, h.N) * lin_inv(1, br.N);
  }
  return z;
}

Rat lct(const ResolutionGraph& g) {
  std::optional<Rat> best;
  auto consider = [&](long nu, long N) {
    Rat r(nu, N);
    if (!best || r < *best) best = r;
  };
  if (g.nc_at_origin) {
    for (long N : g.nc_at_origin->branch_N) consider(1, N);
  } else {
    for (const auto& e : g.exceptionals) consider(e.nu, e.N);
    for (const auto& b : g.branches) consider(1, b.N);
  }
  if (!best) throw InvariantViolation("empty resolution graph");
  return *best;
}

std::vector<PoleInfo> poles(const RatFun1& z) {
  std::vector<PoleInfo> out;
  const UniPoly& den = z.den();
  if (den.degree() <= 0) return out;
  RootReport rr = rational_roots(den);
  if (rr.remainder.degree() >= 1)
    throw NonRationalDenominatorRoot("denominator has an irrational root: " +
                                     rr.remainder.to_string("s"));
  for (const auto& [r, m] : rr.roots) {
    UniPoly q = den;
    for (int k = 0; k < m; ++k) q = q.deflate(r, 1);
    Rat qv = q.eval(r);
    if (qv.is_zero()) throw InvariantViolation("deflation left a root behind");
    out.push_back({r, m, z.num().eval(r) / qv});
  }
  std::sort(out.begin(), out.end(),
            [](const PoleInfo& a, const PoleInfo& b) { return a.location < b.location; });
  return out;
}

std::vector<Rat> candidate_poles(const ResolutionGraph& g) {
  std::vector<Rat> out;
  if (g.nc_at_origin) {
    for (long N : g.nc_at_origin->branch_N) out.push_back(Rat(-1, N));
  } else {
    for (const auto& e : g.exceptionals) out.push_back(Rat(-e.nu, e.N));
    for (const auto& b : g.branches) out.push_back(Rat(-1, b.N));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Rat> predicted_poles(const ResolutionGraph& g) {
  std::vector<Rat> out;
  if (g.nc_at_origin) {
    for (long N : g.nc_at_origin->branch_N) out.push_back(Rat(-1, N));
  } else {
    for (const auto& e : g.exceptionals)
      if (g.neighbor_weight(e.id) >= 3) out.push_back(Rat(-e.nu, e.N));
    for (const auto& b : g.branches) out.push_back(Rat(-1, b.N));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<AlphaEntry> alpha_values(const ResolutionGraph& g, int exc_id) {
  const auto& e = g.exc(exc_id);
  Rat s0(e.nu, e.N);  // alpha_j = nu_j - (nu_i / N_i) N_j
  std::vector<AlphaEntry> out;
  for (const auto& [a, b] : g.edges) {
    if (a != exc_id && b != exc_id) continue;
    const auto& j = g.exc(a == exc_id ? b : a);
    out.push_back({false, j.id, j.N, j.nu, 1, Rat(j.nu) - s0 * Rat(j.N)});
  }
  for (const auto& br : g.branches) {
    if (br.host != exc_id) continue;
    out.push_back({true, 0, br.N, 1, br.orbit_size, Rat(1) - s0 * Rat(br.N)});
  }
  return out;
}

bool check_relation_alpha(const ResolutionGraph& g, int exc_id) {
  Rat sum;
  for (const auto& a : alpha_values(g, exc_id)) sum = sum + Rat(a.weight) * (a.alpha - Rat(1));
  return sum + Rat(2) == Rat(0);
}

bool check_congruence(const ResolutionGraph& g, int exc_id) {
  long sum = 0;
  for (const auto& a : alpha_values(g, exc_id)) sum += a.weight * a.N;
  return sum % g.exc(exc_id).N == 0;
}

Rat contribution_residue(const ResolutionGraph& g, int exc_id, long d) {
  const auto& e = g.exc(exc_id);
  if (d < 1 || e.N % d != 0)
    throw ParamOutOfRange("restriction d must divide the multiplicity of the exceptional");
  Rat acc(g.chi_open(exc_id));
  for (const auto& a : alpha_values(g, exc_id)) {
    if (a.N % d != 0) continue;
    if (a.alpha.is_zero())
      throw AlphaZero("neighbor shares the candidate pole of exceptional " +
                      std::to_string(exc_id));
    acc = acc + Rat(a.weight) / a.alpha;
  }
  return acc / Rat(e.N);
}

ZetaReport zeta_report(const ResolutionGraph& g) {
  ZetaReport r{zeta_top(g), {}, candidate_poles(g), lct(g)};
  r.pole_list = poles(r.zeta);
  return r;
}

SmallPoleReport classify_small_poles(const std::vector<PoleInfo>& ps) {
  SmallPoleReport rep;
  Rat half(-1, 2), one(-1);
  for (const auto& p : ps) {
    if (p.location < half) {
      rep.below_half.push_back(p.location);
      // Admissible small poles are -1/2 - 1/i with integer i >= 2.
      Rat inv = (half - p.location).inverse();
      if (!inv.is_integer() || inv < Rat(2)) rep.offenders.push_back(p.location);
    }
    if (one < p.location && p.location <= half) rep.window.push_back(p.location);
  }
  return rep;
}

}  // namespace germzeta
