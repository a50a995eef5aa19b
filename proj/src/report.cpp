#include "germzeta/report.hpp"

#include <json.hpp>
#include <sstream>

#include "germzeta/errors.hpp"
#include "germzeta/zeta.hpp"

namespace germzeta {

using ordered_json = nlohmann::ordered_json;

std::pair<std::vector<mpz_class>, std::vector<mpz_class>> cleared_coeffs(const RatFun1& z) {
  mpz_class lambda = 1;
  auto scan = [&](const UniPoly& p) {
    for (const auto& [e, c] : p.terms()) {
      mpz_class l;
      mpz_lcm(l.get_mpz_t(), lambda.get_mpz_t(), c.den().get_mpz_t());
      lambda = l;
    }
  };
  scan(z.num());
  scan(z.den());
  auto cleared = [&](const UniPoly& p) {
    std::vector<mpz_class> out(static_cast<size_t>(std::max(p.degree(), 0)) + 1, 0);
    for (const auto& [e, c] : p.terms()) {
      Rat v = c * Rat(lambda, 1);
      out[static_cast<size_t>(e)] = v.num();  // integral by choice of lambda
    }
    return out;
  };
  auto num = cleared(z.num());
  auto den = cleared(z.den());
  mpz_class g = 0;
  for (const auto& c : num) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  for (const auto& c : den) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1)
    for (auto* v : {&num, &den})
      for (auto& c : *v) c /= g;
  if (den.back() < 0)
    for (auto* v : {&num, &den})
      for (auto& c : *v) c = -c;
  return {num, den};
}

std::string graph_to_json(const ResolutionGraph& g) {
  ordered_json j;
  j["exceptionals"] = ordered_json::array();
  for (const auto& e : g.exceptionals)
    j["exceptionals"].push_back({{"id", e.id}, {"N", e.N}, {"nu", e.nu}});
  j["edges"] = ordered_json::array();
  for (const auto& [a, b] : g.edges) j["edges"].push_back({a, b});
  j["branches"] = ordered_json::array();
  for (const auto& b : g.branches)
    j["branches"].push_back({{"host", b.host}, {"N", b.N}, {"orbit_size", b.orbit_size}});
  if (g.nc_at_origin) {
    j["nc_at_origin"] = {{"branch_N", g.nc_at_origin->branch_N},
                         {"transversal_pair", g.nc_at_origin->transversal_pair}};
  } else {
    j["nc_at_origin"] = nullptr;
  }
  return j.dump(2);
}

ResolutionGraph graph_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw BadReport(std::string("invalid JSON: ") + e.what());
  }
  try {
    ResolutionGraph g;
    for (const auto& e : j.at("exceptionals"))
      g.exceptionals.push_back({e.at("id").get<int>(), e.at("N").get<long>(),
                                e.at("nu").get<long>()});
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw BadReport("edge must be a pair");
      g.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    for (const auto& b : j.at("branches"))
      g.branches.push_back({b.at("host").get<int>(), b.at("N").get<long>(),
                            b.at("orbit_size").get<int>()});
    if (!j.at("nc_at_origin").is_null()) {
      NcAtOrigin nc;
      for (const auto& n : j.at("nc_at_origin").at("branch_N")) nc.branch_N.push_back(n.get<long>());
      nc.transversal_pair = j.at("nc_at_origin").at("transversal_pair").get<bool>();
      g.nc_at_origin = nc;
    }
    return g;
  } catch (const BadReport&) {
    throw;
  } catch (const std::exception& e) {
    throw BadReport(std::string("malformed graph report: ") + e.what());
  }
}

std::string emit_dot(const ResolutionGraph& g) {
  std::ostringstream out;
  out << "graph resolution {\n";
  for (const auto& e : g.exceptionals)
    out << "  e" << e.id << " [label=\"E" << e.id << "(" << e.N << "," << e.nu
        << ")\", shape=circle, style=filled];\n";
  int bid = 0;
  std::vector<std::string> branch_names;
  auto branch_node = [&](long N, int orbit) {
    std::string name = "b" + std::to_string(++bid);
    out << "  " << name << " [label=\"branch(" << N << ")x" << orbit
        << "\", shape=circle, style=solid];\n";
    branch_names.push_back(name);
    return name;
  };
  if (g.nc_at_origin) {
    for (long N : g.nc_at_origin->branch_N) branch_node(N, 1);
    if (g.nc_at_origin->branch_N.size() == 2)
      out << "  " << branch_names[0] << " -- " << branch_names[1] << ";\n";
  } else {
    std::vector<std::pair<std::string, int>> branch_edges;
    for (const auto& b : g.branches) branch_edges.emplace_back(branch_node(b.N, b.orbit_size), b.host);
    for (const auto& [a, b] : g.edges) out << "  e" << a << " -- e" << b << ";\n";
    for (const auto& [name, host] : branch_edges) out << "  e" << host << " -- " << name << ";\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

std::string poly_descending(const std::vector<mpz_class>& coeffs) {
  std::ostringstream out;
  bool first = true;
  for (int e = static_cast<int>(coeffs.size()) - 1; e >= 0; --e) {
    const mpz_class& c = coeffs[static_cast<size_t>(e)];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? "-" : "+");
    }
    if (a != 1 || e == 0) out << a.get_str();
    if (e >= 1) out << "s";
    if (e >= 2) out << "^" << e;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace

std::string emit_latex(const RatFun1& z) {
  if (z.num().is_zero()) return "0";
  auto [num, den] = cleared_coeffs(z);
  if (z.den().degree() == 0) return poly_descending(num);  // polynomial, denominator constant

  // Try the factored form: the denominator is monic with rational roots for
  // every zeta assembled here.
  RootReport rr = rational_roots(z.den());
  std::ostringstream dens;
  mpz_class root_scale = 1;
  bool factored = rr.remainder.degree() < 1;
  if (factored) {
    for (const auto& [r, m] : rr.roots) {
      // root r = -p/q -> factor (q s + p)
      mpz_class q = r.den(), p = -r.num();
      std::vector<mpz_class> f = {p, q};
      std::string body = poly_descending(f);
      for (int i = 0; i < m; ++i) root_scale *= q;
      if (rr.roots.size() == 1 && m == 1) {
        dens << body;
      } else {
        dens << "(" << body << ")";
        if (m > 1) dens << "^" << m;
      }
    }
  }
  if (factored) {
    // z = num/den with den monic: multiplying den's roots into integer factors
    // scales the denominator by root_scale, so the numerator scales too.
    UniPoly scaled_num = z.num() * UniPoly::constant(Rat(root_scale, 1));
    std::vector<mpz_class> n2(static_cast<size_t>(scaled_num.degree()) + 1, 0);
    bool integral = true;
    for (const auto& [e, c] : scaled_num.terms()) {
      if (!c.is_integer()) integral = false;
      n2[static_cast<size_t>(e)] = c.num();
    }
    if (integral) return "\\frac{" + poly_descending(n2) + "}{" + dens.str() + "}";
  }
  return "\\frac{" + poly_descending(num) + "}{" + poly_descending(den) + "}";
}

}  // namespace germzeta
