#include "germzeta/resolve.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "germzeta/errors.hpp"

namespace germzeta {

namespace {

// Guard against runaway numerical data; well below long overflow.
constexpr long kDataLimit = 1000000000000L;

BiPoly chart_x_transform(const BiPoly& p, int drop) {
  // (x, y) -> (x, x*y): monomial (i, j) -> (i + j, j), then divide by x^drop.
  BiPoly out;
  for (const auto& [e, c] : p.terms()) {
    int i = e.first + e.second - drop;
    if (i < 0) throw InvariantViolation("chart transform: multiplicity exceeds lowest order");
    out.set_coeff(i, e.second, out.coeff(i, e.second) + c);
  }
  return out;
}

BiPoly chart_y_transform(const BiPoly& p, int drop) {
  // (x, y) -> (x*y, y): monomial (i, j) -> (i, i + j), then divide by y^drop.
  BiPoly out;
  for (const auto& [e, c] : p.terms()) {
    int j = e.first + e.second - drop;
    if (j < 0) throw InvariantViolation("chart transform: multiplicity exceeds lowest order");
    out.set_coeff(e.first, j, out.coeff(e.first, j) + c);
  }
  return out;
}

void add_edge(ResolutionGraph& g, int a, int b, BlowupStep& step) {
  auto e = std::minmax(a, b);
  g.edges.emplace_back(e.first, e.second);
  step.added_edges.emplace_back(e.first, e.second);
}

void remove_edge(ResolutionGraph& g, int a, int b, BlowupStep& step) {
  auto e = std::minmax(a, b);
  auto it = std::find(g.edges.begin(), g.edges.end(), std::pair(e.first, e.second));
  if (it == g.edges.end()) throw InvariantViolation("blow-up center claims a missing edge");
  g.edges.erase(it);
  step.removed_edges.emplace_back(e.first, e.second);
}

// Lemma-style sanity checks on freshly created numerical data. These encode
// structural facts that must hold for every blow-up; violations mean the
// engine itself is broken.
void audit_new_data(const std::vector<ExceptionalDatum>& through, long mu, long N, long nu,
                    const LocalSituation& sit, const ResolutionGraph& graph) {
  auto between_weak = [](const Rat& v, const Rat& a, const Rat& b) {
    Rat lo = std::min(a, b), hi = std::max(a, b);
    return lo <= v && v <= hi;
  };
  Rat ratio(nu, N);
  if (through.size() == 2) {
    // New ratio is strictly below the larger of the two old ratios (so the
    // new candidate pole -nu/N is strictly above the smaller old candidate).
    Rat r1(through[0].nu, through[0].N), r2(through[1].nu, through[1].N);
    if (!(ratio < std::max(r1, r2)))
      throw InvariantViolation("two-exceptional blow-up did not improve the pole candidate");
  } else if (through.size() == 1 && mu >= 2) {
    Rat r1(through[0].nu, through[0].N);
    if (!between_weak(ratio, Rat(1, mu), r1))
      throw InvariantViolation("one-exceptional blow-up ratio escaped its bracket");
  }
  // Tangent smooth branch: the two-step composite has data (2N_i+2, 2nu_i+1).
  if (sit.tangent_base && through.size() == 2 && mu == 1) {
    const ExceptionalDatum& base = graph.exc(*sit.tangent_base);
    if (N != 2 * base.N + 2 || nu != 2 * base.nu + 1)
      throw InvariantViolation("tangent two-step blow-up produced unexpected data");
    if (!between_weak(ratio, Rat(1, 2), Rat(base.nu, base.N)))
      throw InvariantViolation("tangent two-step ratio escaped [1/2, nu_i/N_i]");
  }
}

}  // namespace

const ExceptionalDatum& ResolutionGraph::exc(int id) const {
  if (id < 1 || id > static_cast<int>(exceptionals.size()))
    throw InvariantViolation("unknown exceptional id");
  return exceptionals[static_cast<size_t>(id - 1)];
}

int ResolutionGraph::neighbor_weight(int id) const {
  int w = 0;
  for (const auto& e : edges)
    if (e.first == id || e.second == id) ++w;
  for (const auto& b : branches)
    if (b.host == id) w += b.orbit_size;
  return w;
}

void ResolutionGraph::canonicalize() {
  std::sort(edges.begin(), edges.end());
  std::sort(branches.begin(), branches.end(),
            [](const BranchAttachment& a, const BranchAttachment& b) { return a.key() < b.key(); });
}

std::pair<long, long> numerical_data_2d(const std::vector<ExceptionalDatum>& through, long mu) {
  if (through.size() > 2) throw TooManyThrough("a point lies on at most two exceptional curves");
  if (mu < 0) throw InvariantViolation("negative strict transform multiplicity");
  long N = mu, nu = 2;
  for (const auto& e : through) {
    N += e.N;
    nu += e.nu - 1;
  }
  if (N > kDataLimit || nu > kDataLimit)
    throw ResolutionLimitExceeded("numerical data exceeded the safety bound");
  return {N, nu};
}

NcStatus nc_status(const LocalSituation& sit) {
  int axes = (sit.exc_x0 ? 1 : 0) + (sit.exc_y0 ? 1 : 0);
  if (sit.factors.empty()) {
    // Only exceptional curves pass through; two transversal axes are fine.
    return NcStatus::NormalCrossings;
  }
  for (const auto& f : sit.factors)
    if (f.poly.origin_multiplicity() < 1)
      throw InvariantViolation("situation factor does not vanish at the local origin");
  if (axes == 2) return NcStatus::NeedsBlowup;  // three or more curves through one point
  if (axes == 1) {
    // One exceptional axis: normal crossings iff the strict transform meets
    // it with total intersection multiplicity one.
    long rho = 0;
    for (const auto& f : sit.factors) {
      UniPoly r = sit.exc_x0 ? f.poly.at_x0() : f.poly.at_y0();
      if (r.is_zero())
        throw InvariantViolation("strict transform factor contains an exceptional axis");
      rho += f.multiplicity == 0 ? 0 : r.low_exponent();
    }
    return rho == 1 ? NcStatus::NormalCrossings : NcStatus::NeedsBlowup;
  }
  // Original origin, no exceptionals yet.
  if (sit.factors.size() > 2) return NcStatus::NeedsBlowup;
  for (const auto& f : sit.factors)
    if (f.poly.origin_multiplicity() != 1) return NcStatus::NeedsBlowup;
  if (sit.factors.size() == 2) {
    BiPoly l1 = sit.factors[0].poly.lowest_form();
    BiPoly l2 = sit.factors[1].poly.lowest_form();
    Rat a1 = l1.coeff(1, 0), b1 = l1.coeff(0, 1);
    Rat a2 = l2.coeff(1, 0), b2 = l2.coeff(0, 1);
    if ((a1 * b2 - a2 * b1).is_zero()) return NcStatus::NeedsBlowup;  // shared tangent line
  }
  return NcStatus::NormalCrossings;
}

BlowupStep blow_up_point(const LocalSituation& sit, ResolutionGraph& graph) {
  BlowupStep step;
  std::vector<ExceptionalDatum> through;
  if (sit.exc_x0) through.push_back(graph.exc(*sit.exc_x0));
  if (sit.exc_y0) through.push_back(graph.exc(*sit.exc_y0));

  long mu = 0;
  for (const auto& f : sit.factors) mu += static_cast<long>(f.multiplicity) * f.poly.origin_multiplicity();
  auto [N, nu] = numerical_data_2d(through, mu);
  audit_new_data(through, mu, N, nu, sit, graph);

  int id = static_cast<int>(graph.exceptionals.size()) + 1;
  graph.exceptionals.push_back({id, N, nu});
  step.created = {id, N, nu};
  step.mu = mu;
  step.through_count = static_cast<int>(through.size());

  // The center was the intersection point of the two axes; the blow-up
  // separates them and the new curve meets each once.
  if (sit.exc_x0 && sit.exc_y0) remove_edge(graph, *sit.exc_x0, *sit.exc_y0, step);
  if (sit.exc_x0) add_edge(graph, *sit.exc_x0, id, step);
  if (sit.exc_y0) add_edge(graph, *sit.exc_y0, id, step);

  bool tangent_candidate = through.size() == 1 && mu == 1;
  int old_single = sit.exc_x0 ? *sit.exc_x0 : (sit.exc_y0 ? *sit.exc_y0 : 0);

  auto attach_branch = [&](long bn, int orbit) {
    BranchAttachment b{id, bn, orbit};
    graph.branches.push_back(b);
    step.new_branches.push_back(b);
  };

  // Chart (x, y) -> (x, x*y): the new curve is {x = 0}; the strict transform
  // of the old axis {y = 0} stays {y = 0}. Every point of the new curve except
  // the one at t = infinity is (0, t) here.
  struct ChartFactor {
    BiPoly poly;
    int multiplicity;
    UniPoly restriction;  // poly(0, t)
  };
  std::vector<ChartFactor> cx;
  cx.reserve(sit.factors.size());
  for (const auto& f : sit.factors) {
    BiPoly q = chart_x_transform(f.poly, f.poly.origin_multiplicity());
    UniPoly r = q.at_x0();
    if (r.is_zero()) throw InvariantViolation("strict transform vanished on the new curve");
    cx.push_back({std::move(q), f.multiplicity, std::move(r)});
  }

  // Locate all intersections of strict transforms with the new curve in this
  // chart: rational points exactly, irrational ones as orbit remainders.
  std::map<Rat, std::vector<std::pair<size_t, int>>> at_point;  // t0 -> (factor, mult of root)
  std::vector<UniPoly> remainders(cx.size());
  for (size_t k = 0; k < cx.size(); ++k) {
    if (cx[k].restriction.degree() <= 0) {
      remainders[k] = UniPoly::constant(Rat(1));
      continue;  // factor meets the new curve only at the far chart origin
    }
    RootReport rr = rational_roots(cx[k].restriction);
    for (const auto& [t0, m] : rr.roots) at_point[t0].emplace_back(k, m);
    remainders[k] = rr.remainder;
    if (rr.remainder.degree() >= 1 && !rr.remainder_squarefree)
      throw UnsupportedIrrationalCenter(
          "repeated irrational intersection on the new curve (chart " + sit.transcript + ")");
  }
  for (size_t a = 0; a < remainders.size(); ++a)
    for (size_t b = a + 1; b < remainders.size(); ++b)
      if (remainders[a].degree() >= 1 && remainders[b].degree() >= 1 &&
          poly_gcd(remainders[a], remainders[b]).degree() >= 1)
        throw UnsupportedIrrationalCenter(
            "two factors share an irrational point on the new curve (chart " + sit.transcript + ")");

  auto make_successor = [&](std::vector<GermFactor> fs, std::optional<int> ex0,
                            std::optional<int> ey0, const std::string& where) {
    LocalSituation next;
    next.factors = std::move(fs);
    next.exc_x0 = ex0;
    next.exc_y0 = ey0;
    next.transcript = sit.transcript + ";" + where;
    if (tangent_candidate && ex0 && ey0) next.tangent_base = old_single;
    step.successors.push_back(std::move(next));
  };

  for (const auto& [t0, hits] : at_point) {
    bool on_old = t0.is_zero() && sit.exc_y0.has_value();
    long rho = 0;
    for (const auto& [k, m] : hits) rho += m;
    if (!on_old && rho == 1) {
      attach_branch(cx[hits[0].first].multiplicity, 1);
      continue;
    }
    std::vector<GermFactor> fs;
    for (const auto& [k, m] : hits) fs.push_back({cx[k].poly.shift(Rat(0), t0), cx[k].multiplicity});
    make_successor(std::move(fs), id, on_old ? sit.exc_y0 : std::nullopt,
                   "B" + std::to_string(id) + ":X(t=" + t0.to_string() + ")");
  }
  for (size_t k = 0; k < remainders.size(); ++k)
    if (remainders[k].degree() >= 1)
      attach_branch(cx[k].multiplicity, remainders[k].degree());

  // Far chart (x, y) -> (x*y, y): only its origin is new; there the new curve
  // is {y = 0} and the strict transform of the old axis {x = 0} is {x = 0}.
  {
    bool on_old = sit.exc_x0.has_value();
    long rho = 0;
    std::vector<GermFactor> fs;
    for (const auto& f : sit.factors) {
      BiPoly q = chart_y_transform(f.poly, f.poly.origin_multiplicity());
      if (!q.eval(Rat(0), Rat(0)).is_zero()) continue;
      UniPoly r = q.at_y0();
      if (r.is_zero()) throw InvariantViolation("strict transform vanished on the new curve");
      rho += r.low_exponent();
      fs.push_back({std::move(q), f.multiplicity});
    }
    if (!fs.empty()) {
      if (!on_old && rho == 1) {
        attach_branch(fs[0].multiplicity, 1);
      } else {
        make_successor(std::move(fs), on_old ? sit.exc_x0 : std::nullopt, id,
                       "B" + std::to_string(id) + ":Y");
      }
    }
  }
  return step;
}

ResolveResult resolve_germ_full(const FactoredGerm& g, const ResolveOptions& opt) {
  if (g.factors.empty()) throw NotAGerm("no factor vanishes at the origin");
  ResolveResult res;
  LocalSituation root;
  root.factors = g.factors;
  root.transcript = "origin";
  if (nc_status(root) == NcStatus::NormalCrossings) {
    NcAtOrigin nc;
    for (const auto& f : g.factors) nc.branch_N.push_back(f.multiplicity);
    nc.transversal_pair = g.factors.size() == 2;
    res.graph.nc_at_origin = nc;
    return res;
  }
  std::deque<LocalSituation> work{root};
  int count = 0;
  while (!work.empty()) {
    LocalSituation sit = std::move(work.front());
    work.pop_front();
    if (nc_status(sit) == NcStatus::NormalCrossings)
      throw InvariantViolation("worklist reached an already-resolved point");
    if (++count > opt.max_blowups)
      throw ResolutionLimitExceeded("exceeded " + std::to_string(opt.max_blowups) + " blow-ups");
    BlowupStep step = blow_up_point(sit, res.graph);
    res.audit.push_back({step.created.id, step.through_count, step.mu, sit.transcript});
    for (auto& s : step.successors) work.push_back(std::move(s));
  }
  res.graph.canonicalize();
  return res;
}

ResolutionGraph resolve_germ(const FactoredGerm& g, const ResolveOptions& opt) {
  return resolve_germ_full(g, opt).graph;
}

}  // namespace germzeta
