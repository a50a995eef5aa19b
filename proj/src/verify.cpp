#include "germzeta/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <utility>

#include "germzeta/errors.hpp"
#include "germzeta/germ.hpp"
#include "germzeta/hodge.hpp"
#include "germzeta/parse.hpp"
#include "germzeta/resolve.hpp"
#include "germzeta/suspension.hpp"
#include "germzeta/surface.hpp"
#include "germzeta/zeta.hpp"

namespace germzeta {

namespace {

struct Checker {
  SuiteResult res;
  explicit Checker(std::string name) { res.suite = std::move(name); }
  void check(bool ok, const std::string& what) {
    ++res.checks;
    if (!ok) {
      ++res.failures;
      if (res.failure_notes.size() < 40) res.failure_notes.push_back(what);
    }
  }
};

ResolutionGraph resolve_text(const std::string& text) {
  return resolve_germ(germ_localize(parse_poly(text)));
}

std::vector<Rat> pole_locations(const std::vector<PoleInfo>& ps) {
  std::vector<Rat> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(p.location);
  return out;
}

std::string join_rats(const std::vector<Rat>& v) {
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + "}";
}

bool contains(const std::vector<Rat>& v, const Rat& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

std::vector<Rat> below_half(const std::vector<Rat>& locs) {
  std::vector<Rat> out;
  for (const auto& r : locs)
    if (r < Rat(-1, 2)) out.push_back(r);
  return out;
}

// a + b s
UniPoly lin(long a, long b) { return UniPoly::from_coeffs({Rat(a), Rat(b)}); }

// ---- expected minimal resolutions of the two parametric plane families ----

ResolutionGraph expected_y2xk(long k) {
  ResolutionGraph g;
  auto add = [&](long N, long nu) {
    g.exceptionals.push_back({static_cast<int>(g.exceptionals.size()) + 1, N, nu});
  };
  auto edge = [&](long a, long b) {
    g.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  };
  if (k == 2) {
    // Degenerate even case: one blow-up separates the conjugate point pair.
    add(2, 2);
    g.branches.push_back({1, 1, 2});
  } else if (k % 2 == 1) {
    long r = (k - 1) / 2;
    for (long i = 1; i <= r; ++i) add(2 * i, i + 1);
    add(2 * r + 1, r + 2);
    add(4 * r + 2, 2 * r + 3);
    for (long i = 1; i + 1 <= r; ++i) edge(i, i + 1);
    edge(r, r + 2);
    edge(r + 1, r + 2);
    g.branches.push_back({static_cast<int>(r) + 2, 1, 1});
  } else {
    long r = k / 2;
    for (long i = 1; i <= r; ++i) add(2 * i, i + 1);
    for (long i = 1; i + 1 <= r; ++i) edge(i, i + 1);
    g.branches.push_back({static_cast<int>(r), 1, 2});
  }
  g.canonicalize();
  return g;
}

ResolutionGraph expected_y3xy2xk(long k) {
  ResolutionGraph g;
  auto add = [&](long N, long nu) {
    g.exceptionals.push_back({static_cast<int>(g.exceptionals.size()) + 1, N, nu});
  };
  auto edge = [&](long a, long b) {
    g.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  };
  if (k % 2 == 1) {
    long r = (k - 1) / 2;
    for (long i = 1; i <= r; ++i) add(2 * i + 1, i + 1);
    for (long i = 1; i + 1 <= r; ++i) edge(i, i + 1);
    g.branches.push_back({1, 1, 1});
    g.branches.push_back({static_cast<int>(r), 1, 2});
  } else {
    long r = k / 2;
    for (long i = 1; i + 1 <= r; ++i) add(2 * i + 1, i + 1);
    add(2 * r, r + 1);
    add(4 * r, 2 * r + 1);
    for (long i = 1; i + 2 <= r; ++i) edge(i, i + 1);
    edge(r - 1, r + 1);
    edge(r, r + 1);
    g.branches.push_back({1, 1, 1});
    g.branches.push_back({static_cast<int>(r) + 1, 1, 1});
  }
  g.canonicalize();
  return g;
}

// ---- shared suite inputs ----

struct NamedGerm {
  std::string name;
  ResolutionGraph graph;
  long mult = 0;
  bool random = false;
};

std::vector<NamedGerm> resolved_inputs(std::uint64_t seed, int random_count, long min_mult,
                                       int* skipped) {
  std::vector<NamedGerm> out;
  auto add_text = [&](const std::string& name, const std::string& text, bool random) {
    FactoredGerm g = germ_localize(parse_poly(text));
    if (min_mult > 0 && multiplicity(g) < min_mult) return;
    try {
      out.push_back({name, resolve_germ(g), multiplicity(g), random});
    } catch (const UnsupportedIrrationalCenter&) {
      if (skipped) ++*skipped;
    }
  };
  for (const auto& cg : paper_corpus()) add_text(cg.name, cg.poly_text, false);
  RandomGermOptions ro;
  ro.seed = seed;
  ro.count = random_count;
  ro.min_multiplicity = min_mult;
  int idx = 0;
  for (const auto& text : random_germs(ro)) {
    add_text("random[" + std::to_string(idx) + "] " + text, text, true);
    ++idx;
  }
  return out;
}

// ---- suites ----

SuiteResult suite_relations(const SuiteOptions& opt) {
  Checker c("relations");
  for (const auto& in : resolved_inputs(opt.seed, 120, 0, &c.res.skipped)) {
    for (const auto& e : in.graph.exceptionals) {
      std::string at = in.name + " at E" + std::to_string(e.id);
      c.check(check_relation_alpha(in.graph, e.id), "weight relation fails: " + at);
      c.check(check_congruence(in.graph, e.id), "multiplicity congruence fails: " + at);
    }
  }
  return c.res;
}

SuiteResult suite_theorem2_4(const SuiteOptions& opt) {
  Checker c("theorem2_4");
  int resolved_random = 0;
  for (const auto& in : resolved_inputs(opt.seed, 120, 0, &c.res.skipped)) {
    if (in.random) ++resolved_random;
    std::vector<Rat> actual = pole_locations(poles(zeta_top(in.graph)));
    std::vector<Rat> pred = predicted_poles(in.graph);
    c.check(actual == pred, in.name + ": predicted " + join_rats(pred) + " vs actual " +
                                join_rats(actual));
    c.check(contains(actual, -lct(in.graph)), in.name + ": -lct is not a pole");
    std::vector<Rat> cands = candidate_poles(in.graph);
    bool sub = true;
    for (const auto& a : actual) sub = sub && contains(cands, a);
    c.check(sub, in.name + ": pole outside the candidate list");
  }
  c.check(resolved_random >= 100, "only " + std::to_string(resolved_random) +
                                      " random germs resolved, need at least 100");
  return c.res;
}

SuiteResult suite_theorem2_8(const SuiteOptions& opt) {
  Checker c("theorem2_8");
  for (const auto& in : resolved_inputs(opt.seed, 120, 0, &c.res.skipped)) {
    SmallPoleReport rep = classify_small_poles(poles(zeta_top(in.graph)));
    c.check(rep.offenders.empty(),
            in.name + ": inadmissible small poles " + join_rats(rep.offenders));
    c.check(rep.window.size() <= 1,
            in.name + ": several poles in (-1,-1/2]: " + join_rats(rep.window));
  }
  return c.res;
}

SuiteResult suite_corollary2_6(const SuiteOptions& opt) {
  Checker c("corollary2_6");
  for (const auto& in : resolved_inputs(opt.seed, 60, 4, &c.res.skipped)) {
    std::vector<Rat> small = below_half(pole_locations(poles(zeta_top(in.graph))));
    bool only_minus_one = true;
    for (const auto& r : small) only_minus_one = only_minus_one && r == Rat(-1);
    c.check(only_minus_one,
            in.name + " (mult " + std::to_string(in.mult) + "): poles " + join_rats(small));
  }
  return c.res;
}

SuiteResult suite_configs(const SuiteOptions& opt) {
  Checker c("configs");
  ConfigSuiteReport rep = configuration_suite(opt.seed);
  for (const auto& e : rep.entries) {
    if (e.name != "four-general") {
      c.check(e.all_zero, e.name + ": a contribution sample or grid value is nonzero");
      c.check(e.samples >= 20 && e.grid_points >= 1, e.name + ": not enough samples");
    }
    c.check(e.probes_ok, e.name + ": an extra blow-up changed the contribution");
  }
  c.check(rep.four_general_witness == Rat(3, 20),
          "four-general witness is " + rep.four_general_witness.to_string() + ", want 3/20");
  c.check(rep.four_general_nonzero_samples >= 20,
          "four-general nonzero samples: " + std::to_string(rep.four_general_nonzero_samples));

  // A triple point forces the created curve to weight -1, whatever the lines carry.
  ConfigResolution tri = arrangement_resolve(
      make_config(preset_lines("three-concurrent"), {Rat(5), Rat(-3), Rat(-2)}));
  c.check(tri.curve_alpha.size() == 4 && tri.curve_alpha[3] == Rat(-1),
          "triple-point exceptional weight is not -1");

  // Creation table for exceptional surfaces: all seven center kinds.
  using Cell = std::pair<long, long>;
  auto cell = [](bool point, long mu, std::vector<std::pair<long, long>> through) {
    return numerical_data_3d({point, mu, std::move(through)});
  };
  c.check(cell(true, 2, {}) == Cell(2, 3), "free point center");
  c.check(cell(true, 2, {{5, 3}}) == Cell(7, 5), "point on one surface");
  c.check(cell(true, 2, {{5, 3}, {7, 4}}) == Cell(14, 8), "point on two surfaces");
  c.check(cell(true, 2, {{5, 3}, {7, 4}, {11, 6}}) == Cell(25, 13), "point on three surfaces");
  c.check(cell(false, 2, {}) == Cell(2, 2), "free curve center");
  c.check(cell(false, 2, {{5, 3}}) == Cell(7, 4), "curve on one surface");
  c.check(cell(false, 2, {{5, 3}, {7, 4}}) == Cell(14, 7), "curve on two surfaces");
  return c.res;
}

SuiteResult suite_paper_families(const SuiteOptions& opt) {
  Checker c("paper-families");

  // Cusp: closed zeta, pole data, residue, lct, 2-restriction.
  {
    ResolutionGraph g = resolve_text("y^2+x^3");
    c.check(g == expected_y2xk(3), "cusp graph shape");
    RatFun1 z = zeta_top(g);
    RatFun1 want(lin(opt.inject_fault ? 6 : 5, 4), lin(1, 1) * lin(5, 6));
    c.check(z == want, "cusp zeta is " + z.to_string());
    auto ps = poles(z);
    c.check(ps.size() == 2 && ps[0].location == Rat(-1) && ps[0].order == 1 &&
                ps[1].location == Rat(-5, 6) && ps[1].order == 1 && ps[1].leading == Rat(5, 3),
            "cusp pole/residue data");
    c.check(lct(g) == Rat(5, 6), "cusp lct");
    c.check(contribution_residue(g, 3) == Rat(5, 3), "cusp residue contribution at E3");
    c.check(zeta_d(g, 2) == RatFun1(UniPoly::constant(Rat(2)), lin(5, 6)),
            "cusp 2-restricted zeta");
  }

  // y^2 + x^k: graph shapes and the pole below -1/2 next to -1.
  for (long k = 2; k <= 16; ++k) {
    std::string name = "y^2+x^" + std::to_string(k);
    ResolutionGraph g = resolve_text(name);
    c.check(g == expected_y2xk(k), name + ": graph shape");
    std::vector<Rat> small = below_half(pole_locations(poles(zeta_top(g))));
    std::vector<Rat> want{Rat(-1)};
    if (k > 2) want.push_back(Rat(-1, 2) - Rat(1, k));  // k = 2 merges it into -1
    c.check(small == want, name + ": small poles " + join_rats(small));
  }

  // Three concurrent lines and the double-tangent pair.
  {
    ResolutionGraph g = resolve_text("x*y*(x+y)");
    c.check(zeta_top(g) == RatFun1(lin(2, -1), lin(1, 1) * lin(2, 3)), "three lines zeta");
    c.check(pole_locations(poles(zeta_top(g))) == std::vector<Rat>{Rat(-1), Rat(-2, 3)},
            "three lines poles");
  }
  {
    ResolutionGraph g = resolve_text("y^3+x*y^2");
    c.check(g.nc_at_origin.has_value() && g.nc_at_origin->transversal_pair,
            "y^3+x*y^2 is a transversal pair");
    c.check(zeta_top(g) == RatFun1(UniPoly::constant(Rat(1)), lin(1, 2) * lin(1, 1)),
            "y^3+x*y^2 zeta");
    c.check(pole_locations(poles(zeta_top(g))) == std::vector<Rat>{Rat(-1), Rat(-1, 2)},
            "y^3+x*y^2 poles");
  }

  // y^3 + x y^2 + x^k: graphs and the characteristic pole -1/2 - 1/(2k).
  for (long k = 4; k <= 12; ++k) {
    std::string name = "y^3+x*y^2+x^" + std::to_string(k);
    ResolutionGraph g = resolve_text(name);
    c.check(g == expected_y3xy2xk(k), name + ": graph shape");
    std::vector<Rat> small = below_half(pole_locations(poles(zeta_top(g))));
    std::vector<Rat> want{Rat(-1), Rat(-1, 2) - Rat(1, 2 * k)};
    c.check(small == want, name + ": small poles " + join_rats(small));
  }

  // Triple-point representatives: -1/2 - 1/12, -1/2 - 1/18, -1/2 - 1/30.
  {
    auto check_pair = [&](const std::string& text, const Rat& second) {
      std::vector<Rat> locs = pole_locations(poles(zeta_top(resolve_text(text))));
      c.check(locs == std::vector<Rat>{Rat(-1), second}, text + ": poles " + join_rats(locs));
    };
    check_pair("y^3+x^4", Rat(-1, 2) - Rat(1, 12));
    check_pair("y^3+y*x^3", Rat(-1, 2) - Rat(1, 18));
    check_pair("y^3+x^5", Rat(-1, 2) - Rat(1, 30));
  }

  // x^3 y^2 + x^k: closed forms, 2-restriction, suspension, substitution.
  for (long k = 5; k <= 16; ++k) {
    std::string name = "x^3*y^2+x^" + std::to_string(k);
    ResolutionGraph g = resolve_text(name);
    RatFun1 zf = zeta_top(g);
    RatFun1 zf2 = zeta_d(g, 2);
    c.check(zf == family::curve_display(k).reduced(), name + ": curve closed form");
    c.check(zf2 == family::curve_zeta2_closed(k), name + ": 2-restricted closed form");
    RatFun1 zF = suspend_zeta(zf, zf2);
    c.check(zF == family::suspended_display(k).reduced(), name + ": suspended closed form");
    Rat pt = family::suspended_substitution_point(k);
    Rat val = family::suspended_display(k).num.eval(pt);
    c.check(val == family::suspended_substitution_value(k) && !val.is_zero(),
            name + ": numerator substitution value " + val.to_string());
  }

  // Suspensions of y^2 + x^i: pole pair {-1 - 1/i, -1}.
  for (long i = 2; i <= 10; ++i) {
    std::string name = "y^2+x^" + std::to_string(i);
    ResolutionGraph g = resolve_text(name);
    RatFun1 zF = suspend_zeta(zeta_top(g), zeta_d(g, 2));
    std::vector<Rat> locs = pole_locations(poles(zF));
    c.check(locs == std::vector<Rat>{Rat(-1) - Rat(1, i), Rat(-1)},
            name + " suspended: poles " + join_rats(locs));
    if (i == 2)
      c.check(zF == RatFun1(lin(3, 1), lin(1, 1) * lin(3, 2)), "suspended y^2+x^2 closed form");
  }

  // Three-variable family: displayed-numerator substitution identity.
  for (long n = 0; n <= 3; ++n) {
    for (long k = n + 4; k <= n + 12; ++k) {
      std::string name = "threevar n=" + std::to_string(n) + " k=" + std::to_string(k);
      DisplayForm d = family::threevar_display(n, k);
      Rat val = d.num.eval(family::threevar_substitution_point(n, k));
      c.check(val == family::threevar_substitution_value(n, k),
              name + ": substitution value " + val.to_string());
      c.check(val.is_zero() == (k == 2 * n + 1), name + ": vanishing pattern");
      if (n == 0 && k >= 5)  // curve family (and so its suspension) starts at k = 5
        c.check(d.reduced() == family::suspended_display(k).reduced(),
                name + ": does not reduce to the suspension form");
    }
  }
  return c.res;
}

SuiteResult suite_hodge(const SuiteOptions& opt) {
  (void)opt;
  Checker c("hodge-specialization");
  const std::vector<std::string> names = {
      "y",         "y^2",         "y^2+x^3",     "y^2+x^4",     "y^2+x^5",
      "y^2+x^6",   "y^2+x^7",     "x*y*(x+y)",   "y^3+x*y^2",   "y^3+x^4",
      "y^3+x^5",   "x^3*y^2+x^5", "x^3*y^2+x^6", "y^3+x*y^2+x^4"};
  const Rat tests[] = {Rat(1), Rat(1, 2), Rat(2), Rat(3), Rat(1, 3)};
  for (const auto& text : names) {
    ResolutionGraph g = resolve_text(text);
    HodgeZeta zh = zeta_hodge(g);
    RatFun1 z = zeta_top(g);
    for (const Rat& v : tests) {
      bool ok = false;
      std::string note = text + ": specialization at s=" + v.to_string();
      try {
        auto zv = z.eval(v);
        ok = zv.has_value() && hodge_specialize_top(zh, v) == *zv;
      } catch (const PoleAtSpecialization&) {
        note += " diverged";
      }
      c.check(ok, note);
    }
    // The refinement must diverge wherever the plain zeta has a pole.
    for (const auto& p : poles(z)) {
      bool threw = false;
      try {
        hodge_specialize_top(zh, p.location);
      } catch (const PoleAtSpecialization&) {
        threw = true;
      }
      c.check(threw, text + ": no divergence at pole " + p.location.to_string());
    }
    // Small poles at the refined level obey the same admissible form.
    for (const Rat& cand : candidate_poles(g)) {
      if (!(cand < Rat(-1, 2)) || hodge_pole_order(zh, cand) <= 0) continue;
      Rat inv = (Rat(-1, 2) - cand).inverse();
      c.check(inv.is_integer() && inv >= Rat(2),
              text + ": refined pole " + cand.to_string() + " is off the admissible list");
    }
  }
  c.check(hodge_pole_order(zeta_hodge(resolve_text("y^2+x^3")), Rat(-5, 6)) == 1,
          "cusp refined pole order at -5/6");
  c.check(hodge_pole_order(zeta_hodge(resolve_text("y^2")), Rat(-1, 2)) == 1,
          "double line refined pole order at -1/2");
  return c.res;
}

}  // namespace

std::vector<CorpusGerm> paper_corpus() {
  std::vector<CorpusGerm> v;
  auto add = [&](const std::string& text) { v.push_back({text, text}); };
  add("y");
  add("y^2");
  add("x*y");
  for (long k = 2; k <= 16; ++k) add("y^2+x^" + std::to_string(k));
  add("x*y*(x+y)");
  add("y^3+x*y^2");
  for (long k = 4; k <= 12; ++k) add("y^3+x*y^2+x^" + std::to_string(k));
  add("y^3+x^4");
  add("y^3+y*x^3");
  add("y^3+x^5");
  for (long k = 5; k <= 16; ++k) add("x^3*y^2+x^" + std::to_string(k));
  return v;
}

std::vector<std::string> random_germs(const RandomGermOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  // Raw engine draws with modulo keep the stream platform-independent;
  // standard distributions are implementation-defined.
  auto draw = [&](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  int lo_deg = static_cast<int>(std::max<long>(1, opt.min_multiplicity));
  std::vector<std::string> out;
  while (static_cast<int>(out.size()) < opt.count) {
    int terms = static_cast<int>(draw(2, 6));
    std::map<std::pair<int, int>, long> acc;
    for (int t = 0; t < terms; ++t) {
      int tot = static_cast<int>(draw(lo_deg, opt.max_total_degree));
      int i = static_cast<int>(draw(0, tot));
      acc[{i, tot - i}] += draw(1, 9) * (draw(0, 1) == 0 ? 1 : -1);
    }
    std::string text;
    for (const auto& [e, coef] : acc) {
      if (coef == 0) continue;
      if (text.empty())
        text += coef < 0 ? "-" : "";
      else
        text += coef < 0 ? " - " : " + ";
      text += std::to_string(std::abs(coef));
      if (e.first > 0) text += "*x" + (e.first > 1 ? "^" + std::to_string(e.first) : "");
      if (e.second > 0) text += "*y" + (e.second > 1 ? "^" + std::to_string(e.second) : "");
    }
    if (text.empty()) continue;  // all terms cancelled
    out.push_back(text);
  }
  return out;
}

std::vector<std::string> suite_names() {
  return {"relations",      "theorem2_4",     "theorem2_8",         "corollary2_6",
          "configs",        "paper-families", "hodge-specialization"};
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "relations") return suite_relations(opt);
  if (name == "theorem2_4") return suite_theorem2_4(opt);
  if (name == "theorem2_8") return suite_theorem2_8(opt);
  if (name == "corollary2_6") return suite_corollary2_6(opt);
  if (name == "configs") return suite_configs(opt);
  if (name == "paper-families") return suite_paper_families(opt);
  if (name == "hodge-specialization") return suite_hodge(opt);
  throw ParamOutOfRange("unknown suite: " + name);
}

std::vector<std::string> sweep_families() { return {"y2xk", "x3y2xk", "suspension", "threevar"}; }

std::vector<SweepRecord> run_sweep(const std::string& family_name, long lo, long hi, long n) {
  auto fams = sweep_families();
  if (std::find(fams.begin(), fams.end(), family_name) == fams.end())
    throw ParamOutOfRange("unknown sweep family: " + family_name);
  if (lo > hi) throw ParamOutOfRange("empty sweep range");
  if (family_name == "threevar" && n < 0) throw ParamOutOfRange("n must be >= 0");
  long min_k = family_name == "y2xk" ? 2 : family_name == "threevar" ? n + 4 : 5;
  if (lo < min_k)
    throw ParamOutOfRange("family is defined from k = " + std::to_string(min_k));

  std::vector<SweepRecord> out;
  for (long k = lo; k <= hi; ++k) {
    SweepRecord rec;
    rec.k = k;
    rec.n = family_name == "threevar" ? n : 0;
    if (family_name == "y2xk") {
      ResolutionGraph g = resolve_text("y^2+x^" + std::to_string(k));
      std::vector<Rat> locs = pole_locations(poles(zeta_top(g)));
      rec.ok = g == expected_y2xk(k) && locs == predicted_poles(g);
      rec.detail = "poles " + join_rats(locs) + (rec.ok ? "" : " (mismatch)");
    } else if (family_name == "x3y2xk") {
      ResolutionGraph g = resolve_text("x^3*y^2+x^" + std::to_string(k));
      RatFun1 zf = zeta_top(g);
      rec.ok = zf == family::curve_display(k).reduced() &&
               zeta_d(g, 2) == family::curve_zeta2_closed(k);
      rec.detail = "zeta " + zf.to_string() + (rec.ok ? "" : " (mismatch)");
    } else if (family_name == "suspension") {
      ResolutionGraph g = resolve_text("x^3*y^2+x^" + std::to_string(k));
      RatFun1 zF = suspend_zeta(zeta_top(g), zeta_d(g, 2));
      Rat val = family::suspended_display(k).num.eval(family::suspended_substitution_point(k));
      rec.ok = zF == family::suspended_display(k).reduced() &&
               val == family::suspended_substitution_value(k) && !val.is_zero();
      rec.detail = "substitution value " + val.to_string() + (rec.ok ? "" : " (mismatch)");
    } else {
      DisplayForm d = family::threevar_display(n, k);
      Rat val = d.num.eval(family::threevar_substitution_point(n, k));
      rec.ok = val == family::threevar_substitution_value(n, k) &&
               val.is_zero() == (k == 2 * n + 1);
      rec.detail = "substitution value " + val.to_string() + (rec.ok ? "" : " (mismatch)");
    }
    out.push_back(rec);
  }
  return out;
}

}  // namespace germzeta
