#include <vector>

#include "doctest.h"
#include "germzeta/germ.hpp"
#include "germzeta/parse.hpp"
#include "germzeta/resolve.hpp"
#include "germzeta/zeta.hpp"

using namespace germzeta;

namespace {

ResolutionGraph resolve_text(const std::string& text) {
  return resolve_germ(germ_localize(parse_poly(text)));
}

UniPoly lin(long a, long b) { return UniPoly::from_coeffs({Rat(a), Rat(b)}); }  // a + b s

}  // namespace

TEST_CASE("cusp zeta function, poles and residues") {
  ResolutionGraph g = resolve_text("y^2+x^3");
  RatFun1 z = zeta_top(g);
  CHECK(z == RatFun1(lin(5, 4), lin(1, 1) * lin(5, 6)));

  std::vector<PoleInfo> ps = poles(z);
  REQUIRE(ps.size() == 2);
  CHECK(ps[0].location == Rat(-1));
  CHECK(ps[0].order == 1);
  CHECK(ps[1].location == Rat(-5, 6));
  CHECK(ps[1].order == 1);
  CHECK(ps[1].leading == Rat(5, 3));

  CHECK(lct(g) == Rat(5, 6));
  CHECK(candidate_poles(g) == std::vector<Rat>{Rat(-1), Rat(-5, 6)});
  CHECK(predicted_poles(g) == std::vector<Rat>{Rat(-1), Rat(-5, 6)});
}

TEST_CASE("zeta of zero-blow-up germs") {
  ResolutionGraph g = resolve_text("y^2");
  CHECK(zeta_top(g) == RatFun1(UniPoly::constant(Rat(1)), lin(1, 2)));
  CHECK(lct(g) == Rat(1, 2));
  CHECK(predicted_poles(g) == std::vector<Rat>{Rat(-1, 2)});

  // transversal pair y^2 (y + x)
  ResolutionGraph pair = resolve_text("y^3+x*y^2");
  CHECK(zeta_top(pair) == RatFun1(UniPoly::constant(Rat(1)), lin(1, 1) * lin(1, 2)));
  std::vector<PoleInfo> ps = poles(zeta_top(pair));
  REQUIRE(ps.size() == 2);
  CHECK(ps[0].location == Rat(-1));
  CHECK(ps[1].location == Rat(-1, 2));
}

TEST_CASE("node x^2+y^2 gives a double pole at -1") {
  RatFun1 z = zeta_top(resolve_text("x^2+y^2"));
  CHECK(z == RatFun1(UniPoly::constant(Rat(1)), lin(1, 1) * lin(1, 1)));
  std::vector<PoleInfo> ps = poles(z);
  REQUIRE(ps.size() == 1);
  CHECK(ps[0].location == Rat(-1));
  CHECK(ps[0].order == 2);
  CHECK(ps[0].leading == Rat(1));
}

TEST_CASE("three lines: zeta, lct and predicted poles") {
  ResolutionGraph g = resolve_text("x*y*(x+y)");
  CHECK(zeta_top(g) == RatFun1(lin(2, -1), lin(1, 1) * lin(2, 3)));
  CHECK(lct(g) == Rat(2, 3));
  CHECK(predicted_poles(g) == std::vector<Rat>{Rat(-1), Rat(-2, 3)});
}

TEST_CASE("restricted zeta keeps only strata with divisible multiplicities") {
  ResolutionGraph g = resolve_text("y^2+x^3");
  CHECK(zeta_d(g, 1) == zeta_top(g));
  // surviving strata: E1(2,2), E3(6,5) and their edge
  CHECK(zeta_d(g, 2) == RatFun1(UniPoly::constant(Rat(2)), lin(5, 6)));
  // d = 5 kills everything
  CHECK(zeta_d(g, 5).is_zero());

  CHECK(zeta_d(resolve_text("x^3*y^2+x^5"), 2).is_zero());
  CHECK(zeta_d(resolve_text("x^3*y^2+x^6"), 2) ==
        RatFun1(UniPoly::constant(Rat(1)), lin(5, 12)));
}

TEST_CASE("alpha values at the cusp core vertex") {
  ResolutionGraph g = resolve_text("y^2+x^3");
  std::vector<AlphaEntry> av = alpha_values(g, 3);
  REQUIRE(av.size() == 3);
  // neighbors sorted: exceptionals by id, then branch orbits
  CHECK(av[0].id == 1);
  CHECK(av[0].alpha == Rat(1, 3));
  CHECK(av[1].id == 2);
  CHECK(av[1].alpha == Rat(1, 2));
  CHECK(av[2].is_branch);
  CHECK(av[2].alpha == Rat(1, 6));
}

TEST_CASE("alpha can vanish when a neighbor shares the candidate ratio") {
  ResolutionGraph g = resolve_text("x^2+y^2");
  std::vector<AlphaEntry> av = alpha_values(g, 1);
  REQUIRE(av.size() == 1);
  CHECK(av[0].is_branch);
  CHECK(av[0].weight == 2);
  CHECK(av[0].alpha == Rat(0));
  CHECK_THROWS_AS(contribution_residue(g, 1), AlphaZero);
}

TEST_CASE("vertex relation and congruence hold on resolved graphs") {
  for (const auto& text : {"y^2+x^3", "x*y*(x+y)", "x^2+y^2", "y^3+x^4", "x^3*y^2+x^7"}) {
    ResolutionGraph g = resolve_text(text);
    for (const auto& e : g.exceptionals) {
      CHECK(check_relation_alpha(g, e.id));
      CHECK(check_congruence(g, e.id));
    }
  }
}

TEST_CASE("residue contribution matches the analytic residue") {
  ResolutionGraph g = resolve_text("y^2+x^3");
  CHECK(contribution_residue(g, 3) == Rat(5, 3));
  // vertices with one or two neighbors contribute zero
  CHECK(contribution_residue(g, 1) == Rat(0));
  CHECK(contribution_residue(g, 2) == Rat(0));
  // d = 2 filters the neighbor set down to E1; matches the residue of zeta_d
  CHECK(contribution_residue(g, 3, 2) == Rat(1, 3));
  std::vector<PoleInfo> ps = poles(zeta_d(g, 2));
  REQUIRE(ps.size() == 1);
  CHECK(ps[0].location == Rat(-5, 6));
  CHECK(ps[0].leading == Rat(1, 3));
  // d must divide the vertex multiplicity itself
  CHECK_THROWS_AS(contribution_residue(g, 2, 2), ParamOutOfRange);
}

TEST_CASE("poles of handwritten rational functions") {
  RatFun1 z = RatFun1(lin(3, 1), lin(1, 1) * lin(3, 2));  // (s+3)/((s+1)(2s+3))
  std::vector<PoleInfo> ps = poles(z);
  REQUIRE(ps.size() == 2);
  CHECK(ps[0].location == Rat(-3, 2));
  CHECK(ps[1].location == Rat(-1));

  CHECK(poles(RatFun1(UniPoly::constant(Rat(7)))).empty());
  CHECK_THROWS_AS(poles(RatFun1(UniPoly::constant(Rat(1)),
                                UniPoly::from_coeffs({Rat(-2), Rat(0), Rat(1)}))),
                  NonRationalDenominatorRoot);
}

TEST_CASE("small pole classification") {
  auto mk = [](std::vector<Rat> locs) {
    std::vector<PoleInfo> ps;
    for (const auto& l : locs) ps.push_back({l, 1, Rat(1)});
    return ps;
  };
  SmallPoleReport ok = classify_small_poles(mk({Rat(-1), Rat(-5, 6)}));
  CHECK(ok.pass());
  CHECK(ok.below_half == std::vector<Rat>{Rat(-1), Rat(-5, 6)});
  CHECK(ok.window == std::vector<Rat>{Rat(-5, 6)});

  // -7/10 = -1/2 - 1/5 is admissible
  CHECK(classify_small_poles(mk({Rat(-7, 10)})).pass());

  // -4/5 is not of the form -1/2 - 1/i
  SmallPoleReport bad = classify_small_poles(mk({Rat(-4, 5)}));
  CHECK(!bad.pass());
  CHECK(bad.offenders == std::vector<Rat>{Rat(-4, 5)});

  // two poles in the window (-1, -1/2]
  SmallPoleReport crowded = classify_small_poles(mk({Rat(-5, 6), Rat(-3, 4)}));
  CHECK(!crowded.pass());
  CHECK(crowded.window.size() == 2);

  // -1 is admissible (i = 2) and outside the open window
  SmallPoleReport edge = classify_small_poles(mk({Rat(-1), Rat(-1, 2)}));
  CHECK(edge.pass());
  CHECK(edge.window == std::vector<Rat>{Rat(-1, 2)});
}

TEST_CASE("combined report is self-consistent") {
  ResolutionGraph g = resolve_text("y^2+x^3");
  ZetaReport r = zeta_report(g);
  CHECK(r.zeta == zeta_top(g));
  CHECK(r.pole_list == poles(r.zeta));
  CHECK(r.candidates == candidate_poles(g));
  CHECK(r.lct_value == Rat(5, 6));
}
