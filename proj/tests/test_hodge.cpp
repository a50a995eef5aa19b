#include "doctest.h"
#include "germzeta/germ.hpp"
#include "germzeta/hodge.hpp"
#include "germzeta/parse.hpp"
#include "germzeta/resolve.hpp"
#include "germzeta/zeta.hpp"

using namespace germzeta;

namespace {

HodgeZeta hodge_of(const std::string& text) {
  return zeta_hodge(resolve_germ(germ_localize(parse_poly(text))));
}

// w^i T^j monomial in the shared bivariate container
BiPoly wt(int i, int j, long c = 1) { return BiPoly::monomial(i, j, Rat(c)); }

}  // namespace

TEST_CASE("hodge zeta of y^2 in closed form") {
  HodgeZeta zh = hodge_of("y^2");
  // (w - 1) T^2 / (w^2 (w - T^2))
  CHECK(zh.num == wt(1, 2) - wt(0, 2));
  CHECK(zh.den == wt(3, 0) - wt(2, 2));
}

TEST_CASE("specialization at non-poles agrees with the plain zeta") {
  const std::vector<std::string> germs = {"y",       "y^2",       "y^2+x^3",
                                          "x^2+y^2", "x*y*(x+y)", "y^3+x^4"};
  const std::vector<Rat> values = {Rat(1), Rat(1, 2), Rat(2), Rat(3), Rat(1, 3)};
  for (const auto& text : germs) {
    ResolutionGraph g = resolve_germ(germ_localize(parse_poly(text)));
    HodgeZeta zh = zeta_hodge(g);
    RatFun1 z = zeta_top(g);
    for (const Rat& v : values) {
      auto plain = z.eval(v);
      REQUIRE(plain.has_value());
      CHECK(hodge_specialize_top(zh, v) == *plain);
    }
  }
}

TEST_CASE("documented specialization values") {
  CHECK(hodge_specialize_top(hodge_of("y^2"), Rat(-1, 3)) == Rat(3));
  CHECK(hodge_specialize_top(hodge_of("y"), Rat(0)) == Rat(1));
  CHECK(hodge_specialize_top(hodge_of("y^2+x^3"), Rat(-1, 2)) == Rat(3));
}

TEST_CASE("specialization diverges exactly at the poles") {
  HodgeZeta smooth = hodge_of("y^2");
  CHECK_THROWS_AS(hodge_specialize_top(smooth, Rat(-1, 2)), PoleAtSpecialization);

  HodgeZeta cusp = hodge_of("y^2+x^3");
  CHECK_THROWS_AS(hodge_specialize_top(cusp, Rat(-5, 6)), PoleAtSpecialization);
  CHECK_THROWS_AS(hodge_specialize_top(cusp, Rat(-1)), PoleAtSpecialization);
}

TEST_CASE("pole orders along the hodge denominator factors") {
  HodgeZeta ytwo = hodge_of("y^2");
  CHECK(hodge_pole_order(ytwo, Rat(-1, 2)) == 1);  // along w - T^2
  CHECK(hodge_pole_order(ytwo, Rat(-1, 3)) == 0);

  HodgeZeta cusp = hodge_of("y^2+x^3");
  CHECK(hodge_pole_order(cusp, Rat(-5, 6)) == 1);  // along w^5 - T^6
  CHECK(hodge_pole_order(cusp, Rat(-1)) == 1);

  CHECK_THROWS_AS(hodge_pole_order(cusp, Rat(1, 2)), ParamOutOfRange);
}

TEST_CASE("hodge poles below -1/2 stay in the admissible set") {
  const std::vector<std::string> germs = {"y^2+x^3",  "y^2+x^5", "y^2+x^7",
                                          "y^3+x^4",  "y^3+x^5", "x^3*y^2+x^5",
                                          "x*y*(x+y)"};
  for (const auto& text : germs) {
    ResolutionGraph g = resolve_germ(germ_localize(parse_poly(text)));
    HodgeZeta zh = zeta_hodge(g);
    for (const Rat& cand : candidate_poles(g)) {
      if (!(cand < Rat(-1, 2))) continue;
      if (hodge_pole_order(zh, cand) <= 0) continue;
      // pole location must be -1/2 - 1/i for an integer i >= 2
      Rat gap = (cand + Rat(1, 2)).abs();
      CHECK(gap.num() == 1);
      CHECK(gap.den() >= 2);
    }
  }
}
