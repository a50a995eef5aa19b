#include <string>

#include "doctest.h"
#include "germzeta/germ.hpp"
#include "germzeta/parse.hpp"
#include "germzeta/report.hpp"
#include "germzeta/resolve.hpp"
#include "germzeta/zeta.hpp"

using namespace germzeta;

namespace {

ResolutionGraph resolve_text(const std::string& text) {
  return resolve_germ(germ_localize(parse_poly(text)));
}

UniPoly lin(long a, long b) { return UniPoly::from_coeffs({Rat(a), Rat(b)}); }  // a + b s

size_t count_occurrences(const std::string& hay, const std::string& needle) {
  size_t n = 0;
  for (size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size()))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("cleared coefficients are integral and jointly primitive") {
  RatFun1 z(lin(5, 4), lin(1, 1) * lin(5, 6));
  auto [num, den] = cleared_coeffs(z);
  CHECK(num == std::vector<mpz_class>{5, 4});
  CHECK(den == std::vector<mpz_class>{5, 11, 6});

  // a rational scale clears through both sides
  RatFun1 half(lin(1, 2), UniPoly::from_coeffs({Rat(1, 3), Rat(1)}));
  auto [n2, d2] = cleared_coeffs(half);
  CHECK(n2 == std::vector<mpz_class>{3, 6});
  CHECK(d2 == std::vector<mpz_class>{1, 3});
}

TEST_CASE("graph json round-trips losslessly") {
  for (const auto& text : {"y^2+x^3", "y^2", "x^2+y^2", "y^3+x*y^2", "y^3+x^4"}) {
    ResolutionGraph g = resolve_text(text);
    CHECK(graph_from_json(graph_to_json(g)) == g);
  }
}

TEST_CASE("graph json parser rejects foreign shapes") {
  CHECK_THROWS_AS(graph_from_json("{}"), BadReport);
  CHECK_THROWS_AS(graph_from_json("not json at all"), BadReport);
  CHECK_THROWS_AS(graph_from_json("[1,2,3]"), BadReport);
}

TEST_CASE("dot output for the cusp") {
  std::string dot = emit_dot(resolve_text("y^2+x^3"));
  CHECK(dot.find("E1(2,2)") != std::string::npos);
  CHECK(dot.find("E2(3,3)") != std::string::npos);
  CHECK(dot.find("E3(6,5)") != std::string::npos);
  CHECK(dot.find("branch(1)x1") != std::string::npos);
  CHECK(count_occurrences(dot, "style=filled") == 3);
  CHECK(count_occurrences(dot, "style=solid") == 1);
  CHECK(count_occurrences(dot, " -- ") == 3);  // two edges plus the branch link
}

TEST_CASE("dot output for zero-blow-up and orbit cases") {
  std::string smooth = emit_dot(resolve_text("y^2"));
  CHECK(smooth.find("branch(2)x1") != std::string::npos);
  CHECK(count_occurrences(smooth, "style=filled") == 0);
  CHECK(count_occurrences(smooth, " -- ") == 0);

  std::string node = emit_dot(resolve_text("x^2+y^2"));
  CHECK(node.find("branch(1)x2") != std::string::npos);  // one orbit of two points
}

TEST_CASE("latex output follows the documented shapes") {
  CHECK(emit_latex(RatFun1(lin(5, 4), lin(1, 1) * lin(5, 6))) ==
        "\\frac{4s+5}{(s+1)(6s+5)}");
  CHECK(emit_latex(RatFun1()) == "0");
  CHECK(emit_latex(RatFun1(UniPoly::constant(Rat(1)), lin(1, 2))) == "\\frac{1}{2s+1}");
}
