#include <vector>

#include "doctest.h"
#include "germzeta/germ.hpp"
#include "germzeta/parse.hpp"
#include "germzeta/resolve.hpp"

using namespace germzeta;

namespace {

ResolutionGraph resolve_text(const std::string& text) {
  return resolve_germ(germ_localize(parse_poly(text)));
}

ResolutionGraph graph_of(std::vector<ExceptionalDatum> exc, std::vector<std::pair<int, int>> edges,
                         std::vector<BranchAttachment> branches) {
  ResolutionGraph g;
  g.exceptionals = std::move(exc);
  g.edges = std::move(edges);
  g.branches = std::move(branches);
  g.canonicalize();
  return g;
}

}  // namespace

TEST_CASE("cusp resolves to the three-vertex chain") {
  ResolutionGraph g = resolve_text("y^2+x^3");
  ResolutionGraph want = graph_of({{1, 2, 2}, {2, 3, 3}, {3, 6, 5}}, {{1, 3}, {2, 3}},
                                  {{3, 1, 1}});
  CHECK(g == want);
  CHECK(g.neighbor_weight(3) == 3);
  CHECK(g.chi_open(3) == -1);
  CHECK(g.chi_open(1) == 1);
}

TEST_CASE("already normal crossing germs need zero blow-ups") {
  ResolutionGraph smooth = resolve_text("y^2");
  CHECK(smooth.exceptionals.empty());
  REQUIRE(smooth.nc_at_origin.has_value());
  CHECK(smooth.nc_at_origin->branch_N == std::vector<long>{2});
  CHECK(!smooth.nc_at_origin->transversal_pair);

  // y^3 + x y^2 = y^2 (y + x): two transversal smooth branches
  ResolutionGraph pair = resolve_text("y^3+x*y^2");
  CHECK(pair.exceptionals.empty());
  REQUIRE(pair.nc_at_origin.has_value());
  CHECK(pair.nc_at_origin->branch_N == std::vector<long>{1, 2});
  CHECK(pair.nc_at_origin->transversal_pair);
}

TEST_CASE("three pairwise transversal lines need one blow-up") {
  ResolutionGraph g = resolve_text("x*y*(x+y)");
  ResolutionGraph want =
      graph_of({{1, 3, 2}}, {}, {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  CHECK(g == want);
  CHECK(g.neighbor_weight(1) == 3);
}

TEST_CASE("conjugate branch points are recorded as one orbit") {
  // x^2 + y^2 has two complex branches meeting the exceptional in conjugate points
  ResolutionGraph g = resolve_text("x^2+y^2");
  ResolutionGraph want = graph_of({{1, 2, 2}}, {}, {{1, 1, 2}});
  CHECK(g == want);
  CHECK(g.neighbor_weight(1) == 2);

  // x^4 + y^4: four simple points in one degree-4 rational cluster
  ResolutionGraph q = resolve_text("x^4+y^4");
  ResolutionGraph wantq = graph_of({{1, 4, 2}}, {}, {{1, 1, 4}});
  CHECK(q == wantq);
}

TEST_CASE("tangent smooth branch produces the two-step data") {
  // y^2 + x^4 = (y - x^2)(y + x^2): two branches tangent to each other
  ResolutionGraph g = resolve_text("y^2+x^4");
  ResolutionGraph want = graph_of({{1, 2, 2}, {2, 4, 3}}, {{1, 2}},
                                  {{2, 1, 2}});
  CHECK(g == want);
}

TEST_CASE("triple point with a tangent pair resolves through x5") {
  ResolutionGraph g = resolve_text("y^3+x^4");
  ResolutionGraph want = graph_of({{1, 3, 2}, {2, 4, 3}, {3, 8, 5}, {4, 12, 7}},
                                  {{2, 3}, {1, 4}, {3, 4}}, {{4, 1, 1}});
  CHECK(g == want);
}

TEST_CASE("irrational repeated centers are reported, not silently mangled") {
  // (y^2 - 2x^2)^2 + x^5 has tangent directions y = ±sqrt(2) x
  CHECK_THROWS_AS(resolve_text("(y^2-2*x^2)^2+x^5"), UnsupportedIrrationalCenter);
}

TEST_CASE("numerical data of a new exceptional") {
  CHECK(numerical_data_2d({}, 2) == std::pair{2L, 2L});
  CHECK(numerical_data_2d({{1, 2, 2}}, 1) == std::pair{3L, 3L});
  CHECK(numerical_data_2d({{1, 2, 2}, {2, 4, 3}}, 1) == std::pair{7L, 5L});
  CHECK_THROWS_AS(numerical_data_2d({{1, 2, 2}, {2, 4, 3}, {3, 6, 5}}, 1), TooManyThrough);
}

TEST_CASE("audit trail matches the created exceptionals") {
  ResolveResult rr = resolve_germ_full(germ_localize(parse_poly("y^2+x^3")));
  REQUIRE(rr.audit.size() == 3);
  CHECK(rr.audit.size() == rr.graph.exceptionals.size());
  for (size_t i = 0; i < rr.audit.size(); ++i)
    CHECK(rr.audit[i].exc_id == static_cast<int>(i) + 1);
  // first center is the origin with the full multiplicity of the germ
  CHECK(rr.audit[0].mu == 2);
  CHECK(rr.audit[0].through_count == 0);
  // last blow-up sits on two exceptionals (the tangent point)
  CHECK(rr.audit[2].through_count == 2);
}

TEST_CASE("blow-up count grows linearly in the even family") {
  for (long r = 1; r <= 5; ++r) {
    ResolveResult rr =
        resolve_germ_full(germ_localize(parse_poly("y^2+x^" + std::to_string(2 * r))));
    CHECK(rr.audit.size() == static_cast<size_t>(r));
  }
}

TEST_CASE("resolution limit guard") {
  ResolveOptions opt;
  opt.max_blowups = 1;
  CHECK_THROWS_AS(resolve_germ(germ_localize(parse_poly("y^2+x^3")), opt),
                  ResolutionLimitExceeded);
}

TEST_CASE("graphs compare equal after canonicalization regardless of insert order") {
  ResolutionGraph a = graph_of({{1, 2, 2}}, {}, {{1, 1, 2}});
  ResolutionGraph b;
  b.exceptionals = {{1, 2, 2}};
  b.branches = {{1, 1, 2}};
  CHECK(a == b);
}
