#include <array>
#include <vector>

#include "doctest.h"
#include "germzeta/surface.hpp"

using namespace germzeta;

namespace {

SurfaceConfig preset_config(const std::string& name, std::vector<Rat> alphas) {
  return make_config(preset_lines(name), std::move(alphas));
}

}  // namespace

TEST_CASE("presets expose the documented line counts") {
  CHECK(preset_lines("one-line").size() == 1);
  CHECK(preset_lines("two-lines").size() == 2);
  CHECK(preset_lines("three-concurrent").size() == 3);
  CHECK(preset_lines("three-general").size() == 3);
  CHECK(preset_lines("three-concurrent-plus-one").size() == 4);
  CHECK(preset_lines("four-general").size() == 4);
  CHECK_THROWS_AS(preset_lines("five-random"), ParamOutOfRange);
}

TEST_CASE("config creation enforces the weight relation") {
  // sum (alpha - 1) + 3 = 0
  CHECK_NOTHROW(preset_config("three-general", {Rat(2), Rat(2), Rat(-4)}));
  CHECK_THROWS_AS(preset_config("three-general", {Rat(2), Rat(2), Rat(-2)}), ParamOutOfRange);
  CHECK_THROWS_AS(preset_config("two-lines", {Rat(1)}), ParamOutOfRange);

  SurfaceConfig ok = preset_config("one-line", {Rat(-2)});
  CHECK(check_creation_relation(ok));
  ok.alphas[0] = Rat(5);
  CHECK(!check_creation_relation(ok));
}

TEST_CASE("degenerate line lists are rejected") {
  std::vector<std::array<Rat, 3>> repeated = {{Rat(1), Rat(0), Rat(0)},
                                              {Rat(2), Rat(0), Rat(0)}};
  CHECK_THROWS_AS(make_config(repeated, {Rat(0), Rat(-1)}), ParamOutOfRange);
  std::vector<std::array<Rat, 3>> zero = {{Rat(0), Rat(0), Rat(0)}};
  CHECK_THROWS_AS(make_config(zero, {Rat(-2)}), ParamOutOfRange);
}

TEST_CASE("blowing up a triple point forces weight -1") {
  // relation at the center: sum mu_k (alpha_k - 1) + 2
  CHECK(alpha_blowup({{Rat(5), 1}, {Rat(-3), 1}, {Rat(-2), 1}}) == Rat(-1));

  ConfigResolution res =
      arrangement_resolve(preset_config("three-concurrent", {Rat(5), Rat(-3), Rat(-2)}));
  CHECK(res.blowups == 1);
  REQUIRE(res.curve_alpha.size() == 4);
  CHECK(res.num_lines == 3);
  CHECK(res.curve_alpha[3] == Rat(-1));
  // after the blow-up each line meets only the exceptional
  CHECK(res.points == std::vector<std::pair<int, int>>{{0, 3}, {1, 3}, {2, 3}});
}

TEST_CASE("general position needs no blow-ups") {
  ConfigResolution res =
      arrangement_resolve(preset_config("four-general", {Rat(2), Rat(2), Rat(2), Rat(-5)}));
  CHECK(res.blowups == 0);
  CHECK(res.curve_alpha.size() == 4);
  CHECK(res.points.size() == 6);  // all pairs meet in distinct points
}

TEST_CASE("euler characteristic bookkeeping holds on every preset") {
  CHECK(chi_bookkeeping_holds(arrangement_resolve(preset_config("one-line", {Rat(-2)}))));
  CHECK(chi_bookkeeping_holds(
      arrangement_resolve(preset_config("two-lines", {Rat(3), Rat(-4)}))));
  CHECK(chi_bookkeeping_holds(
      arrangement_resolve(preset_config("three-concurrent", {Rat(5), Rat(-3), Rat(-2)}))));
  CHECK(chi_bookkeeping_holds(
      arrangement_resolve(preset_config("three-general", {Rat(2), Rat(2), Rat(-4)}))));
  CHECK(chi_bookkeeping_holds(arrangement_resolve(
      preset_config("three-concurrent-plus-one", {Rat(5), Rat(-3), Rat(-2), Rat(1)}))));
  CHECK(chi_bookkeeping_holds(
      arrangement_resolve(preset_config("four-general", {Rat(2), Rat(2), Rat(2), Rat(-5)}))));
}

TEST_CASE("vanishing configurations contribute zero") {
  CHECK(contribution_surface(arrangement_resolve(preset_config("one-line", {Rat(-2)}))) ==
        Rat(0));
  CHECK(contribution_surface(
            arrangement_resolve(preset_config("two-lines", {Rat(3), Rat(-4)}))) == Rat(0));
  CHECK(contribution_surface(arrangement_resolve(
            preset_config("three-concurrent", {Rat(5), Rat(-3), Rat(-2)}))) == Rat(0));
  CHECK(contribution_surface(arrangement_resolve(
            preset_config("three-general", {Rat(2), Rat(2), Rat(-4)}))) == Rat(0));
  CHECK(contribution_surface(arrangement_resolve(preset_config(
            "three-concurrent-plus-one", {Rat(5), Rat(-3), Rat(-2), Rat(1)}))) == Rat(0));
  // the cleared polynomial form vanishes as well
  CHECK(contribution_cleared(arrangement_resolve(
            preset_config("three-concurrent", {Rat(5), Rat(-3), Rat(-2)}))) == Rat(0));
}

TEST_CASE("four general lines give the nonzero witness 3/20") {
  ConfigResolution res =
      arrangement_resolve(preset_config("four-general", {Rat(2), Rat(2), Rat(2), Rat(-5)}));
  CHECK(contribution_surface(res) == Rat(3, 20));
  CHECK(contribution_surface(res, 2) == Rat(3, 40));
  CHECK(contribution_cleared(res) != Rat(0));
}

TEST_CASE("zero weights are flagged, not divided by") {
  // alphas (0, -1) satisfy the relation but the first line has weight zero
  ConfigResolution res =
      arrangement_resolve(preset_config("two-lines", {Rat(0), Rat(-1)}));
  CHECK_THROWS_AS(contribution_surface(res), AlphaZero);
  CHECK(contribution_cleared(res) == Rat(0));  // still zero identically
}

TEST_CASE("stability probes do not change the contribution") {
  ConfigResolution four =
      arrangement_resolve(preset_config("four-general", {Rat(2), Rat(2), Rat(2), Rat(-5)}));
  CHECK(stability_probe(four, ProbeKind::FreePoint));
  CHECK(stability_probe(four, ProbeKind::OnCurve, 2));
  CHECK(stability_probe(four, ProbeKind::AtDoublePoint, 3));

  ConfigResolution conc =
      arrangement_resolve(preset_config("three-concurrent", {Rat(5), Rat(-3), Rat(-2)}));
  CHECK(stability_probe(conc, ProbeKind::FreePoint));
  CHECK(stability_probe(conc, ProbeKind::OnCurve, 0));
  CHECK(stability_probe(conc, ProbeKind::AtDoublePoint, 1));
}

TEST_CASE("randomized cancellation suite passes with the default seed") {
  ConfigSuiteReport rep = configuration_suite(0x5E7A);
  CHECK(rep.pass);
  CHECK(rep.four_general_witness == Rat(3, 20));
  CHECK(rep.four_general_nonzero_samples >= 20);
  REQUIRE(rep.entries.size() == 6);
  for (const auto& e : rep.entries) {
    CHECK(e.probes_ok);
    CHECK(e.samples >= 20);
    if (e.name == "four-general") {
      // the one configuration where cancellation genuinely fails
      CHECK(!e.all_zero);
    } else {
      CHECK(e.all_zero);
      CHECK(e.grid_points > 0);
    }
  }
}

TEST_CASE("surface numerical data covers the full table") {
  auto data = [](bool point, long mu, std::vector<std::pair<long, long>> through) {
    NumericalData3DQuery q;
    q.point_center = point;
    q.mu = mu;
    q.through = std::move(through);
    return numerical_data_3d(q);
  };
  // point centers
  CHECK(data(true, 2, {}) == std::pair{2L, 3L});
  CHECK(data(true, 2, {{5, 3}}) == std::pair{7L, 5L});
  CHECK(data(true, 2, {{5, 3}, {7, 4}}) == std::pair{14L, 8L});
  CHECK(data(true, 2, {{5, 3}, {7, 4}, {11, 6}}) == std::pair{25L, 13L});
  // curve centers
  CHECK(data(false, 2, {}) == std::pair{2L, 2L});
  CHECK(data(false, 2, {{5, 3}}) == std::pair{7L, 4L});
  CHECK(data(false, 2, {{5, 3}, {7, 4}}) == std::pair{14L, 7L});
  // through-count limits: at most 3 for points, 2 for curves
  CHECK_THROWS_AS(data(true, 1, {{2, 2}, {3, 3}, {4, 4}, {5, 5}}), InvalidThroughCount);
  CHECK_THROWS_AS(data(false, 1, {{2, 2}, {3, 3}, {4, 4}}), InvalidThroughCount);
}
