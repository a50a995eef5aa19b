#pragma once
#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "germzeta/rat.hpp"

namespace germzeta {

// Arrangement of projective lines on a plane, each carrying a residue weight
// alpha. The constructor enforces the creation relation
// sum_j (alpha_j - 1) + 3 = 0 (all lines have degree 1, point center).
struct SurfaceConfig {
  std::vector<std::array<Rat, 3>> lines;  // coefficients (a, b, c) of a*x + b*y + c*z
  std::vector<Rat> alphas;
};

// Validating factory; throws ParamOutOfRange on a relation violation,
// a degenerate (zero or repeated) line, or mismatched alpha count.
SurfaceConfig make_config(std::vector<std::array<Rat, 3>> lines, std::vector<Rat> alphas);

// The bool form of the creation relation check.
bool check_creation_relation(const SurfaceConfig& cfg);

// Weight of the curve created by blowing up a center lying on curves with the
// given weights and local multiplicities: sum_k mu_k (alpha_k - 1) + 2.
Rat alpha_blowup(const std::vector<std::pair<Rat, long>>& incident);

// Named presets: one-line, two-lines, three-concurrent, three-general,
// three-concurrent-plus-one, four-general.
std::vector<std::array<Rat, 3>> preset_lines(const std::string& name);

// Combinatorics of the resolved arrangement: curve weights (lines first, then
// created exceptionals) and the double points between curves, by index.
struct ConfigResolution {
  std::vector<Rat> curve_alpha;
  int num_lines = 0;                       // prefix of curve_alpha that is original lines
  std::vector<std::pair<int, int>> points; // normal crossing points (curve index pairs)
  int blowups = 0;
};

// Blow up every point where three or more lines meet (one round suffices for
// line arrangements) and derive the exceptional weights via alpha_blowup.
ConfigResolution arrangement_resolve(const SurfaceConfig& cfg);

// Contribution of the configuration to a residue:
// (1/N) [ chi(complement) + sum_j chi(C_j deg) / alpha_j + sum_points 1/(alpha alpha) ].
// Throws AlphaZero if any curve weight is zero.
Rat contribution_surface(const ConfigResolution& res, long N = 1);

// Same sum with denominators cleared: sum_I chi_I * prod_{j not in I} alpha_j.
// Polynomial in the weights, defined even when some alpha vanishes; zero iff
// the contribution vanishes away from the alpha = 0 locus.
Rat contribution_cleared(const ConfigResolution& res);

// Euler characteristic bookkeeping: all strata sum to chi of the blown plane.
bool chi_bookkeeping_holds(const ConfigResolution& res);

// Blow up one extra (normal crossings) point and recompute: the contribution
// must not change. Probes: a point off all curves, a free point of curve
// `index`, or the double point `points[index]`.
enum class ProbeKind { FreePoint, OnCurve, AtDoublePoint };
bool stability_probe(const ConfigResolution& res, ProbeKind kind, int index = 0, long N = 1);

// Numerical data of an exceptional surface created by a point or curve
// center lying on the given surfaces with strict-transform multiplicity mu.
struct NumericalData3DQuery {
  bool point_center = true;  // false: curve center
  long mu = 0;
  std::vector<std::pair<long, long>> through;  // (N, nu); up to 3 for points, 2 for curves
};
std::pair<long, long> numerical_data_3d(const NumericalData3DQuery& q);

// Randomized cancellation suite over the named configurations.
struct ConfigSuiteEntry {
  std::string name;
  int free_vars = 0;
  int samples = 0;        // valid random samples tested
  int grid_points = 0;    // full certification grid size
  bool all_zero = true;   // every sample and grid value vanished
  bool probes_ok = true;  // stability probes unchanged
};
struct ConfigSuiteReport {
  std::vector<ConfigSuiteEntry> entries;
  Rat four_general_witness;  // contribution at alphas (2,2,2,-5); must be 3/20
  int four_general_nonzero_samples = 0;
  bool pass = false;
};
ConfigSuiteReport configuration_suite(std::uint64_t seed, int samples_per_var = 25,
                                      int probes = 10);

}  // namespace germzeta
