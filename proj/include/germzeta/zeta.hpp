#pragma once
#include <optional>
#include <vector>

#include "germzeta/ratfun.hpp"
#include "germzeta/resolve.hpp"

namespace germzeta {

// Actual pole of a rational function: location, order, and the leading
// Laurent coefficient there (the residue when the order is one).
struct PoleInfo {
  Rat location;
  int order = 1;
  Rat leading;
  bool operator==(const PoleInfo&) const = default;
};

// Local topological zeta function assembled from a resolution graph.
RatFun1 zeta_top(const ResolutionGraph& g);

// Restricted variant: only strata all of whose components have N divisible
// by d contribute. d = 1 recovers zeta_top.
RatFun1 zeta_d(const ResolutionGraph& g, long d);

// Log canonical threshold: min over components of nu/N (branches have nu = 1).
Rat lct(const ResolutionGraph& g);

// Actual poles of z, sorted by location. Requires every root of the reduced
// denominator to be rational (always true for assembled zeta functions);
// otherwise throws NonRationalDenominatorRoot.
std::vector<PoleInfo> poles(const RatFun1& z);

// Candidate poles -nu_i/N_i and -1/N_j from every component, sorted, deduped.
std::vector<Rat> candidate_poles(const ResolutionGraph& g);

// The subset of candidates that are genuine poles by the intersection
// criterion: exceptionals meeting at least three other components, and every
// strict-transform branch.
std::vector<Rat> predicted_poles(const ResolutionGraph& g);

// Components meeting the exceptional exc_id, with alpha_j = nu_j - s0 * N_j
// evaluated at the candidate s0 = -nu_i/N_i of that exceptional.
struct AlphaEntry {
  bool is_branch = false;
  int id = 0;      // neighbor exceptional id, or 0 for a branch
  long N = 0;
  long nu = 0;
  int weight = 1;  // orbit size for branches, 1 for exceptionals
  Rat alpha;
  bool operator==(const AlphaEntry&) const = default;
};
std::vector<AlphaEntry> alpha_values(const ResolutionGraph& g, int exc_id);

// Structural identities at every exceptional: sum of (alpha_j - 1) over
// neighbors is -2, and the neighbor multiplicities sum to 0 mod N_i. Orbit
// attachments contribute orbit_size summands.
bool check_relation_alpha(const ResolutionGraph& g, int exc_id);
bool check_congruence(const ResolutionGraph& g, int exc_id);

// Residue contribution of one exceptional at its own candidate pole,
// restricted to neighbors with d | N_j. Requires d | N_i; throws AlphaZero if
// some qualifying neighbor has alpha_j = 0 (shared candidate).
Rat contribution_residue(const ResolutionGraph& g, int exc_id, long d = 1);

// Check of the small-pole structure: every pole below -1/2 must be of the
// form -1/2 - 1/i for an integer i >= 2, and at most one pole may lie in the
// window (-1, -1/2].
struct SmallPoleReport {
  std::vector<Rat> below_half;       // poles < -1/2
  std::vector<Rat> offenders;        // those not of the admissible form
  std::vector<Rat> window;           // poles in (-1, -1/2]
  bool pass() const { return offenders.empty() && window.size() <= 1; }
};
SmallPoleReport classify_small_poles(const std::vector<PoleInfo>& ps);

// Everything a caller usually wants from one graph, in one pass.
struct ZetaReport {
  RatFun1 zeta;
  std::vector<PoleInfo> pole_list;
  std::vector<Rat> candidates;
  Rat lct_value;
};
ZetaReport zeta_report(const ResolutionGraph& g);

}  // namespace germzeta
