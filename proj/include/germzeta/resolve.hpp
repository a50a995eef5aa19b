#pragma once
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "germzeta/germ.hpp"

namespace germzeta {

// Exceptional curve with its numerical data: N is the multiplicity of the
// pulled-back germ along the curve, nu - 1 that of the pulled-back area form.
struct ExceptionalDatum {
  int id = 0;  // 1-based, creation order
  long N = 0;
  long nu = 0;
  bool operator==(const ExceptionalDatum&) const = default;
};

// A cluster of intersection points of one strict-transform branch orbit with
// its host exceptional curve. orbit_size counts the conjugate complex points;
// N is the multiplicity of the originating squarefree factor.
struct BranchAttachment {
  int host = 0;
  long N = 0;
  int orbit_size = 1;
  bool operator==(const BranchAttachment&) const = default;
  auto key() const { return std::tuple(host, N, orbit_size); }
};

// Zero-blow-up case: the germ is already normal crossings at the origin,
// either one smooth branch (possibly non-reduced) or two transversal ones.
struct NcAtOrigin {
  std::vector<long> branch_N;     // size 1 or 2
  bool transversal_pair = false;  // two branches meeting with intersection multiplicity 1
  bool operator==(const NcAtOrigin&) const = default;
};

struct ResolutionGraph {
  std::vector<ExceptionalDatum> exceptionals;  // ids 1..n in creation order
  std::vector<std::pair<int, int>> edges;      // stored (min,max); sorted after resolve
  std::vector<BranchAttachment> branches;      // sorted after resolve
  std::optional<NcAtOrigin> nc_at_origin;      // engaged iff exceptionals is empty

  const ExceptionalDatum& exc(int id) const;
  // Number of intersection points on the given exceptional: incident edges
  // plus the total orbit size of attached branches.
  int neighbor_weight(int id) const;
  long chi_open(int id) const { return 2 - neighbor_weight(id); }
  void canonicalize();  // sort edges and branches
  bool operator==(const ResolutionGraph&) const = default;
};

enum class NcStatus { NormalCrossings, NeedsBlowup };

// Local model of a candidate center: the origin of an affine chart, the
// strict-transform factors through it (all vanish there), and the exceptional
// curves through it, each being a coordinate axis.
struct LocalSituation {
  std::vector<GermFactor> factors;
  std::optional<int> exc_x0;  // exceptional with local equation x = 0
  std::optional<int> exc_y0;  // exceptional with local equation y = 0
  std::string transcript;     // chart path, for diagnostics
  // Set when this point is the exceptional-exceptional intersection created
  // by blowing up a smooth branch tangent to the exceptional with this id.
  std::optional<int> tangent_base;
};

// Normal crossings test at the local origin of sit.
NcStatus nc_status(const LocalSituation& sit);

// Numerical data of the exceptional created by blowing up a center lying on
// the given exceptionals (0, 1 or 2 of them; more throws TooManyThrough) with
// strict transform of multiplicity mu there.
std::pair<long, long> numerical_data_2d(const std::vector<ExceptionalDatum>& through, long mu);

// Result of one blow-up: the new exceptional, the residual situations where
// normal crossings still fail, and the graph deltas (already applied).
struct BlowupStep {
  ExceptionalDatum created;
  long mu = 0;
  int through_count = 0;
  std::vector<LocalSituation> successors;
  std::vector<BranchAttachment> new_branches;
  std::vector<std::pair<int, int>> added_edges;
  std::vector<std::pair<int, int>> removed_edges;
};

// Blow up the local origin of sit. Appends the new exceptional to graph,
// attaches finished branches, rewires edges, and returns the step record.
// Throws UnsupportedIrrationalCenter when normal crossings fail at a point
// that is not rational (repeated or shared irrational restriction root).
BlowupStep blow_up_point(const LocalSituation& sit, ResolutionGraph& graph);

struct ResolveOptions {
  int max_blowups = 512;
};

struct BlowupRecord {
  int exc_id = 0;
  int through_count = 0;
  long mu = 0;
  std::string transcript;
};

struct ResolveResult {
  ResolutionGraph graph;
  std::vector<BlowupRecord> audit;  // one entry per blow-up, in order
};

// Iterated blow-ups at failing points only, so the result is minimal among
// resolutions with rational centers. Throws ResolutionLimitExceeded past
// opt.max_blowups.
ResolveResult resolve_germ_full(const FactoredGerm& g, const ResolveOptions& opt = {});
ResolutionGraph resolve_germ(const FactoredGerm& g, const ResolveOptions& opt = {});

}  // namespace germzeta
