#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace germzeta {

// Seed used by every randomized suite unless the caller overrides it; equal
// seeds give byte-identical runs on every platform (raw engine draws only).
inline constexpr std::uint64_t kDefaultSeed = 0x5E7A;

// Named germs with independently known resolutions, zeta functions or poles.
struct CorpusGerm {
  std::string name;
  std::string poly_text;
};
std::vector<CorpusGerm> paper_corpus();

struct RandomGermOptions {
  std::uint64_t seed = kDefaultSeed;
  int count = 120;
  int max_total_degree = 8;
  long min_multiplicity = 0;  // 0: unconstrained
};
// Deterministic pseudo-random germ texts accepted by parse_poly.
std::vector<std::string> random_germs(const RandomGermOptions& opt);

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  // Deliberately corrupt one expected value in paper-families; used by the
  // integration tests to confirm failures propagate to the exit code.
  bool inject_fault = false;
};

struct SuiteResult {
  std::string suite;
  int checks = 0;
  int failures = 0;
  int skipped = 0;  // germs skipped: non-rational blow-up center needed
  std::vector<std::string> failure_notes;
  bool pass() const { return failures == 0; }
};

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt = {});

// Parametric family scans driven by the CLI.
struct SweepRecord {
  long n = 0;  // secondary parameter (three-variable family only)
  long k = 0;
  bool ok = false;
  std::string detail;
};
std::vector<std::string> sweep_families();
std::vector<SweepRecord> run_sweep(const std::string& family, long lo, long hi, long n = 0);

}  // namespace germzeta
