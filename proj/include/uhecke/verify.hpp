#pragma once

#include <string>
#include <vector>

namespace uhecke {

// One identity/invariant check: pass iff lhs equals rhs under the check's
// comparator (rational-function cross-multiplication unless stated in notes).
struct CheckRecord {
  std::string id;
  bool pass = false;
  std::string lhs;
  std::string rhs;
  std::string notes;
};

struct Report {
  std::string suite;
  std::vector<CheckRecord> checks;

  int passed() const;
  int failed() const;
  bool all_pass() const { return failed() == 0; }
};

struct SuiteOptions {
  int rmax = 3;       // symbolic rank bound (clamped per suite)
  long p = 3;         // residue characteristic for weil-finite
  unsigned seed = 1;  // seed for the sampled property checks
};

// {hecke-core, satake-core, zeta-identities, intertwining, theta-maps,
//  weil-finite}.
const std::vector<std::string>& suite_names();

// Runs the named suite with deterministic check ordering. Throws
// std::invalid_argument for an unknown suite name; check failures are data.
Report run_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace uhecke
