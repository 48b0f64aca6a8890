#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "facemonoid/gcm.hpp"

namespace fm::verify {

struct Params {
  std::uint64_t seed = 12345;
  int max_len = 6;
  int samples = 1000;
  int budget = 10000;
};

struct SuiteReport {
  std::string suite;
  int cases = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// The five desk matrices the verification pipeline runs against.
namespace mats {
GcmPtr fin();   // [[2,-1],[-1,2]]
GcmPtr aff();   // [[2,-2],[-2,2]]
GcmPtr ind2();  // [[2,-5],[-1,2]]
GcmPtr hyp();   // [[2,-2,-1],[-2,2,0],[-1,0,2]]
GcmPtr dec();   // [[2,-2,0],[-2,2,0],[0,0,2]]
struct Named {
  const char* name;
  GcmPtr gcm;
};
std::vector<Named> all();
}  // namespace mats

// One function per verification suite.  Expected-failure cases (the bad
// action's order counterexample) are asserted inside the suite, so an empty
// failure list always means "everything behaved as the theory predicts".
SuiteReport suite_special_subsets(const Params& p);
SuiteReport suite_monoid_axioms(const Params& p);
SuiteReport suite_classical_collapse(const Params& p);
SuiteReport suite_lattice(const Params& p);
SuiteReport suite_oracle_meet(const Params& p);
SuiteReport suite_actions(const Params& p);
SuiteReport suite_order(const Params& p);
SuiteReport suite_good1_vs_good2(const Params& p);
SuiteReport suite_fm1c(const Params& p);
SuiteReport suite_stabilizer_geometry(const Params& p);

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const Params& p);
std::vector<SuiteReport> run_all(const Params& p);

}  // namespace fm::verify
