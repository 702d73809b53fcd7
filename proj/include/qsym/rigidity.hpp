#pragma once

// Verification suite: every structural claim the library encodes, checked by
// brute force up to configurable weight bounds, with timing and witnesses.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qsym/composition.hpp"
#include "qsym/posets.hpp"

namespace qsym {

struct CheckResult {
  std::string check_id;
  int bound = 0;
  bool pass = false;
  std::string details;  // witness text on failure, summary notes otherwise
  double elapsed_seconds = 0.0;
};

struct VerifyConfig {
  std::map<std::string, int> bounds;  // check id -> weight bound
};

VerifyConfig default_verify_config();
std::vector<std::string> registered_check_ids();

struct VerificationReport {
  std::string suite_version;
  VerifyConfig config;
  std::vector<CheckResult> results;
  bool all_pass() const;
};

// Runs every registered check; bounds omitted from the config fall back to
// the defaults.  An empty config or an unknown id is rejected.
VerificationReport run_all(const VerifyConfig& config);
CheckResult run_check(const std::string& id, int bound);

// Hand-frozen cover edges up to weight 4 for each order, used as an external
// reference for the generated diagrams.
const std::vector<std::pair<Composition, Composition>>& reference_hasse_edges(OrderTag order);

CheckResult check_order_inclusions(int n);
CheckResult check_hasse_reference(int n);
CheckResult check_downset_rigidity(OrderTag order, int n);  // M or F
CheckResult check_q_classification(int n);
CheckResult check_c_classification(int n);
CheckResult check_pieri_consistency(int n);
CheckResult check_product_term_counts(int max_run);
CheckResult check_s_equals_f(int n);
CheckResult check_lr_vertical_strip(int n);
CheckResult check_complement_duality(int n);
CheckResult check_automorphism_suite(int n);
CheckResult check_structural_laws(int n);

}  // namespace qsym
