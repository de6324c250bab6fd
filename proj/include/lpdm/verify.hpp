#pragma once

#include <string>
#include <vector>

namespace lpdm {

struct CheckResult {
  std::string id;
  bool pass;
  double observed;   // worst measured value of the criterion's metric
  double threshold;  // the bound it must stay under
  std::string detail;
};

/// Number of acceptance criteria (13).
int criteria_count();

/// Short name of criterion k (1-based), e.g. "duality_identities".
std::string criterion_name(int k);

/// Run acceptance criterion k (1-based); one or more results.
std::vector<CheckResult> run_criterion(int k);

/// Criteria covered by the quick level (1..6).
std::vector<int> quick_criteria();

}  // namespace lpdm
