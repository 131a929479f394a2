#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhermite/operators.hpp"

namespace qh {

struct IdentityReport {
  std::string identity;
  int max_n = 0;
  bool known = true;
  bool verified = false;
  std::vector<OpReport> cases;
  std::optional<OpReport> first_failure;
};

// Names accepted by the CLI and the acceptance suite. "mutate" shifts the
// eigenvalue index by one so the failure path is exercised end to end.
std::vector<std::string> identity_names();
IdentityReport run_identity_suite(const std::string& name, int max_n,
                                  bool mutate = false);

}  // namespace qh
