#pragma once

#include <string>
#include <vector>

namespace walklab {

struct CheckResult {
  std::string group;
  std::string name;
  bool pass;
  std::string detail;  // filled on failure
};

// Runs the enumeration-oracle and identity battery. `only` filters by
// group name (empty = all); `inject_fault` flips one expected value and
// exists so the harness can prove it reports failures.
std::vector<CheckResult> run_verification(const std::string& only = "",
                                          bool inject_fault = false);

}  // namespace walklab
