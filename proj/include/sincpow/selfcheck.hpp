#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace sincpow {

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct NamedProperty {
  std::string name;
  std::function<PropertyResult()> run;
};

/// Every invariant the library promises, as runnable checks.
std::vector<NamedProperty> self_check_properties();

/// Runs all properties, one report line each. Returns true iff all pass.
bool run_self_check(std::ostream& report);

}  // namespace sincpow
