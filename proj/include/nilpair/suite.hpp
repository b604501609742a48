#pragma once

#include <string>
#include <vector>

#include "nilpair/report.hpp"

namespace nilpair {

struct SuiteResult {
  std::string name;
  bool passed = false;
  long checked = 0;   // instances examined
  std::string detail; // failure description, or a short summary
};

// Runs the named property batteries over the whole catalog, keeping the
// properties whose names contain `filter` (empty keeps everything). Ordering
// is fixed. golden_dir must hold the grid golden files for the figure checks.
std::vector<SuiteResult> run_suite(const std::string& filter, const std::string& golden_dir);

std::string format_suite(const std::vector<SuiteResult>& results);
bool suite_passed(const std::vector<SuiteResult>& results);

}  // namespace nilpair
