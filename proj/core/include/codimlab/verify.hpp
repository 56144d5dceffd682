#pragma once

#include "codimlab/codim.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace codimlab {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double millis = 0.0;
  std::string detail;  // failure explanation or a short summary
};

struct VerifyOptions {
  std::size_t threads = 1;
  std::string filter;  // substring on the criterion name; empty runs all
  CodimOptions codim;
};

// The built-in verification suite.  Every criterion is pinned here — exact
// values, exact equalities, and the stated tolerances — and each run prints
// nothing; callers render the results.
std::vector<CriterionResult> run_builtin_suite(const std::filesystem::path& fixtures_dir,
                                               const VerifyOptions& opts = {});

}  // namespace codimlab
