#pragma once

#include <string>
#include <vector>

#include "rho/rational.hpp"

namespace rho::verify {

struct Options {
  long n_max = 0;     // 0 = per-rule default
  long k_max = 0;     // 0 = per-rule default
  double tol = 0.0;   // 0 = per-rule default (numeric rules only)
  bool parallel = true;
};

struct RuleSummary {
  std::string suite;
  std::string rule;
  long cases = 0;
  bool pass = true;
  bool exact = true;  // exact rules report max_residual, numeric ones max_fresidual
  Rational max_residual;
  double max_fresidual = 0.0;
  std::string note;  // failure detail (earliest case), empty when passing
};

// defs, nested, generating, transforms, sumrules, pochhammer, numeric.
const std::vector<std::string>& suite_names();

// Runs one suite ("all" runs every suite in order). Throws
// std::invalid_argument for unknown names.
std::vector<RuleSummary> run_suite(const std::string& name, const Options& options);

bool all_passed(const std::vector<RuleSummary>& summaries);

}  // namespace rho::verify
