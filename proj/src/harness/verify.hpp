// The bundled verification run: reproduces the concrete computations the
// library is built around and reports one pass/fail entry per check.
#pragma once

#include <string>
#include <vector>

#include "harness/jsonfmt.hpp"

namespace edsp {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<CheckResult> verify_paper_examples(int threads = 1);

Json verify_report_json(const std::vector<CheckResult>& checks);

}  // namespace edsp
