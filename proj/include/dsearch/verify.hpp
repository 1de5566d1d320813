// Copyright 2026 The dsearch Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dsearch/cnf.hpp"

namespace dsearch {

// Self-check suites behind `dsearch verify`: seeded, deterministic reruns of
// every module's invariants, with a concrete counterexample in `detail` on
// failure.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Hook for mutation tests: the core suite checks whatever trim it is handed.
using TrimFn = std::function<CnfFormula(const CnfFormula&, int)>;

std::vector<CheckResult> verify_core(const TrimFn& trim = {});
std::vector<CheckResult> verify_prg();
std::vector<CheckResult> verify_restrictions();
std::vector<CheckResult> verify_framework();
std::vector<CheckResult> verify_params();
std::vector<CheckResult> verify_all();

}  // namespace dsearch
