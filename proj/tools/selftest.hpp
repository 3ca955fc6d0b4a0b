// Copyright 2026 The wh Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WH_TOOLS_SELFTEST_HPP
#define WH_TOOLS_SELFTEST_HPP

#include <functional>
#include <string>
#include <vector>

namespace wh::selftest {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;  ///< first failure, or a short summary
};

/// Quick invariant sweeps over every module on fixed-seed random inputs.
std::vector<SuiteResult> run_all();

}  // namespace wh::selftest

#endif  // WH_TOOLS_SELFTEST_HPP
