// Copyright 2026 The wh Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WH_TOOLS_CLI_HPP
#define WH_TOOLS_CLI_HPP

#include <iosfwd>

namespace wh::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitNumerical = 3;

/// Runs one `wh` invocation. Results go to `out` (or the --out file),
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wh::cli

#endif  // WH_TOOLS_CLI_HPP
