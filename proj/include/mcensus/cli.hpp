// Copyright 2026 The matrix-census Authors.
// SPDX-License-Identifier: Apache-2.0

// The mcensus command line. Each invocation writes one JSON envelope
//
//   {"schema_version":"1","command":...,"params":{...},"result":{...},
//    "timing_ms":...}
//
// to `out`, or a one-line JSON error object to `err`.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mcensus::cli {

inline constexpr int kExitOk = 0;
/// Domain errors, and `verify` runs whose checks fail.
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;
/// A self-check inside the library failed.
inline constexpr int kExitInternal = 4;

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace mcensus::cli
