// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>

namespace mnofdm::cli {

enum ExitCode : int {
    kOk = 0,
    kValidation = 2,
    kNumericDomain = 3,
    kIo = 4,
};

/// Runs the command line tool; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace mnofdm::cli
