#pragma once

#include <iosfwd>

namespace flrs::cli {

enum ExitCode : int {
    kSuccess = 0,      // includes decoding failures, which are domain results
    kUsageError = 1,   // bad flags, malformed input, invalid parameters
    kInternalError = 2 // a guaranteed invariant was violated
};

/// Entry point of the `flrs` tool. Machine output goes to `out`, messages to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace flrs::cli
