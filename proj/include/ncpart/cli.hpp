#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "ncpart/catalan_sequences.hpp"
#include "ncpart/partition.hpp"

namespace ncpart::cli {

enum ExitCode : int {
    kOk = 0,
    kValidationFailure = 1,
    kUsageError = 2,
    kIoError = 3,
};

/// Test seams. Left empty by the executable.
struct Hooks {
    std::function<CatSeq(const Partition&)> forward_map;
};

/// Runs one command line (args[0] is the program name) against the given
/// streams and returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err, const Hooks& hooks = {});

}  // namespace ncpart::cli
