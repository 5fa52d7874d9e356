#pragma once

// Command-line front end. `run` is the whole program minus process setup, so
// tests can drive it with in-memory streams.

#include <iosfwd>
#include <string>
#include <vector>

namespace spaceforms::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,      ///< unexpected internal error
    kInputError = 2,   ///< bad arguments, malformed JSON, bad symbol or dimension vector
    kNotInGroup = 3,   ///< the matrix is not in the isometry group
    kAmbiguous = 4,    ///< result depends on tolerances (near-collisions, degenerate spans)
};

/// `args` excludes the program name. Reads `-` input from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace spaceforms::cli
