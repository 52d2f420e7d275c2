#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace effdom::cli {

enum ExitCode : int
{
    success = 0,
    verification_failed = 1,
    usage_error = 2,
};

/// Runs one command. args excludes the program name. A single JSON document
/// goes to out, diagnostics to err.
auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

}
