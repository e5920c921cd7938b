#pragma once

// Command line front end.  run_cli takes the argument list without the
// program name and writes to the supplied streams, so tests can drive it
// in-process.  Exit codes: 0 success / all checks pass, 1 verification
// mismatch, 2 malformed input or domain error, 3 budget exceeded.

#include <iosfwd>
#include <string>
#include <vector>

namespace b2hecke {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace b2hecke
