#pragma once

#include <iosfwd>

namespace amorph::cli {

enum ExitCode : int { Success = 0, Rejected = 1, UsageError = 2 };

// Parses argv and runs one verb. `in` backs the "-" file argument; data goes
// to `out`, progress and diagnostics to `err`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace amorph::cli
