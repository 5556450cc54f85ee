#pragma once

// The ramsey-pods command line as a library call, so tests can drive it
// without spawning processes.

#include <iosfwd>
#include <string>
#include <vector>

namespace rpods {

/// args excludes the program name.  Exit codes: 0 ok or exact, 1 invalid
/// input or violation, 2 bound-only search or no cyclic triangles, 3 parse
/// error.
auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

} // namespace rpods
