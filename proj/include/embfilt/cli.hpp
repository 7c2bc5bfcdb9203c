#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace embfilt {

// Full command-line front end; returns the process exit code.
// 0 = success / all checks passed, 1 = input error, 2 = mathematical
// discrepancy (oracle vs closed form, violated condition on a bi-stellar
// polytope, zeta mismatch, failed round trip).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace embfilt
