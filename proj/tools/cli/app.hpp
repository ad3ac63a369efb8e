#pragma once

#include <iosfwd>

namespace dirac1d::cli {

// Full command-line driver; returns the process exit code.
//   0  success
//   1  usage error
//   2  physics or parse error
//   3  numerical failure (overflow, quadrature, verification mismatch)
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace dirac1d::cli
