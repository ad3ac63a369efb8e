#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "dirac1d/transfer.hpp"

namespace dirac1d::cli {

// Plain-text potential profile:
//   lead-left <V>
//   segment <width> <V>     (zero or more)
//   lead-right <V>
// '#' starts a comment; blank lines are ignored.

struct ProfileParseError : std::runtime_error {
  ProfileParseError(int line_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what_),
        line(line_) {}
  int line;
};

PotentialProfile parse_profile(std::istream& in);
PotentialProfile load_profile(const std::string& path);
std::string format_profile(const PotentialProfile& profile);

}  // namespace dirac1d::cli
