#pragma once

#include <iosfwd>
#include <string>

#include "dirac1d/transfer.hpp"

namespace dirac1d::cli {

struct GridSpec {
  double start = 0.0;
  double end = 0.0;
  long count = 0;
};

/// Parses "start:end:count"; requires count >= 2 and start < end.
GridSpec parse_grid(const std::string& text);

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerifyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SweepOptions {
  GridSpec grid;
  double V0 = 0.0;
  double width = 0.0;  // barrier width a, units 1/m
  double tol = 1e-10;
  bool verify = false;
};

// Each sweep writes one CSV header plus one record per grid point, in grid
// order and at full double precision; identical invocations produce
// byte-identical output. --verify re-runs an independent oracle on a
// deterministic 1% sample and throws VerifyError on disagreement.
void run_step_sweep(const SweepOptions& opt, std::ostream& csv);
void run_barrier_sweep(const SweepOptions& opt, std::ostream& csv);
void run_overlap_sweep(const SweepOptions& opt, std::ostream& csv);
void run_massless_sweep(const SweepOptions& opt, std::ostream& csv);
void write_band_comparison(std::ostream& csv);

/// Single-shot profile scattering report (plain key=value lines).
void run_profile(const PotentialProfile& profile, double E, double tol,
                 bool verify, std::ostream& out);

std::string format_double(double x);

}  // namespace dirac1d::cli
