#pragma once

#include <vector>

#include "dirac1d/modes.hpp"
#include "dirac1d/step.hpp"

namespace dirac1d {

// Zero-mass states are a separate code path: the gap closes, the spinor is
// (1, +/-1)/sqrt(2) independent of k, and a potential step never reflects.

enum class MasslessBranch : int { Plus = +1, Minus = -1 };

struct MasslessState {
  MasslessBranch branch = MasslessBranch::Plus;
  double k = 0.0;  // signed momentum
  double V = 0.0;
  double energy() const {
    return V + (branch == MasslessBranch::Plus ? k : -k);
  }
};

Spinor2 massless_spinor(MasslessBranch branch);

/// +1 on the Plus branch, -1 on the Minus branch, independent of k and V.
double massless_current(const MasslessState& s);

/// f = 0, g = 1, R = 0, T = 1 for every (E, V0); the transmitted momentum
/// obeys k = V0 + k'.
ScatteringResult massless_step_scatter(double E, double V0);

/// The continuity system 1 + f = g, 1 - f = g solved numerically; oracle for
/// massless_step_scatter.
MatchedState massless_match_oracle(double E, double V0);

enum class BandModel { MasslessDirac, GrapheneBand };
enum class Sign : int { Plus = +1, Minus = -1 };

struct BandComparisonRow {
  BandModel model;
  Sign energySign;
  Sign currentSign;
};

/// Two massless-Dirac rows (energy sign locks the current sign) against four
/// band rows for eps = +/- v|k| (each energy sign carries both current
/// signs); the two spectra look alike but transport differently.
std::vector<BandComparisonRow> band_comparison();

}  // namespace dirac1d
