#include "dirac1d/massless.hpp"

#include <cmath>

namespace dirac1d {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

SegmentMode massless_mode(double E, double V, MasslessBranch branch) {
  SegmentMode mode;
  mode.kind = branch == MasslessBranch::Plus ? ModeKind::PropagatingPositive
                                             : ModeKind::PropagatingNegative;
  mode.wavenumber = std::abs(E - V);
  mode.spinorRatio = 1.0;
  mode.energy = E;
  mode.potential = V;
  return mode;
}

}  // namespace

Spinor2 massless_spinor(MasslessBranch branch) {
  const double sign = branch == MasslessBranch::Plus ? 1.0 : -1.0;
  return {Cplx{kInvSqrt2, 0.0}, Cplx{sign * kInvSqrt2, 0.0}};
}

double massless_current(const MasslessState& s) {
  // J = psi^dag sigma_x psi = 2 Re(conj(upper) lower), identically +/-1 for
  // the (1, +/-1)/sqrt(2) spinors whatever k and V are.
  return s.branch == MasslessBranch::Plus ? 1.0 : -1.0;
}

ScatteringResult massless_step_scatter(double E, double V0) {
  ScatteringResult r;
  r.f = 0.0;
  r.g = 1.0;
  r.R = 0.0;
  r.T = 1.0;
  r.band = E >= V0 ? BandCase::AboveStep : BandCase::KleinTransmitting;
  r.kLeft = E;        // left lead at V = 0, Plus branch
  r.kRight = E - V0;  // k = V0 + k', sign tracks the branch relative to V0
  return r;
}

MatchedState massless_match_oracle(double E, double V0) {
  // (1,1) + f (1,-1) = g (1,1) row by row: f - g = -1 and -f - g = -1.
  const double a11 = 1.0, a12 = -1.0, b1 = -1.0;
  const double a21 = -1.0, a22 = -1.0, b2 = -1.0;
  const double det = a11 * a22 - a12 * a21;
  const double fSol = (b1 * a22 - a12 * b2) / det;
  const double gSol = (a11 * b2 - b1 * a21) / det;

  MatchedState state;
  state.energy = E;
  state.band = massless_step_scatter(E, V0).band;
  state.incidentSide = +1;
  SegmentMode left = massless_mode(E, 0.0, MasslessBranch::Plus);
  SegmentMode right = massless_mode(E, V0, MasslessBranch::Plus);
  state.left = {{Cplx{1.0, 0.0}, left, +1}, {Cplx{fSol, 0.0}, left, -1}};
  state.right = {{Cplx{gSol, 0.0}, right, +1}};
  return state;
}

std::vector<BandComparisonRow> band_comparison() {
  return {
      {BandModel::MasslessDirac, Sign::Plus, Sign::Plus},
      {BandModel::MasslessDirac, Sign::Minus, Sign::Minus},
      {BandModel::GrapheneBand, Sign::Plus, Sign::Plus},
      {BandModel::GrapheneBand, Sign::Plus, Sign::Minus},
      {BandModel::GrapheneBand, Sign::Minus, Sign::Plus},
      {BandModel::GrapheneBand, Sign::Minus, Sign::Minus},
  };
}

}  // namespace dirac1d
