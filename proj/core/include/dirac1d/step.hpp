#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dirac1d/modes.hpp"

namespace dirac1d {

// Scattering amplitudes and coefficients for one potential step at z = 0.
// f and g follow the unnormalized-spinor matching convention of modes.hpp.
// For bands whose left side is evanescent (EvanLeftTravelRight*) the current
// arrives from the right lead and f is that side's reflection amplitude;
// everywhere else the incident wave travels in +z from the left.
struct ScatteringResult {
  Cplx f{0.0, 0.0};   // reflection amplitude
  Cplx g{0.0, 0.0};   // transmission (or evanescent-coupling) amplitude
  double R = 0.0;     // reflection coefficient
  double T = 0.0;     // transmission coefficient
  BandCase band = BandCase::GapNoStates;
  double kLeft = 0.0;   // wavenumber in the left region (k or kappa)
  double kRight = 0.0;  // wavenumber in the right region (k' or kappa)
};

struct WaveComponent {
  Cplx coeff{0.0, 0.0};
  SegmentMode mode;
  int direction = 1;
};

// Coefficients of the matched piecewise solution; psi on each side is the sum
// of coeff * spinor * exp(phase_exponent * z) over the listed components.
struct MatchedState {
  std::vector<WaveComponent> left;
  std::vector<WaveComponent> right;
  double energy = 0.0;
  BandCase band = BandCase::GapNoStates;
  int incidentSide = 1;  // +1 incidence from the left lead, -1 from the right
};

/// k' for energies above the step: sqrt(m^2+k^2) = V0 + sqrt(m^2+k'^2).
/// Requires E >= V0 + m.
double kprime_above(double E, double V0, double m);

/// k' in the Klein band: sqrt(m^2+k^2) = V0 - sqrt(m^2+k'^2).
/// Requires V0 >= 2m and m <= E <= V0 - m.
double kprime_klein(double E, double V0, double m);

/// Closed-form step amplitudes for every current-carrying band; throws
/// std::domain_error("no states at this energy") in the true mass gap.
/// Requires m > 0 and V0 >= 0.
ScatteringResult step_scatter(double E, double V0, double m);

/// Independent generic boundary-matching solve: builds the 2x2 continuity
/// system at z = 0 from make_spinor columns and solves it numerically, never
/// using the closed forms. Requires a band with a wave on each side.
MatchedState match_oracle(double E, double V0, double m);

Cplx reflection_amplitude(const MatchedState& state);
Cplx transmission_amplitude(const MatchedState& state);

/// R, T and amplitudes recomputed from a matched state's coefficients.
ScatteringResult scattering_from_state(const MatchedState& state);

/// psi evaluated with the components of one side, regardless of sign(z).
Spinor2 evaluate_side(std::span<const WaveComponent> side, double z);

/// Psi(z) on a grid spanning both signs of z (left components for z < 0,
/// right components for z >= 0).
std::vector<Spinor2> reconstruct_wavefunction(const MatchedState& state,
                                              std::span<const double> grid);

/// Energy of the reflection minimum in the Klein band: E = V0 / 2, where
/// u u' peaks at (V0 - 2m) / (V0 + 2m) and R = 4 m^2 / V0^2.
double klein_min_reflection_energy(double V0, double m);

/// Bisection for a root of u * u' - 1 in (m, V0 - m) with tolerance 1e-12.
/// Returns nullopt when no sign change exists; u u' <= (V0-2m)/(V0+2m) < 1
/// over the whole band, so perfect step transparency never occurs at finite
/// V0 and the reflection floor is 4 m^2 / V0^2.
std::optional<double> klein_transparency_energy(double V0, double m);

}  // namespace dirac1d
