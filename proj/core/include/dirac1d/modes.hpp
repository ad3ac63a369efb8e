#pragma once

#include <complex>
#include <cstdint>
#include <string_view>

namespace dirac1d {

using Cplx = std::complex<double>;

// Natural units c = hbar = 1 everywhere; the rest mass m is the only scale.
//
// In a region of constant potential V the spectrum is
//   E = V +/- sqrt(m^2 + k^2)        (propagating, spinor ratio u_k)
//   E = V +/- sqrt(m^2 - kappa^2)    (evanescent, |E - V| < m, ratio w_kappa)
//
// Basis solutions used throughout, in the unnormalized-spinor convention
// (direction is the probability-current direction for propagating modes and
// the decay direction for evanescent modes; the spatial factor is
// exp(phase_exponent(mode, direction) * z)):
//
//   positive energy   (1,  u)^T e^{+ikz}   /  (1, -u)^T e^{-ikz}
//   negative energy   (u,  1)^T e^{-ikz}   /  (-u, 1)^T e^{+ikz}
//   evanescent  +     (1, +iw)^T e^{-kz}   /  (1, -iw)^T e^{+kz}
//   evanescent  -     (-iw, 1)^T e^{-kz}   /  (+iw, 1)^T e^{+kz}
//
// With these spinors the current carried by an amplitude A on a propagating
// mode is |A|^2 * 2u, so reflection/transmission coefficients are ratios of
// 2u factors and the box normalization length never appears.

struct PhysParams {
  double m = 1.0;  // rest mass, >= 0
  double V = 0.0;  // local constant potential
};

enum class ModeKind : std::uint8_t {
  PropagatingPositive,  // E - V >= m
  PropagatingNegative,  // E - V <= -m
  EvanescentPlus,       // 0 <= E - V < m
  EvanescentMinus,      // -m < E - V < 0
  Forbidden,            // matching outcome only; never produced for one region
};

// Solution type at energy E in one region of constant potential.
// wavenumber is k (propagating) or kappa (evanescent), always >= 0;
// spinorRatio is u_k or w_kappa, in [0, 1].
struct SegmentMode {
  ModeKind kind = ModeKind::Forbidden;
  double wavenumber = 0.0;
  double spinorRatio = 0.0;
  double energy = 0.0;
  double potential = 0.0;
};

struct Spinor2 {
  Cplx upper{0.0, 0.0};
  Cplx lower{0.0, 0.0};
  double norm2() const { return std::norm(upper) + std::norm(lower); }
};

// Conjugate-linear in the first argument.
inline Cplx dot(const Spinor2& a, const Spinor2& b) {
  return std::conj(a.upper) * b.upper + std::conj(a.lower) * b.lower;
}

// One row of the step-potential matching tables. Upper/Lower distinguishes the
// two halves of a full-reflection band (which evanescent branch closes the
// step side); the EvanLeftTravelRight pair is the mirror band where the
// incident current arrives from the right and the left side is evanescent.
enum class BandCase : std::uint8_t {
  AboveStep,                 // propagating positive on both sides
  FullReflectUpper,          // travelling left, evanescent(+) right
  FullReflectLower,          // travelling left, evanescent(-) right
  KleinTransmitting,         // positive left, negative-energy propagating right
  GapNoStates,               // evanescent on both sides: no state
  EvanLeftTravelRightPlus,   // evanescent(+) left, travelling right
  EvanLeftTravelRightMinus,  // evanescent(-) left, travelling right
  FullyNegative,             // propagating negative on both sides
};

std::string_view to_string(BandCase band);
std::string_view to_string(ModeKind kind);

/// u_k = k / (m + sqrt(m^2 + k^2)), in [0, 1). Throws std::domain_error for
/// k < 0 (callers pass magnitudes) or k = m = 0.
double u_of_k(double k, double m);

/// w_kappa = kappa / (m + sqrt(m^2 - kappa^2)), in [0, 1]. Requires
/// 0 <= kappa <= m; no evanescent state exists otherwise.
double w_of_kappa(double kappa, double m);

/// Probability current J = 2u / (1 + u^2) of a unit-amplitude mode with
/// spinor ratio u; equals the relativistic velocity k / sqrt(m^2 + k^2).
double current_of_u(double u);

/// Total classification of (E, m, V). Energies exactly at a band edge
/// |E - V| = m classify as propagating with k = 0.
SegmentMode classify_mode(double E, const PhysParams& p);

/// Unnormalized column spinor of the basis solution (see table above).
/// direction must be +1 or -1; Forbidden modes are rejected.
Spinor2 make_spinor(const SegmentMode& mode, int direction);

/// Exponent a with psi(z) = make_spinor(mode, direction) * exp(a z):
/// +/- i k for positive-energy, -/+ i k for negative-energy, -/+ kappa for
/// evanescent modes.
Cplx phase_exponent(const SegmentMode& mode, int direction);

/// Unique matching-table row for a step of height V0 >= 0 at energy E.
/// Band edges follow the classify_mode tie-break, so the rows tile the whole
/// energy line. Requires m > 0.
BandCase classify_band(double E, double V0, double m);

/// True when the band carries probability current on at least one side.
bool band_carries_current(BandCase band);

}  // namespace dirac1d
