#pragma once

#include "dirac1d/boxwave.hpp"
#include "dirac1d/modes.hpp"

namespace dirac1d {

// Sudden-approximation overlap between free negative-energy states and the
// positive-energy states of the step Hamiltonian. Everything public is per
// unit box length; the finite-L diagnostics take an explicit FiniteLConfig.
struct OverlapReport {
  double n2PerL = 0.0;         // pulled-up band matched with evanescent waves
  double n3PerL = 0.0;         // current-carrying band, V0 > 2m only
  double intuitivePerL = 0.0;  // density-of-states estimate
  double totalPerL = 0.0;      // n2PerL + n3PerL
  double V0 = 0.0;
  double m = 1.0;
};

struct FiniteLConfig {
  double L = 2000.0;      // box half-length, units 1/m
  long maxIndex = 100000;  // momentum grid cutoff |n| for k = 2 pi n / L
  double tol = 1e-10;
};

/// Density-of-states estimate sqrt(V0 (V0 + 2m)) / (2 pi) per unit length.
double intuitive_estimate(double V0, double m);

/// Exact contribution of the evanescent-matched band:
/// sqrt(V0(V0+2m)) / (4 pi), minus sqrt(V0(V0-2m)) / (4 pi) once V0 > 2m.
double n2_per_length(double V0, double m);

/// Current-carrying band contribution (zero for V0 <= 2m): adaptive
/// quadrature of the overlap integrand over k in [0, sqrt(V0(V0-2m))].
/// Throws std::runtime_error with the achieved error estimate when the
/// quadrature fails to converge to tol.
double n3_per_length(double V0, double m, double tol = 1e-10);

/// Integrand of n3: 2 u^2 (1 + u'^2) / (u^2 u'^2 (3 + u^2) + 1 + 3 u^2).
double klein_overlap_integrand(double k, double V0, double m);

OverlapReport overlap_report(double V0, double m);

/// Half the number of box momenta in the matched band, per unit length;
/// discrete oracle for n2_per_length.
double n2_finite_l_per_length(const FiniteLConfig& cfg, double V0, double m);

/// Grid sum of the per-state overlap contributions, per unit length;
/// discrete oracle for n3_per_length.
double n3_finite_l_per_length(const FiniteLConfig& cfg, double V0, double m);

/// Matrix element (1/2)(Delta_{k'',k'} + e^{i phi} Delta_{k'',-k'}) between a
/// free negative-energy state and the evanescent-matched state of interacting
/// momentum k', assembled from the explicit half-interval inner products with
/// the thermodynamic normalization. phi and the amplitudes come from the step
/// solution at the matching energy. Both momenta must sit on the cfg grid.
Cplx finite_l_matrix_element_case2(double kpp, double kp,
                                   const FiniteLConfig& cfg, double V0,
                                   double m);

/// Sum over the free-state grid of |<n_k''|Psi_1>|^2 for the gap state at
/// energy E (V0 <= E < V0 + m, travelling left side on the grid): the
/// single-state evanescent overlap, O(1/(kappa L)); summed over the band it
/// stays bounded in L while the extensive contributions grow linearly.
double evanescent_overlap_scaling(const FiniteLConfig& cfg, double V0,
                                  double m, double E);

/// One term of the sum above.
Cplx case1_matrix_element(const FiniteLConfig& cfg, double V0, double m,
                          double E, double kpp);

/// evanescent_overlap_scaling summed over every on-grid state of the
/// V0 <= E < V0 + m band; non-extensive (approaches an L-independent value).
double case1_band_overlap_total(const FiniteLConfig& cfg, double V0, double m);

/// |<Psi_k1|Psi_k2>| between two normalized gap states with distinct on-grid
/// momenta; the travelling halves are exactly orthogonal on the grid, so the
/// whole overlap comes from the evanescent tails and decays as 1/L. Returns 1
/// for k1 == k2; rejects distinct momenta of equal energy.
double case1_orthogonality_decay(double k1, double k2,
                                 const FiniteLConfig& cfg, double V0,
                                 double m);

/// Normalized gap state (A-1 structure) at on-grid left momentum k with
/// E = sqrt(m^2 + k^2) in [V0, V0 + m).
BoxWave case1_state(const FiniteLConfig& cfg, double V0, double m, double E);

/// Normalized evanescent-matched state at on-grid right momentum k' with
/// E = V0 - sqrt(m^2 + k'^2) in the matched band.
BoxWave case2_state(const FiniteLConfig& cfg, double V0, double m, double kp);

}  // namespace dirac1d
