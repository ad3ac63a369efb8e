#pragma once

#include <vector>

#include "dirac1d/modes.hpp"

namespace dirac1d {

// Piecewise-exponential spinor waves on the box (-L, 0) u (0, L), with exact
// analytic inner products. Every term is written coeff * spinor *
// exp(exponent * (z - zref)) on one half interval; choosing zref at the
// decaying end keeps each factor bounded by one, so deep-tunnelling inner
// products never overflow.

enum class Side : int { Left = -1, Right = +1 };

struct BoxTerm {
  Side side = Side::Right;
  Cplx coeff{1.0, 0.0};
  Spinor2 spinor;
  Cplx exponent{0.0, 0.0};
  double zref = 0.0;
};

struct BoxWave {
  std::vector<BoxTerm> terms;
};

/// Exact integral of conj(a) . b over (-L, L).
Cplx box_inner(const BoxWave& a, const BoxWave& b, double L);

/// sqrt(<a|a>).
double box_norm(const BoxWave& a, double L);

/// Multiplies every coefficient in place.
void scale(BoxWave& wave, Cplx factor);

/// Box orthogonality kernel (1/L) * integral_0^L exp(i (q - p) z) dz; equals
/// the Kronecker delta when p and q both sit on the 2 pi n / L grid.
Cplx box_delta(double p, double q, double L);

/// True when k is an integer multiple of 2 pi / L (within tol grid units).
bool on_grid(double k, double L, double tol = 1e-9);

/// Grid momentum 2 pi n / L.
double grid_momentum(long n, double L);

/// Free negative-energy plane wave of (signed) momentum k spanning both half
/// intervals, normalized over (-L, L).
BoxWave free_negative_state(double k, double m, double L);

}  // namespace dirac1d
