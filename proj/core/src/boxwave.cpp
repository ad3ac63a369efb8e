#include "dirac1d/boxwave.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dirac1d {

namespace {

// integral_{x0}^{x1} exp(qa* (z - ra)) exp(qb (z - rb)) dz, evaluated through
// the endpoint exponentials (each bounded by one for decaying-reference
// terms).
Cplx pair_integral(Cplx qa, double ra, Cplx qb, double rb, double x0,
                   double x1) {
  const Cplx q = std::conj(qa) + qb;
  const Cplx e0 = std::conj(qa) * (x0 - ra) + qb * (x0 - rb);
  if (std::abs(q) * (x1 - x0) < 1e-8) {
    const Cplx qw = q * (x1 - x0);
    return std::exp(e0) * (x1 - x0) * (1.0 + 0.5 * qw + qw * qw / 6.0);
  }
  const Cplx e1 = std::conj(qa) * (x1 - ra) + qb * (x1 - rb);
  return (std::exp(e1) - std::exp(e0)) / q;
}

}  // namespace

Cplx box_inner(const BoxWave& a, const BoxWave& b, double L) {
  Cplx acc{0.0, 0.0};
  for (const BoxTerm& ta : a.terms) {
    for (const BoxTerm& tb : b.terms) {
      if (ta.side != tb.side) continue;
      const double x0 = ta.side == Side::Left ? -L : 0.0;
      const double x1 = ta.side == Side::Left ? 0.0 : L;
      const Cplx spin = dot(ta.spinor, tb.spinor);
      if (spin == Cplx{0.0, 0.0}) continue;
      acc += std::conj(ta.coeff) * tb.coeff * spin *
             pair_integral(ta.exponent, ta.zref, tb.exponent, tb.zref, x0, x1);
    }
  }
  return acc;
}

double box_norm(const BoxWave& a, double L) {
  return std::sqrt(std::abs(box_inner(a, a, L).real()));
}

void scale(BoxWave& wave, Cplx factor) {
  for (BoxTerm& t : wave.terms) t.coeff *= factor;
}

Cplx box_delta(double p, double q, double L) {
  const double d = q - p;
  if (std::abs(d) * L < 1e-12) return {1.0, 0.0};
  const Cplx arg{0.0, d * L};
  return (std::exp(arg) - 1.0) / (Cplx{0.0, d} * L);
}

bool on_grid(double k, double L, double tol) {
  const double n = k * L / (2.0 * std::numbers::pi);
  return std::abs(n - std::round(n)) <= tol;
}

double grid_momentum(long n, double L) {
  return 2.0 * std::numbers::pi * static_cast<double>(n) / L;
}

BoxWave free_negative_state(double k, double m, double L) {
  // n_k(z) = (-u_k, 1)^T e^{ikz} with u odd in k; normalized over (-L, L).
  const double u = k / (m + std::hypot(m, k));
  const double norm = 1.0 / std::sqrt(2.0 * L * (1.0 + u * u));
  const Spinor2 s{Cplx{-u * norm, 0.0}, Cplx{norm, 0.0}};
  const Cplx expo{0.0, k};
  BoxWave wave;
  wave.terms = {{Side::Left, Cplx{1.0, 0.0}, s, expo, 0.0},
                {Side::Right, Cplx{1.0, 0.0}, s, expo, 0.0}};
  return wave;
}

}  // namespace dirac1d
