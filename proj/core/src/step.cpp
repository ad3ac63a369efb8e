#include "dirac1d/step.hpp"

#include <cmath>
#include <stdexcept>

namespace dirac1d {

namespace {

constexpr Cplx kImag{0.0, 1.0};

ScatteringResult travelling_pair(double u, double up, BandCase band) {
  ScatteringResult r;
  r.band = band;
  if (u == 0.0 && up == 0.0) {
    // Degenerate corner E = m with V0 = 0: no step at all.
    r.f = 0.0;
    r.g = 1.0;
    r.R = 0.0;
    r.T = 1.0;
    return r;
  }
  r.f = (u - up) / (u + up);
  r.g = 2.0 * u / (u + up);
  r.R = std::norm(r.f);
  r.T = 4.0 * u * up / ((u + up) * (u + up));
  return r;
}

// Solve [a | b] x = rhs by Cramer's rule (columns a, b are spinors).
void solve2x2(const Spinor2& a, const Spinor2& b, const Spinor2& rhs,
              Cplx& x0, Cplx& x1) {
  const Cplx det = a.upper * b.lower - a.lower * b.upper;
  const double scale = std::sqrt(a.norm2() * b.norm2());
  if (std::abs(det) < 1e-14 * (scale > 0.0 ? scale : 1.0))
    throw std::runtime_error("singular 2x2 matching system");
  x0 = (rhs.upper * b.lower - rhs.lower * b.upper) / det;
  x1 = (a.upper * rhs.lower - a.lower * rhs.upper) / det;
}

}  // namespace

double kprime_above(double E, double V0, double m) {
  if (E < V0 + m) throw std::domain_error("kprime_above: E < V0 + m");
  const double d = E - V0;
  return std::sqrt((d - m) * (d + m));
}

double kprime_klein(double E, double V0, double m) {
  if (V0 < 2.0 * m) throw std::domain_error("kprime_klein: V0 < 2m");
  if (E < m || E > V0 - m)
    throw std::domain_error("kprime_klein: E outside [m, V0 - m]");
  const double d = V0 - E;
  return std::sqrt((d - m) * (d + m));
}

ScatteringResult step_scatter(double E, double V0, double m) {
  if (m <= 0.0) throw std::domain_error("step_scatter: requires m > 0");
  if (V0 < 0.0) throw std::domain_error("step_scatter: requires V0 >= 0");
  const BandCase band = classify_band(E, V0, m);
  const SegmentMode left = classify_mode(E, {m, 0.0});
  const SegmentMode right = classify_mode(E, {m, V0});

  ScatteringResult r;
  switch (band) {
    case BandCase::AboveStep:
      r = travelling_pair(left.spinorRatio, right.spinorRatio, band);
      break;
    case BandCase::FullyNegative:
      // Mirror of the above-step case under E -> -E, V0 -> -V0; the matching
      // equations for the n spinors coincide with the p-spinor ones.
      r = travelling_pair(left.spinorRatio, right.spinorRatio, band);
      break;
    case BandCase::KleinTransmitting: {
      const double u = left.spinorRatio;
      const double up = right.spinorRatio;
      r.band = band;
      r.f = (u * up - 1.0) / (u * up + 1.0);
      r.g = 2.0 * u / (u * up + 1.0);
      r.R = std::norm(r.f);
      r.T = 4.0 * u * up / ((u * up + 1.0) * (u * up + 1.0));
      break;
    }
    case BandCase::FullReflectUpper: {
      const double u = left.spinorRatio;
      const double w = right.spinorRatio;
      r.band = band;
      r.f = (u - kImag * w) / (u + kImag * w);
      r.g = 2.0 * u / (u + kImag * w);
      r.R = 1.0;  // evanescent side carries no current
      r.T = 0.0;
      break;
    }
    case BandCase::FullReflectLower: {
      const double u = left.spinorRatio;
      const double w = right.spinorRatio;
      r.band = band;
      r.f = -(1.0 + kImag * u * w) / (1.0 - kImag * u * w);
      r.g = 2.0 * u / (1.0 - kImag * u * w);
      r.R = 1.0;
      r.T = 0.0;
      break;
    }
    case BandCase::EvanLeftTravelRightPlus: {
      // Incidence from the right; w on the left, u' on the right.
      const double w = left.spinorRatio;
      const double up = right.spinorRatio;
      r.band = band;
      r.f = -(1.0 - kImag * w * up) / (1.0 + kImag * w * up);
      r.g = -2.0 * up / (1.0 + kImag * w * up);
      r.R = 1.0;
      r.T = 0.0;
      break;
    }
    case BandCase::EvanLeftTravelRightMinus: {
      const double w = left.spinorRatio;
      const double up = right.spinorRatio;
      r.band = band;
      r.f = (up + kImag * w) / (up - kImag * w);
      r.g = 2.0 * up / (up - kImag * w);
      r.R = 1.0;
      r.T = 0.0;
      break;
    }
    case BandCase::GapNoStates:
      throw std::domain_error("step_scatter: no states at this energy");
  }
  r.kLeft = left.wavenumber;
  r.kRight = right.wavenumber;
  return r;
}

MatchedState match_oracle(double E, double V0, double m) {
  const BandCase band = classify_band(E, V0, m);
  if (band == BandCase::GapNoStates)
    throw std::domain_error("match_oracle: no wave on either side");
  const SegmentMode left = classify_mode(E, {m, 0.0});
  const SegmentMode right = classify_mode(E, {m, V0});
  const bool fromLeft = left.kind == ModeKind::PropagatingPositive ||
                        left.kind == ModeKind::PropagatingNegative;

  MatchedState state;
  state.energy = E;
  state.band = band;
  state.incidentSide = fromLeft ? 1 : -1;

  Cplx f, g;
  if (fromLeft) {
    // (incident) + f (reflected) = g (transmitted or decaying right)
    const Spinor2 inc = make_spinor(left, +1);
    const Spinor2 refl = make_spinor(left, -1);
    const Spinor2 trans = make_spinor(right, +1);
    solve2x2(refl, {-trans.upper, -trans.lower}, {-inc.upper, -inc.lower}, f, g);
    state.left = {{Cplx{1.0, 0.0}, left, +1}, {f, left, -1}};
    state.right = {{g, right, +1}};
  } else {
    const Spinor2 inc = make_spinor(right, -1);
    const Spinor2 refl = make_spinor(right, +1);
    const Spinor2 trans = make_spinor(left, -1);
    solve2x2(refl, {-trans.upper, -trans.lower}, {-inc.upper, -inc.lower}, f, g);
    state.right = {{Cplx{1.0, 0.0}, right, -1}, {f, right, +1}};
    state.left = {{g, left, -1}};
  }
  return state;
}

Cplx reflection_amplitude(const MatchedState& state) {
  const auto& side = state.incidentSide > 0 ? state.left : state.right;
  return side.size() > 1 ? side[1].coeff : Cplx{0.0, 0.0};
}

Cplx transmission_amplitude(const MatchedState& state) {
  const auto& side = state.incidentSide > 0 ? state.right : state.left;
  return side.empty() ? Cplx{0.0, 0.0} : side[0].coeff;
}

ScatteringResult scattering_from_state(const MatchedState& state) {
  const auto& incSide = state.incidentSide > 0 ? state.left : state.right;
  const auto& outSide = state.incidentSide > 0 ? state.right : state.left;
  ScatteringResult r;
  r.band = state.band;
  r.f = reflection_amplitude(state);
  r.g = transmission_amplitude(state);
  r.R = std::norm(r.f);
  const SegmentMode& incMode = incSide[0].mode;
  const SegmentMode& outMode = outSide[0].mode;
  const bool outCarries = outMode.kind == ModeKind::PropagatingPositive ||
                          outMode.kind == ModeKind::PropagatingNegative;
  r.T = outCarries
            ? std::norm(r.g) * outMode.spinorRatio / incMode.spinorRatio
            : 0.0;
  const SegmentMode& leftMode = state.left[0].mode;
  const SegmentMode& rightMode = state.right[0].mode;
  r.kLeft = leftMode.wavenumber;
  r.kRight = rightMode.wavenumber;
  return r;
}

Spinor2 evaluate_side(std::span<const WaveComponent> side, double z) {
  Spinor2 psi;
  for (const auto& c : side) {
    const Cplx phase = std::exp(phase_exponent(c.mode, c.direction) * z);
    const Spinor2 s = make_spinor(c.mode, c.direction);
    psi.upper += c.coeff * s.upper * phase;
    psi.lower += c.coeff * s.lower * phase;
  }
  return psi;
}

std::vector<Spinor2> reconstruct_wavefunction(const MatchedState& state,
                                              std::span<const double> grid) {
  std::vector<Spinor2> out;
  out.reserve(grid.size());
  for (double z : grid)
    out.push_back(z < 0.0 ? evaluate_side(state.left, z)
                          : evaluate_side(state.right, z));
  return out;
}

double klein_min_reflection_energy(double V0, double m) {
  if (V0 < 2.0 * m)
    throw std::domain_error("klein_min_reflection_energy: V0 < 2m");
  return 0.5 * V0;
}

std::optional<double> klein_transparency_energy(double V0, double m) {
  if (V0 < 2.0 * m) return std::nullopt;
  const auto mismatch = [&](double E) {
    const double u = u_of_k(std::sqrt((E - m) * (E + m)), m);
    const double up = u_of_k(kprime_klein(E, V0, m), m);
    return u * up - 1.0;
  };
  const int n = 512;
  const double lo = m, hi = V0 - m;
  double a = lo, fa = mismatch(lo + 1e-12 * (hi - lo));
  for (int i = 1; i <= n; ++i) {
    const double b = lo + (hi - lo) * i / n;
    const double fb = mismatch(i == n ? b - 1e-12 * (hi - lo) : b);
    if (fa == 0.0) return a;
    if (fa * fb < 0.0) {
      double x0 = a, x1 = b;
      while (x1 - x0 > 1e-12) {
        const double mid = 0.5 * (x0 + x1);
        (mismatch(mid) * fa <= 0.0 ? x1 : x0) = mid;
      }
      return 0.5 * (x0 + x1);
    }
    a = b;
    fa = fb;
  }
  return std::nullopt;
}

}  // namespace dirac1d
