#include "dirac1d/transfer.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dirac1d {

namespace {

struct Basis {
  SegmentMode mode;
  Spinor2 plus;   // spinor of the +direction basis solution
  Spinor2 minus;  // spinor of the -direction basis solution
  Cplx alpha;     // phase_exponent(mode, +1); the -direction exponent is -alpha
};

Basis region_basis(double E, double V, double m) {
  Basis b;
  b.mode = classify_mode(E, {m, V});
  b.plus = make_spinor(b.mode, +1);
  b.minus = make_spinor(b.mode, -1);
  b.alpha = phase_exponent(b.mode, +1);
  return b;
}

bool propagating(const SegmentMode& mode) {
  return mode.kind == ModeKind::PropagatingPositive ||
         mode.kind == ModeKind::PropagatingNegative;
}

// inv(S_next) * S_prev with S = [s_plus | s_minus].
TransferMatrix interface_matrix(const Basis& prev, const Basis& next) {
  const Cplx det =
      next.plus.upper * next.minus.lower - next.plus.lower * next.minus.upper;
  if (std::abs(det) < 1e-300)
    throw std::domain_error("degenerate segment mode at a band edge");
  TransferMatrix t;
  t.a11 = (next.minus.lower * prev.plus.upper -
           next.minus.upper * prev.plus.lower) / det;
  t.a12 = (next.minus.lower * prev.minus.upper -
           next.minus.upper * prev.minus.lower) / det;
  t.a21 = (next.plus.upper * prev.plus.lower -
           next.plus.lower * prev.plus.upper) / det;
  t.a22 = (next.plus.upper * prev.minus.lower -
           next.plus.lower * prev.minus.upper) / det;
  return t;
}

ScatteringResult extract(const TransferMatrix& t, const Basis& leadL,
                         const Basis& leadR, BandCase band) {
  ScatteringResult r;
  r.band = band;
  r.f = -t.a21 / t.a22;
  r.g = t.a11 + t.a12 * r.f;
  r.R = std::norm(r.f);
  r.T = std::norm(r.g) * leadR.mode.spinorRatio / leadL.mode.spinorRatio;
  r.kLeft = leadL.mode.wavenumber;
  r.kRight = leadR.mode.wavenumber;
  return r;
}

BandCase lead_band(const Basis& leadL, const Basis& leadR) {
  const bool lPos = leadL.mode.kind == ModeKind::PropagatingPositive;
  const bool rPos = leadR.mode.kind == ModeKind::PropagatingPositive;
  if (lPos && rPos) return BandCase::AboveStep;
  if (!lPos && !rPos) return BandCase::FullyNegative;
  return BandCase::KleinTransmitting;
}

void validate(const PotentialProfile& profile) {
  for (const Segment& s : profile.segments)
    if (!(s.width > 0.0))
      throw std::invalid_argument("profile segment width must be > 0");
}

}  // namespace

TransferMatrix operator*(const TransferMatrix& lhs, const TransferMatrix& rhs) {
  return {lhs.a11 * rhs.a11 + lhs.a12 * rhs.a21,
          lhs.a11 * rhs.a12 + lhs.a12 * rhs.a22,
          lhs.a21 * rhs.a11 + lhs.a22 * rhs.a21,
          lhs.a21 * rhs.a12 + lhs.a22 * rhs.a22};
}

TransferMatrix disc_matrix(Cplx a, Cplx b) {
  return {a + b, a - b, a - b, a + b};
}

TransferMatrix prop_matrix(Cplx alpha) {
  if (std::abs(alpha.real()) > kStabilityCap)
    throw std::overflow_error("propagation exponent beyond stability cap");
  return {std::exp(alpha), 0.0, 0.0, std::exp(-alpha)};
}

TransferMatrix compose_profile(const PotentialProfile& profile, double E,
                               double m) {
  validate(profile);
  const Basis leadL = region_basis(E, profile.leftLeadV, m);
  const Basis leadR = region_basis(E, profile.rightLeadV, m);
  if (!propagating(leadL.mode) || !propagating(leadR.mode))
    throw std::domain_error("evanescent lead: no asymptotic scattering state");

  TransferMatrix t = TransferMatrix::identity();
  Basis prev = leadL;
  for (const Segment& s : profile.segments) {
    const Basis seg = region_basis(E, s.V, m);
    t = prop_matrix(seg.alpha * s.width) * interface_matrix(prev, seg) * t;
    prev = seg;
  }
  return interface_matrix(prev, leadR) * t;
}

ScatteringResult profile_scatter(const PotentialProfile& profile, double E,
                                 double m) {
  const Basis leadL = region_basis(E, profile.leftLeadV, m);
  const Basis leadR = region_basis(E, profile.rightLeadV, m);
  return extract(compose_profile(profile, E, m), leadL, leadR,
                 lead_band(leadL, leadR));
}

ScatteringResult direct_profile_solve(const PotentialProfile& profile,
                                      double E, double m) {
  validate(profile);
  const Basis leadL = region_basis(E, profile.leftLeadV, m);
  const Basis leadR = region_basis(E, profile.rightLeadV, m);
  if (!propagating(leadL.mode) || !propagating(leadR.mode))
    throw std::domain_error("evanescent lead: no asymptotic scattering state");

  const std::size_t n = profile.segments.size();
  std::vector<Basis> seg(n);
  for (std::size_t j = 0; j < n; ++j)
    seg[j] = region_basis(E, profile.segments[j].V, m);

  // Unknowns x = [f, A_1, B_1, ..., A_n, B_n, g]. A_j multiplies the
  // +direction solution referenced at the segment's left edge, B_j the
  // -direction solution referenced at its right edge; every matrix entry is
  // then bounded by max(1, |spinor|) regardless of kappa * width.
  const std::size_t dim = 2 * n + 2;
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(dim);

  const auto put = [&M](std::size_t row, std::size_t col, const Spinor2& s,
                        Cplx factor) {
    M(row, col) = s.upper * factor;
    M(row + 1, col) = s.lower * factor;
  };

  // Row pair per interface: psi_right(x_i) - psi_left(x_i) = 0, with the unit
  // incident wave moved to the right-hand side.
  for (std::size_t i = 0; i <= n; ++i) {
    const std::size_t row = 2 * i;
    if (i == 0) {
      rhs(row) = leadL.plus.upper;
      rhs(row + 1) = leadL.plus.lower;
      put(row, 0, leadL.minus, -1.0);
    } else {
      const Basis& b = seg[i - 1];
      const double w = profile.segments[i - 1].width;
      put(row, 2 * i - 1, b.plus, -std::exp(b.alpha * w));
      put(row, 2 * i, b.minus, -1.0);
    }
    if (i == n) {
      put(row, dim - 1, leadR.plus, 1.0);
    } else {
      const Basis& b = seg[i];
      const double w = profile.segments[i].width;
      put(row, 2 * i + 1, b.plus, 1.0);
      put(row, 2 * i + 2, b.minus, std::exp(b.alpha * w));
    }
  }

  const Eigen::VectorXcd x = M.colPivHouseholderQr().solve(rhs);
  ScatteringResult r;
  r.band = lead_band(leadL, leadR);
  r.f = x(0);
  r.g = x(dim - 1);
  r.R = std::norm(r.f);
  r.T = std::norm(r.g) * leadR.mode.spinorRatio / leadL.mode.spinorRatio;
  r.kLeft = leadL.mode.wavenumber;
  r.kRight = leadR.mode.wavenumber;
  return r;
}

ScatteringResult barrier_scatter(const BarrierSpec& spec, double E, double m) {
  if (!(spec.a > 0.0)) throw std::invalid_argument("barrier width must be > 0");
  if (!(E > m)) throw std::domain_error("barrier_scatter: requires E > m");
  const PotentialProfile profile{0.0, {{spec.a, spec.V0}}, 0.0};
  try {
    return profile_scatter(profile, E, m);
  } catch (const std::overflow_error&) {
    // Deep tunnelling: coefficients rescaled by e^{-kappa a} keep the direct
    // matching system bounded.
    return direct_profile_solve(profile, E, m);
  }
}

std::vector<double> barrier_resonance_energies(const BarrierSpec& spec,
                                               double m, double maxEnergy) {
  std::vector<double> energies;
  const double pi = 3.14159265358979323846;
  for (int n = 1;; ++n) {
    const double kp = n * pi / spec.a;
    const double inner = std::hypot(m, kp);
    const double below = spec.V0 - inner;  // interior negative-energy branch
    if (below > m) energies.push_back(below);
    const double above = spec.V0 + inner;
    if (above > maxEnergy && below <= m) break;
    if (above <= maxEnergy) energies.push_back(above);
  }
  std::sort(energies.begin(), energies.end());
  return energies;
}

}  // namespace dirac1d
