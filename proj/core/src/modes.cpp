#include "dirac1d/modes.hpp"

#include <cmath>
#include <stdexcept>

namespace dirac1d {

namespace {

// sqrt(d^2 - m^2) in factored form; exact zero at the band edge.
double branch_wavenumber(double d, double m) {
  const double s = (d - m) * (d + m);
  return s <= 0.0 ? 0.0 : std::sqrt(s);
}

}  // namespace

std::string_view to_string(BandCase band) {
  switch (band) {
    case BandCase::AboveStep: return "above_step";
    case BandCase::FullReflectUpper: return "full_reflect_upper";
    case BandCase::FullReflectLower: return "full_reflect_lower";
    case BandCase::KleinTransmitting: return "klein_transmitting";
    case BandCase::GapNoStates: return "gap_no_states";
    case BandCase::EvanLeftTravelRightPlus: return "evan_left_travel_right_plus";
    case BandCase::EvanLeftTravelRightMinus: return "evan_left_travel_right_minus";
    case BandCase::FullyNegative: return "fully_negative";
  }
  return "unknown";
}

std::string_view to_string(ModeKind kind) {
  switch (kind) {
    case ModeKind::PropagatingPositive: return "propagating_positive";
    case ModeKind::PropagatingNegative: return "propagating_negative";
    case ModeKind::EvanescentPlus: return "evanescent_plus";
    case ModeKind::EvanescentMinus: return "evanescent_minus";
    case ModeKind::Forbidden: return "forbidden";
  }
  return "unknown";
}

double u_of_k(double k, double m) {
  if (k < 0.0) throw std::domain_error("u_of_k: k must be a magnitude >= 0");
  if (k == 0.0 && m == 0.0) throw std::domain_error("u_of_k: k and m both zero");
  return k / (m + std::hypot(m, k));
}

double w_of_kappa(double kappa, double m) {
  if (kappa < 0.0) throw std::domain_error("w_of_kappa: kappa must be >= 0");
  if (kappa > m) throw std::domain_error("w_of_kappa: kappa > m, no evanescent state");
  if (kappa == 0.0 && m == 0.0) throw std::domain_error("w_of_kappa: kappa and m both zero");
  const double root = (m - kappa) * (m + kappa);
  return kappa / (m + (root <= 0.0 ? 0.0 : std::sqrt(root)));
}

double current_of_u(double u) { return 2.0 * u / (1.0 + u * u); }

SegmentMode classify_mode(double E, const PhysParams& p) {
  if (p.m < 0.0) throw std::domain_error("classify_mode: m < 0");
  const double d = E - p.V;
  SegmentMode mode;
  mode.energy = E;
  mode.potential = p.V;
  if (d >= p.m) {
    mode.kind = ModeKind::PropagatingPositive;
    mode.wavenumber = branch_wavenumber(d, p.m);
    mode.spinorRatio = (p.m == 0.0 && mode.wavenumber == 0.0)
                           ? 1.0
                           : u_of_k(mode.wavenumber, p.m);
  } else if (d <= -p.m) {
    mode.kind = ModeKind::PropagatingNegative;
    mode.wavenumber = branch_wavenumber(-d, p.m);
    mode.spinorRatio = (p.m == 0.0 && mode.wavenumber == 0.0)
                           ? 1.0
                           : u_of_k(mode.wavenumber, p.m);
  } else {
    mode.kind = d >= 0.0 ? ModeKind::EvanescentPlus : ModeKind::EvanescentMinus;
    const double s = (p.m - d) * (p.m + d);
    mode.wavenumber = s <= 0.0 ? 0.0 : std::sqrt(s);
    mode.spinorRatio = w_of_kappa(mode.wavenumber, p.m);
  }
  return mode;
}

Spinor2 make_spinor(const SegmentMode& mode, int direction) {
  if (direction != 1 && direction != -1)
    throw std::domain_error("make_spinor: direction must be +1 or -1");
  const double dir = static_cast<double>(direction);
  const double r = mode.spinorRatio;
  switch (mode.kind) {
    case ModeKind::PropagatingPositive:
      return {Cplx{1.0, 0.0}, Cplx{dir * r, 0.0}};
    case ModeKind::PropagatingNegative:
      return {Cplx{dir * r, 0.0}, Cplx{1.0, 0.0}};
    case ModeKind::EvanescentPlus:
      return {Cplx{1.0, 0.0}, Cplx{0.0, dir * r}};
    case ModeKind::EvanescentMinus:
      return {Cplx{0.0, -dir * r}, Cplx{1.0, 0.0}};
    case ModeKind::Forbidden:
      break;
  }
  throw std::domain_error("make_spinor: forbidden mode has no spinor");
}

Cplx phase_exponent(const SegmentMode& mode, int direction) {
  if (direction != 1 && direction != -1)
    throw std::domain_error("phase_exponent: direction must be +1 or -1");
  const double dir = static_cast<double>(direction);
  switch (mode.kind) {
    case ModeKind::PropagatingPositive:
      return Cplx{0.0, dir * mode.wavenumber};
    case ModeKind::PropagatingNegative:
      return Cplx{0.0, -dir * mode.wavenumber};
    case ModeKind::EvanescentPlus:
    case ModeKind::EvanescentMinus:
      return Cplx{-dir * mode.wavenumber, 0.0};
    case ModeKind::Forbidden:
      break;
  }
  throw std::domain_error("phase_exponent: forbidden mode");
}

BandCase classify_band(double E, double V0, double m) {
  if (m <= 0.0) throw std::domain_error("classify_band: requires m > 0");
  if (V0 < 0.0) throw std::domain_error("classify_band: requires V0 >= 0");
  const ModeKind left = classify_mode(E, {m, 0.0}).kind;
  const ModeKind right = classify_mode(E, {m, V0}).kind;
  if (left == ModeKind::PropagatingPositive) {
    switch (right) {
      case ModeKind::PropagatingPositive: return BandCase::AboveStep;
      case ModeKind::EvanescentPlus: return BandCase::FullReflectUpper;
      case ModeKind::EvanescentMinus: return BandCase::FullReflectLower;
      case ModeKind::PropagatingNegative: return BandCase::KleinTransmitting;
      default: break;
    }
  } else if (left == ModeKind::PropagatingNegative) {
    // V0 >= 0 forces the right side negative as well.
    return BandCase::FullyNegative;
  } else {
    switch (right) {
      case ModeKind::PropagatingNegative:
        return left == ModeKind::EvanescentPlus
                   ? BandCase::EvanLeftTravelRightPlus
                   : BandCase::EvanLeftTravelRightMinus;
      case ModeKind::EvanescentPlus:
      case ModeKind::EvanescentMinus:
        return BandCase::GapNoStates;
      default: break;
    }
  }
  throw std::logic_error("classify_band: unreachable mode combination");
}

bool band_carries_current(BandCase band) {
  return band != BandCase::GapNoStates;
}

}  // namespace dirac1d
