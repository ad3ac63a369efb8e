#pragma once

// Brute-force oracles kept independent of the library's solver paths: a
// hand-rolled pivoted Gaussian elimination over the full interface-matching
// system, plus random-case generators shared by the property and acceptance
// suites.

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "dirac1d/modes.hpp"
#include "dirac1d/transfer.hpp"

namespace dirac1d::testing {

inline std::vector<Cplx> gauss_solve(std::vector<std::vector<Cplx>> A,
                                     std::vector<Cplx> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(A[r][col]) > std::abs(A[pivot][col])) pivot = r;
    if (std::abs(A[pivot][col]) < 1e-300)
      throw std::runtime_error("oracle system is singular");
    std::swap(A[pivot], A[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Cplx factor = A[r][col] / A[col][col];
      for (std::size_t c = col; c < n; ++c) A[r][c] -= factor * A[col][c];
      b[r] -= factor * b[col];
    }
  }
  std::vector<Cplx> x(n);
  for (std::size_t row = n; row-- > 0;) {
    Cplx acc = b[row];
    for (std::size_t c = row + 1; c < n; ++c) acc -= A[row][c] * x[c];
    x[row] = acc / A[row][row];
  }
  return x;
}

struct OracleAmplitudes {
  Cplx f, g;
};

// Continuity of the piecewise solution at every interface, solved as one
// dense linear system. Unknowns: f (left lead), one forward/backward pair per
// segment (forward referenced at the segment's left edge, backward at its
// right edge) and g (right lead).
inline OracleAmplitudes profile_matching_oracle(const PotentialProfile& profile,
                                                double E, double m) {
  struct Region {
    SegmentMode mode;
    Spinor2 fwd, bwd;
    Cplx alpha;
  };
  const auto region = [&](double V) {
    Region r;
    r.mode = classify_mode(E, {m, V});
    r.fwd = make_spinor(r.mode, +1);
    r.bwd = make_spinor(r.mode, -1);
    r.alpha = phase_exponent(r.mode, +1);
    return r;
  };
  const Region leadL = region(profile.leftLeadV);
  const Region leadR = region(profile.rightLeadV);
  const std::size_t n = profile.segments.size();
  std::vector<Region> seg;
  for (const Segment& s : profile.segments) seg.push_back(region(s.V));

  const std::size_t dim = 2 * n + 2;
  std::vector<std::vector<Cplx>> A(dim, std::vector<Cplx>(dim, Cplx{0, 0}));
  std::vector<Cplx> rhs(dim, Cplx{0, 0});
  const auto add = [&](std::size_t row, std::size_t col, const Spinor2& s,
                       Cplx factor) {
    A[row][col] += s.upper * factor;
    A[row + 1][col] += s.lower * factor;
  };

  for (std::size_t i = 0; i <= n; ++i) {
    const std::size_t row = 2 * i;
    if (i == 0) {
      rhs[row] = leadL.fwd.upper;
      rhs[row + 1] = leadL.fwd.lower;
      add(row, 0, leadL.bwd, Cplx{-1.0, 0.0});
    } else {
      const Region& r = seg[i - 1];
      const double w = profile.segments[i - 1].width;
      add(row, 2 * i - 1, r.fwd, -std::exp(r.alpha * w));
      add(row, 2 * i, r.bwd, Cplx{-1.0, 0.0});
    }
    if (i == n) {
      add(row, dim - 1, leadR.fwd, Cplx{1.0, 0.0});
    } else {
      const Region& r = seg[i];
      const double w = profile.segments[i].width;
      add(row, 2 * i + 1, r.fwd, Cplx{1.0, 0.0});
      add(row, 2 * i + 2, r.bwd, std::exp(r.alpha * w));
    }
  }
  const std::vector<Cplx> x = gauss_solve(std::move(A), std::move(rhs));
  return {x[0], x[dim - 1]};
}

// Random profile with propagating leads and every segment exponent magnitude
// below maxExponent.
struct RandomScatteringCase {
  PotentialProfile profile;
  double E = 0.0;
};

inline RandomScatteringCase random_profile_case(std::mt19937& rng,
                                                int maxSegments,
                                                double maxExponent) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double m = 1.0;
  RandomScatteringCase out;
  for (;;) {
    out.E = -6.0 + 12.0 * unit(rng);
    if (std::abs(std::abs(out.E) - m) > 0.05) break;
  }
  const auto leadV = [&] {
    for (;;) {
      const double V = -4.0 + 8.0 * unit(rng);
      if (std::abs(out.E - V) > m + 0.05) return V;
    }
  };
  out.profile.leftLeadV = leadV();
  out.profile.rightLeadV = leadV();
  const int count = static_cast<int>(unit(rng) * (maxSegments + 1));
  for (int s = 0; s < count; ++s) {
    const double V = -8.0 + 16.0 * unit(rng);
    double width = 0.05 + 1.95 * unit(rng);
    const SegmentMode mode = classify_mode(out.E, {m, V});
    const double decay = std::abs(phase_exponent(mode, +1).real());
    if (decay * width >= maxExponent) width = 0.9 * maxExponent / decay;
    out.profile.segments.push_back({width, V});
  }
  return out;
}

// Random (E, V0, m) inside one of the current-carrying-on-both-sides bands.
enum class TravellingBand { Above, Klein, Negative };

struct RandomStepCase {
  double E = 0.0, V0 = 0.0, m = 1.0;
};

inline RandomStepCase random_step_case(std::mt19937& rng, TravellingBand band) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  RandomStepCase c;
  c.m = std::pow(10.0, -1.0 + 2.0 * unit(rng));
  switch (band) {
    case TravellingBand::Above:
      c.V0 = 10.0 * c.m * unit(rng);
      c.E = c.V0 + c.m + (1e-6 + 10.0 * unit(rng)) * c.m;
      break;
    case TravellingBand::Klein:
      c.V0 = (2.0 + 8.0 * unit(rng)) * c.m;
      c.E = c.m + (c.V0 - 2.0 * c.m) * unit(rng);
      break;
    case TravellingBand::Negative:
      c.V0 = 10.0 * c.m * unit(rng);
      c.E = -c.m - (1e-6 + 10.0 * unit(rng)) * c.m;
      break;
  }
  return c;
}

}  // namespace dirac1d::testing
