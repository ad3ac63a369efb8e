#include "sweeps.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <initializer_list>
#include <mutex>
#include <numbers>
#include <ostream>
#include <random>
#include <thread>
#include <vector>

#include "dirac1d/massless.hpp"
#include "dirac1d/overlap.hpp"
#include "dirac1d/step.hpp"

namespace dirac1d::cli {

namespace {

double grid_value(const GridSpec& g, long i) {
  return g.start + (g.end - g.start) * static_cast<double>(i) /
                       static_cast<double>(g.count - 1);
}

// Records computed in parallel chunks, emitted in grid order.
std::vector<std::string> map_grid(const GridSpec& g,
                                  const std::function<std::string(long, double)>& fn) {
  std::vector<std::string> rows(g.count);
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const long chunks = std::min<long>(g.count, static_cast<long>(hw));
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex errorMutex;
  for (long c = 0; c < chunks; ++c) {
    pool.emplace_back([&, c] {
      try {
        for (long i = c; i < g.count; i += chunks) rows[i] = fn(i, grid_value(g, i));
      } catch (...) {
        const std::lock_guard<std::mutex> lock(errorMutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return rows;
}

// Deterministic 1% sample: fixed seed, one Bernoulli draw per record index.
std::vector<bool> verify_mask(long count, bool enabled) {
  std::vector<bool> mask(count, false);
  if (!enabled) return mask;
  std::mt19937 rng(987654321u);
  std::uniform_int_distribution<int> percent(0, 99);
  bool any = false;
  for (long i = 0; i < count; ++i) {
    mask[i] = percent(rng) == 0;
    any = any || mask[i];
  }
  if (!any && count > 0) mask[count / 2] = true;
  return mask;
}

void check_amplitudes(const char* what, double x, Cplx a, Cplx b, double tol) {
  if (std::abs(a - b) > tol)
    throw VerifyError(std::string(what) + " oracle disagreement at " +
                      format_double(x) + ": |delta| = " +
                      format_double(std::abs(a - b)));
}

std::string join(std::initializer_list<std::string> fields) {
  std::string row;
  bool first = true;
  for (const auto& f : fields) {
    if (!first) row += ',';
    row += f;
    first = false;
  }
  row += '\n';
  return row;
}

void emit(std::ostream& out, const std::string& header,
          const std::vector<std::string>& rows) {
  out << header << '\n';
  for (const auto& r : rows) out << r;
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  char rest = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%ld%c", &g.start, &g.end, &g.count,
                  &rest) != 3)
    throw UsageError("grid must be '<start>:<end>:<count>', got '" + text + "'");
  if (g.count < 2) throw UsageError("grid count must be >= 2");
  if (!(g.start < g.end)) throw UsageError("grid start must be < end");
  return g;
}

void run_step_sweep(const SweepOptions& opt, std::ostream& csv) {
  if (opt.V0 < 0.0) throw UsageError("step sweep requires V0 >= 0");
  if (opt.grid.start <= 0.0) throw UsageError("step sweep momenta must be > 0");
  const auto mask = verify_mask(opt.grid.count, opt.verify);
  const auto rows = map_grid(opt.grid, [&](long i, double k) {
    const double E = std::hypot(1.0, k);
    const BandCase band = classify_band(E, opt.V0, 1.0);
    if (!band_carries_current(band))
      return join({format_double(k), format_double(E),
                   std::string(to_string(band)), "", "", "", "", "", ""});
    const ScatteringResult r = step_scatter(E, opt.V0, 1.0);
    if (mask[i]) {
      const MatchedState oracle = match_oracle(E, opt.V0, 1.0);
      check_amplitudes("step f", k, r.f, reflection_amplitude(oracle), opt.tol);
      check_amplitudes("step g", k, r.g, transmission_amplitude(oracle), opt.tol);
    }
    return join({format_double(k), format_double(E), std::string(to_string(band)),
                 format_double(r.f.real()), format_double(r.f.imag()),
                 format_double(r.g.real()), format_double(r.g.imag()),
                 format_double(r.R), format_double(r.T)});
  });
  emit(csv, "k,E,band,f_re,f_im,g_re,g_im,R,T", rows);
}

void run_barrier_sweep(const SweepOptions& opt, std::ostream& csv) {
  if (opt.V0 < 0.0) throw UsageError("barrier sweep requires V0 >= 0");
  if (!(opt.width > 0.0)) throw UsageError("barrier sweep requires width > 0");
  if (opt.grid.start <= 0.0) throw UsageError("barrier sweep momenta must be > 0");
  const BarrierSpec spec{opt.V0, opt.width};
  const PotentialProfile profile{0.0, {{spec.a, spec.V0}}, 0.0};
  const auto mask = verify_mask(opt.grid.count, opt.verify);
  const auto rows = map_grid(opt.grid, [&](long i, double k) {
    const double E = std::hypot(1.0, k);
    const ScatteringResult r = barrier_scatter(spec, E, 1.0);
    if (mask[i]) {
      const ScatteringResult oracle = direct_profile_solve(profile, E, 1.0);
      check_amplitudes("barrier f", k, r.f, oracle.f, opt.tol);
      check_amplitudes("barrier g", k, r.g, oracle.g, opt.tol);
    }
    const SegmentMode interior = classify_mode(E, {1.0, opt.V0});
    return join({format_double(k), format_double(E),
                 std::string(to_string(interior.kind)),
                 format_double(r.f.real()), format_double(r.f.imag()),
                 format_double(r.g.real()), format_double(r.g.imag()),
                 format_double(r.R), format_double(r.T)});
  });
  emit(csv, "k,E,interior,f_re,f_im,g_re,g_im,R,T", rows);
}

void run_overlap_sweep(const SweepOptions& opt, std::ostream& csv) {
  if (opt.grid.start < 0.0) throw UsageError("overlap sweep requires V0 >= 0");
  const auto mask = verify_mask(opt.grid.count, opt.verify);
  const auto rows = map_grid(opt.grid, [&](long i, double V0) {
    const double n2 = n2_per_length(V0, 1.0);
    const double intuitive = intuitive_estimate(V0, 1.0);
    std::string n3Text, totalText, errText;
    try {
      const double n3 = n3_per_length(V0, 1.0, opt.tol < 1e-10 ? opt.tol : 1e-10);
      n3Text = format_double(n3);
      totalText = format_double(n2 + n3);
      if (mask[i]) {
        if (V0 > 0.0) {
          const double box = n2_finite_l_per_length(FiniteLConfig{}, V0, 1.0);
          if (std::abs(box - n2) > 0.01 * n2)
            throw VerifyError("overlap n2 box-count disagreement at V0 = " +
                              format_double(V0));
        }
        if (V0 > 2.0) {
          const double kmax = std::sqrt(V0 * (V0 - 2.0));
          const long N = 100000;
          double acc = 0.0;
          for (long j = 0; j < N; ++j)
            acc += klein_overlap_integrand((j + 0.5) * kmax / N, V0, 1.0);
          acc *= kmax / N / (2.0 * std::numbers::pi);
          if (std::abs(acc - n3) > 1e-5 * std::max(1.0, n3))
            throw VerifyError("overlap n3 Riemann disagreement at V0 = " +
                              format_double(V0));
        }
      }
    } catch (const std::runtime_error& e) {
      if (dynamic_cast<const VerifyError*>(&e)) throw;
      errText = "quadrature";
    }
    return join({format_double(V0), format_double(n2), n3Text,
                 format_double(intuitive), totalText, errText});
  });
  emit(csv, "V0,n2PerL,n3PerL,intuitivePerL,totalPerL,error", rows);
}

void run_massless_sweep(const SweepOptions& opt, std::ostream& csv) {
  const auto mask = verify_mask(opt.grid.count, opt.verify);
  const auto rows = map_grid(opt.grid, [&](long i, double E) {
    const ScatteringResult r = massless_step_scatter(E, opt.V0);
    if (mask[i]) {
      const MatchedState oracle = massless_match_oracle(E, opt.V0);
      check_amplitudes("massless f", E, r.f, reflection_amplitude(oracle), opt.tol);
      check_amplitudes("massless g", E, r.g, transmission_amplitude(oracle), opt.tol);
    }
    return join({format_double(E), format_double(r.kLeft),
                 format_double(r.kRight), format_double(r.f.real()),
                 format_double(r.f.imag()), format_double(r.g.real()),
                 format_double(r.g.imag()), format_double(r.R),
                 format_double(r.T)});
  });
  emit(csv, "E,k,kprime,f_re,f_im,g_re,g_im,R,T", rows);
}

void write_band_comparison(std::ostream& csv) {
  csv << "model,energy_sign,current_sign\n";
  for (const BandComparisonRow& row : band_comparison()) {
    csv << (row.model == BandModel::MasslessDirac ? "massless_dirac"
                                                  : "graphene_band")
        << ',' << (row.energySign == Sign::Plus ? '+' : '-') << ','
        << (row.currentSign == Sign::Plus ? '+' : '-') << '\n';
  }
}

void run_profile(const PotentialProfile& profile, double E, double tol,
                 bool verify, std::ostream& out) {
  const ScatteringResult r = profile_scatter(profile, E, 1.0);
  if (verify) {
    const ScatteringResult oracle = direct_profile_solve(profile, E, 1.0);
    check_amplitudes("profile f", E, r.f, oracle.f, tol);
    check_amplitudes("profile g", E, r.g, oracle.g, tol);
  }
  out << "band=" << to_string(r.band) << '\n'
      << "f=" << format_double(r.f.real()) << ' ' << format_double(r.f.imag())
      << '\n'
      << "g=" << format_double(r.g.real()) << ' ' << format_double(r.g.imag())
      << '\n'
      << "R=" << format_double(r.R) << '\n'
      << "T=" << format_double(r.T) << '\n'
      << "k_left=" << format_double(r.kLeft) << '\n'
      << "k_right=" << format_double(r.kRight) << '\n';
}

}  // namespace dirac1d::cli
