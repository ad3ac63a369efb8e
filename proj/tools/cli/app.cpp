#include "app.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <string>

#include "profile_format.hpp"
#include "sweeps.hpp"

namespace dirac1d::cli {

namespace {

struct CommonFlags {
  std::string gridText;
  std::string outPath;
  double tol = 1e-10;
  bool verify = false;
  bool massUnits = true;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool withMassUnits) {
  cmd->add_option("--grid", flags.gridText, "sweep grid '<start>:<end>:<count>'")
      ->required();
  cmd->add_option("--out", flags.outPath, "write CSV to this file (default stdout)");
  cmd->add_option("--tol", flags.tol, "oracle comparison tolerance for --verify");
  cmd->add_flag("--verify", flags.verify,
                "re-run an independent oracle on a random 1% of records");
  if (withMassUnits)
    cmd->add_flag("--mass-units,!--no-mass-units", flags.massUnits,
                  "inputs and outputs in units of the rest mass (required)");
}

// Runs fn with CSV directed at --out or the given stream.
int with_output(const CommonFlags& flags, std::ostream& out, std::ostream& err,
                const std::function<void(std::ostream&)>& fn) {
  if (flags.outPath.empty()) {
    fn(out);
    return 0;
  }
  std::ofstream file(flags.outPath);
  if (!file) {
    err << "error: cannot open output file '" << flags.outPath << "'\n";
    return 1;
  }
  fn(file);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact 1-D Dirac scattering off piecewise-constant potentials"};
  app.require_subcommand(1);

  CommonFlags step, barrier, overlap, massless;
  double stepV0 = 0.0, barrierV0 = 0.0, barrierWidth = 0.0, masslessV0 = 0.0;
  bool masslessTable = false;
  std::string profilePath;
  double profileEnergy = 0.0;
  double profileTol = 1e-10;
  bool profileVerify = false;

  CLI::App* stepCmd = app.add_subcommand(
      "step-sweep", "reflection off a potential step vs incident momentum");
  stepCmd->add_option("--v0", stepV0, "step height, units of m")->required();
  add_common(stepCmd, step, true);

  CLI::App* barrierCmd = app.add_subcommand(
      "barrier-sweep", "reflection off a square barrier vs incident momentum");
  barrierCmd->add_option("--v0", barrierV0, "barrier height, units of m")
      ->required();
  barrierCmd->add_option("--width", barrierWidth, "barrier width, units of 1/m")
      ->required();
  add_common(barrierCmd, barrier, true);

  CLI::App* overlapCmd = app.add_subcommand(
      "overlap-sweep", "sudden-approximation overlap per unit length vs V0");
  add_common(overlapCmd, overlap, true);

  CLI::App* masslessCmd = app.add_subcommand(
      "massless", "zero-mass step transparency sweep (absolute units)");
  masslessCmd->add_option("--v0", masslessV0, "step height")->required();
  masslessCmd->add_flag("--table", masslessTable,
                        "print the band-structure comparison rows instead");
  add_common(masslessCmd, massless, false);
  masslessCmd->get_option("--grid")->required(false);

  CLI::App* profileCmd = app.add_subcommand(
      "profile", "scattering off a profile file at one energy");
  profileCmd->add_option("--file", profilePath, "potential profile file")
      ->required();
  profileCmd->add_option("--energy", profileEnergy, "total energy, units of m")
      ->required();
  profileCmd->add_option("--tol", profileTol, "oracle tolerance for --verify");
  profileCmd->add_flag("--verify", profileVerify,
                       "check against the direct matching solve");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (stepCmd->parsed()) {
      if (!step.massUnits) throw UsageError("only --mass-units is supported");
      SweepOptions opt{parse_grid(step.gridText), stepV0, 0.0, step.tol,
                       step.verify};
      return with_output(step, out, err,
                         [&](std::ostream& csv) { run_step_sweep(opt, csv); });
    }
    if (barrierCmd->parsed()) {
      if (!barrier.massUnits) throw UsageError("only --mass-units is supported");
      SweepOptions opt{parse_grid(barrier.gridText), barrierV0, barrierWidth,
                       barrier.tol, barrier.verify};
      return with_output(barrier, out, err, [&](std::ostream& csv) {
        run_barrier_sweep(opt, csv);
      });
    }
    if (overlapCmd->parsed()) {
      if (!overlap.massUnits) throw UsageError("only --mass-units is supported");
      SweepOptions opt{parse_grid(overlap.gridText), 0.0, 0.0, overlap.tol,
                       overlap.verify};
      return with_output(overlap, out, err, [&](std::ostream& csv) {
        run_overlap_sweep(opt, csv);
      });
    }
    if (masslessCmd->parsed()) {
      if (masslessTable)
        return with_output(massless, out, err,
                           [&](std::ostream& csv) { write_band_comparison(csv); });
      if (massless.gridText.empty())
        throw UsageError("massless sweep requires --grid (or use --table)");
      SweepOptions opt{parse_grid(massless.gridText), masslessV0, 0.0,
                       massless.tol, massless.verify};
      return with_output(massless, out, err, [&](std::ostream& csv) {
        run_massless_sweep(opt, csv);
      });
    }
    if (profileCmd->parsed()) {
      const PotentialProfile profile = load_profile(profilePath);
      run_profile(profile, profileEnergy, profileTol, profileVerify, out);
      return 0;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const ProfileParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "physics error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "physics error: " << e.what() << '\n';
    return 2;
  } catch (const VerifyError& e) {
    err << "verification failure: " << e.what() << '\n';
    return 3;
  } catch (const std::overflow_error& e) {
    err << "numerical failure: " << e.what() << '\n';
    return 3;
  } catch (const std::runtime_error& e) {
    err << "numerical failure: " << e.what() << '\n';
    return 3;
  }
  return 0;
}

}  // namespace dirac1d::cli
