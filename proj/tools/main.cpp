#include <CLI11.hpp>
#include <iostream>

#include "visclab/harness.hpp"

int main(int argc, char** argv) {
  using namespace visclab;
  CLI::App app{"visclab: viscous conservation law experiments"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  ProfileOptions popt;
  auto* profile = app.add_subcommand("profile", "Sample a wave profile and its derivatives");
  profile->add_option("--kind", popt.kind, "rarefaction, smoothed or contact")
      ->check(CLI::IsMember({"rarefaction", "smoothed", "contact"}));
  profile->add_option("--flux", popt.flux, "zero, burgers or exponential");
  profile->add_option("--um", popt.u_minus, "left state");
  profile->add_option("--up", popt.u_plus, "right state");
  profile->add_option("--t", popt.t, "time");
  profile->add_option("--q", popt.q, "smoothing exponent");
  profile->add_option("--mu", popt.mu, "diffusion coefficient (contact)");
  profile->add_option("--speed", popt.speed, "drift speed (contact)");
  profile->add_option("--x-min", popt.x_min);
  profile->add_option("--x-max", popt.x_max);
  profile->add_option("--points", popt.points, "sample count (default: spacing 0.05)");
  profile->add_option("--out", popt.out, "output directory");

  std::string config;
  auto* solve = app.add_subcommand("solve", "Run an experiment config");
  solve->add_option("config", config)->required();

  DecayOptions dopt;
  std::string dconfig, dseries;
  auto* decay = app.add_subcommand("decay", "Fit decay exponents and compare with the theoretical rates");
  decay->add_option("config", dconfig, "experiment config");
  decay->add_option("--series", dseries, "CSV series file instead of a config");
  decay->add_option("--check", dopt.checks, "check line id:quantity:norm[:tol]");
  decay->add_flag("--reuse", dopt.reuse_snapshots, "analyse snapshots already written by solve");
  decay->add_option("--out", dopt.out, "output directory for --series");

  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "Check the wave-profile properties numerically");
  verify->add_option("--q", vopt.q);
  verify->add_option("--flux", vopt.flux);
  verify->add_option("--um", vopt.u_minus);
  verify->add_option("--up", vopt.u_plus);
  verify->add_option("--r", vopt.r_values, "norm orders (numbers >= 1 or inf)");
  verify->add_option("--t-min", vopt.t_lo);
  verify->add_option("--t-max", vopt.t_hi);
  verify->add_option("--times", vopt.times);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  if (*profile) return cmd_profile(popt, std::cout, std::cerr);
  if (*solve) return cmd_solve(config, std::cout, std::cerr);
  if (*decay) {
    if (!dconfig.empty()) dopt.config = dconfig;
    if (!dseries.empty()) dopt.series = dseries;
    return cmd_decay(dopt, std::cout, std::cerr);
  }
  return cmd_verify(vopt, std::cout, std::cerr);
}
