#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "visclab/solver.hpp"
#include "visclab/theorems.hpp"

namespace visclab {

/// Experiment description read from a sectioned key = value file:
///
///   name = "rarefaction_p05"        # required, [A-Za-z0-9_.-]
///   seed = 7                        # random extra bumps (optional)
///   output = "runs/rarefaction"     # relative to the output root; defaults to name
///
///   [flux]       kind = "zero" | "burgers" | "exponential"
///   [viscosity]  kind = "regularized" | "ostwald" | "linear", p, mu
///   [state]      u_minus, u_plus
///   [initial]    kind = "profile" | "mollified" | "constant"
///                profile = "smoothed" | "rarefaction" | "contact", q, mu, speed
///                bump_amplitude, bump_center, bump_width
///                noise_bumps, noise_amplitude, noise_range
///   [grid]       cells, margin, x_left, x_right
///   [time]       t_start, t_end, snapshots, first_snapshot, times = [...],
///                cfl_advection, cfl_diffusion, dt_override
///   [scheme]     reconstruction = "minmod" | "constant"
///   [checks]     lines = ["fan-l1:u:L2", ...]
///
/// Unknown sections or keys, duplicate keys and ill-typed values raise
/// ConfigError carrying the offending line number.
struct ExperimentConfig {
  std::string name;
  std::string output;
  std::uint64_t seed = 0;
  SolverConfig solver;
  ProblemSetup setup;
  std::vector<TheoremCheck> checks;
  /// Exact text the config was parsed from; its hash identifies the run.
  std::string source;
};

/// Default number of log-spaced snapshots in [first_snapshot, t_end].
inline constexpr std::size_t kDefaultSnapshotCount = 40;

ExperimentConfig parse_config(std::string_view text);
/// Reads and parses; a missing file raises ConfigError.
ExperimentConfig load_config(const std::filesystem::path& path);

/// Lowercase hex SHA-256 of the config text.
std::string config_hash(std::string_view text);

/// `count` log-spaced times in [max(first, t_start), t_end]; {t_end} when
/// that interval is empty or starts at 0.
std::vector<double> snapshot_schedule(double t_start, double t_end, double first, std::size_t count);

}  // namespace visclab
