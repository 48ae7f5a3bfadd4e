#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "visclab/config.hpp"
#include "visclab/grid.hpp"

namespace visclab {

enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitBlowup = 3, kExitInsufficientData = 4 };

/// Root for every relative output path: $VISCLAB_OUTPUT_ROOT, or the working directory.
std::filesystem::path output_root();

struct ProfileOptions {
  std::string kind = "smoothed";  // rarefaction | smoothed | contact
  std::string flux = "burgers";
  double u_minus = -1.0;
  double u_plus = 1.0;
  double t = 1.0;
  double q = 1.0;
  double mu = 1.0;
  double speed = 0.0;
  std::optional<double> x_min;
  std::optional<double> x_max;
  std::size_t points = 0;  // 0: spacing 0.05
  std::string out = "profile";
};

/// Writes profile_<kind>.csv (x,u,u_x,u_t,u_xx) and profile_<kind>.svg; for
/// the rarefaction kinds the plot overlays u^r and U^r(q).
int cmd_profile(const ProfileOptions& opt, std::ostream& out, std::ostream& err);

/// Runs a config: snap_<t>.csv per snapshot, norms.csv, manifest.json.
int cmd_solve(const std::filesystem::path& config, std::ostream& out, std::ostream& err);

struct DecayOptions {
  std::optional<std::filesystem::path> config;
  /// CSV with header t,<label>...; columns whose header is not a check line use `checks`.
  std::optional<std::filesystem::path> series;
  std::vector<std::string> checks;
  /// Analyse snapshots already written by `solve` instead of running again.
  bool reuse_snapshots = false;
  std::string out = "decay";
};

/// One DecayReport JSON per line, decay.svg and a summary table
/// (norm, fitted, theoretical, verdict). Exit 4 when any series is too short to fit.
int cmd_decay(const DecayOptions& opt, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  double q = 1.0;
  std::string flux = "burgers";
  double u_minus = -1.0;
  double u_plus = 1.0;
  std::vector<std::string> r_values{"1", "2", "4", "inf"};
  double t_lo = 10.0;
  double t_hi = 10000.0;
  std::size_t times = 24;
};

/// Prints one pass/fail row per speed-profile property and per envelope row.
int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);

/// Snapshot file name for time t: snap_<t with six decimals>.csv.
std::string snapshot_filename(double t);
void write_snapshot(const std::filesystem::path& dir, const GridSolution& s);
/// Loads every snap_*.csv in `dir`, ordered by time.
std::vector<GridSolution> load_snapshots(const std::filesystem::path& dir, double u_minus, double u_plus);

std::string tool_version();

}  // namespace visclab
