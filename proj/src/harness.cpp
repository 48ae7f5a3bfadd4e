#include "visclab/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <fstream>
#include <json.hpp>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "visclab/errors.hpp"
#include "visclab/lemma_checks.hpp"
#include "visclab/norms.hpp"
#include "visclab/solver.hpp"
#include "visclab/svg_plot.hpp"
#include "visclab/theorems.hpp"

#ifndef VISCLAB_VERSION
#define VISCLAB_VERSION "0.0.0"
#endif

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

namespace visclab {
namespace {

void write_file(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << content;
}

std::string wall_time() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ConvexFlux flux_by_name(const std::string& name) {
  if (name == "zero") return ConvexFlux::zero();
  if (name == "burgers") return ConvexFlux::burgers();
  if (name == "exponential") return ConvexFlux::exponential();
  throw std::invalid_argument("unknown flux '" + name + "' (zero, burgers, exponential)");
}

std::string file_label(std::string label) {
  std::replace(label.begin(), label.end(), ':', '_');
  return label;
}

fs::path resolve(const std::string& p) {
  const fs::path path(p);
  return path.is_absolute() ? path : output_root() / path;
}

// Runs `body` and maps the error taxonomy onto exit codes.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    fmt::print(err, "config error: {}\n", e.what());
    return kExitUsage;
  } catch (const BlowupError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitBlowup;
  } catch (const DataError& e) {
    fmt::print(err, "insufficient data: {}\n", e.what());
    return kExitInsufficientData;
  } catch (const std::invalid_argument& e) {
    fmt::print(err, "usage error: {}\n", e.what());
    return kExitUsage;
  } catch (const std::domain_error& e) {
    fmt::print(err, "usage error: {}\n", e.what());
    return kExitUsage;
  } catch (const std::range_error& e) {
    fmt::print(err, "usage error: {}\n", e.what());
    return kExitUsage;
  }
}

std::vector<Curve> report_curves(const std::vector<DecayReport>& reports) {
  std::vector<Curve> curves;
  for (const auto& r : reports) {
    Curve c{r.norm_label, {}, r.theoretical_exponent};
    for (const auto& s : r.series) c.points.emplace_back(1.0 + s.t, s.value);
    curves.push_back(std::move(c));
  }
  return curves;
}

// L-infinity distance to the exact heat-kernel solution, when the run is one.
std::optional<double> heat_oracle_error(const SolverConfig& cfg, const std::vector<GridSolution>& snaps) {
  const auto& init = cfg.initial;
  if (init.kind != InitialKind::ProfilePlusBump || !init.profile) return std::nullopt;
  if (init.profile->kind() != ProfileKind::ContactWave || cfg.flux.is_convex()) return std::nullopt;
  if (cfg.law.kind() != ViscosityKind::Linear || cfg.law.mu() != init.profile->mu()) return std::nullopt;
  if (init.bump.amplitude != 0.0 || !init.extra_bumps.empty() || init.profile->speed() != 0.0) return std::nullopt;
  double worst = 0.0;
  for (const auto& s : snaps) {
    if (!(s.t > 0.0)) continue;
    for (std::size_t j = 0; j < s.n_cells; ++j)
      worst = std::max(worst, std::abs(s.values[j] - init.profile->value(s.t, s.x(j))));
  }
  return worst;
}

std::string fmt_exp(double v) { return fmt::format("{:+.4f}", v == 0.0 ? 0.0 : v); }

}  // namespace

fs::path output_root() {
  const char* env = std::getenv("VISCLAB_OUTPUT_ROOT");
  return env && *env ? fs::path(env) : fs::current_path();
}

std::string tool_version() { return VISCLAB_VERSION; }

std::string snapshot_filename(double t) { return fmt::format("snap_{:.6f}.csv", t); }

void write_snapshot(const fs::path& dir, const GridSolution& s) {
  std::string body = "t,x,u\n";
  body.reserve(48 * s.n_cells);
  for (std::size_t j = 0; j < s.n_cells; ++j) body += fmt::format("{:.17g},{:.17g},{:.17g}\n", s.t, s.x(j), s.values[j]);
  write_file(dir / snapshot_filename(s.t), body);
}

std::vector<GridSolution> load_snapshots(const fs::path& dir, double u_minus, double u_plus) {
  std::vector<GridSolution> out;
  if (!fs::is_directory(dir)) throw DataError("no snapshot directory " + dir.string());
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    const auto name = e.path().filename().string();
    if (name.rfind("snap_", 0) == 0 && e.path().extension() == ".csv") files.push_back(e.path());
  }
  for (const auto& f : files) {
    std::ifstream in(f);
    std::string line;
    std::getline(in, line);
    if (line != "t,x,u") throw DataError("unexpected header in " + f.string());
    std::vector<double> xs, us;
    double t = 0.0;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      double v[3];
      const char* p = line.data();
      const char* end = p + line.size();
      for (int k = 0; k < 3; ++k) {
        const auto [ptr, ec] = std::from_chars(p, end, v[k]);
        if (ec != std::errc()) throw DataError("malformed row in " + f.string());
        p = ptr + (ptr < end ? 1 : 0);
      }
      t = v[0];
      xs.push_back(v[1]);
      us.push_back(v[2]);
    }
    if (xs.size() < 3) throw DataError("too few rows in " + f.string());
    const double dx = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
    GridSolution g = GridSolution::uniform(xs.front() - 0.5 * dx, xs.back() + 0.5 * dx, xs.size());
    g.values = std::move(us);
    g.t = t;
    g.u_minus = u_minus;
    g.u_plus = u_plus;
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.t < b.t; });
  return out;
}

int cmd_profile(const ProfileOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!(opt.t >= 0.0)) throw std::invalid_argument("--t must be >= 0");
    const ConvexFlux flux = flux_by_name(opt.flux);
    std::optional<WaveProfile> fan, smooth;
    WaveProfile profile = [&] {
      if (opt.kind == "rarefaction") return WaveProfile::rarefaction(flux, opt.u_minus, opt.u_plus);
      if (opt.kind == "smoothed") return WaveProfile::smoothed(flux, opt.q, opt.u_minus, opt.u_plus);
      if (opt.kind == "contact") return WaveProfile::contact(opt.u_minus, opt.u_plus, opt.mu, opt.speed);
      throw std::invalid_argument("--kind must be rarefaction, smoothed or contact");
    }();
    if (opt.kind != "contact") {
      fan = WaveProfile::rarefaction(flux, opt.u_minus, opt.u_plus);
      smooth = WaveProfile::smoothed(flux, opt.q, opt.u_minus, opt.u_plus);
    }
    const double lm = profile.lambda_minus() * opt.t;
    const double lp = profile.lambda_plus() * opt.t;
    const double spread = opt.kind == "contact" ? 4.0 * std::sqrt(opt.mu * std::max(opt.t, 1.0)) : 0.0;
    const double x_min = opt.x_min.value_or(std::floor(std::min(lm, 0.0) - 10.0 - spread));
    const double x_max = opt.x_max.value_or(std::ceil(std::max(lp, 0.0) + 10.0 + spread));
    if (!(x_min < x_max)) throw std::invalid_argument("--x-min must be below --x-max");
    const std::size_t n =
        opt.points ? opt.points : static_cast<std::size_t>(std::llround((x_max - x_min) * 20.0)) + 1;
    if (n < 2) throw std::invalid_argument("--points must be >= 2");

    std::string csv = "x,u,u_x,u_t,u_xx\n";
    Curve main_curve{opt.kind, {}, std::nullopt}, fan_curve{"u^r", {}, std::nullopt},
        smooth_curve{fmt::format("U^r(q={:g})", opt.q), {}, std::nullopt};
    for (std::size_t i = 0; i < n; ++i) {
      const double x = (x_min * static_cast<double>(n - 1 - i) + x_max * static_cast<double>(i)) / static_cast<double>(n - 1);
      const auto j = profile.jet(opt.t, x);
      csv += fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", x, j.value, j.dx, j.dt, j.dxx);
      main_curve.points.emplace_back(x, j.value);
      if (fan && opt.t > 0.0) fan_curve.points.emplace_back(x, fan->value(opt.t, x));
      if (smooth) smooth_curve.points.emplace_back(x, smooth->value(opt.t, x));
    }
    const fs::path dir = resolve(opt.out);
    write_file(dir / fmt::format("profile_{}.csv", opt.kind), csv);
    std::vector<Curve> curves;
    if (smooth) {
      if (!fan_curve.points.empty()) curves.push_back(std::move(fan_curve));
      curves.push_back(std::move(smooth_curve));
    } else {
      curves.push_back(std::move(main_curve));
    }
    write_file(dir / fmt::format("profile_{}.svg", opt.kind),
               render_svg(fmt::format("{} profile at t = {:g}", opt.kind, opt.t), "x", "u", curves, false));
    fmt::print(out, "wrote {} samples to {}\n", n, (dir / fmt::format("profile_{}.csv", opt.kind)).string());
    return kExitOk;
  });
}

int cmd_solve(const fs::path& config_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const std::string start = wall_time();
    const ExperimentConfig cfg = load_config(config_path);
    const fs::path dir = resolve(cfg.output);
    fs::create_directories(dir);

    SolveResult result = solve(cfg.solver, [&](const GridSolution& s) { write_snapshot(dir, s); });
    const auto& snaps = result.snapshots;

    // Norm series, one column per check line.
    std::vector<std::map<double, double>> columns;
    std::vector<DecayReport> reports;
    ojson verdicts = ojson::object();
    ojson inequalities = ojson::object();
    for (const auto& check : cfg.checks) {
      const Series series = norm_series(check, snaps, cfg.setup);
      std::map<double, double> col;
      for (const auto& s : series) col[s.t] = s.value;
      columns.push_back(std::move(col));
      try {
        const DecayReport r = theorem_check(check, series);
        verdicts[check.label()] = r.pass ? ojson(*r.pass) : ojson(nullptr);
      } catch (const DataError&) {
        verdicts[check.label()] = "insufficient data";
      }
      if (check.quantity == Quantity::Value) {
        bool holder = true, interp = true;
        for (const auto& phi : deviation_fields(check, snaps, cfg.setup)) {
          holder &= holder_check(phi, snaps.front().dx).holds();
          interp &= interpolation_check(phi, snaps.front().dx).holds();
        }
        inequalities[check.label()] = {{"holder", holder}, {"interpolation", interp}};
      }
    }
    std::string csv = "t";
    for (const auto& c : cfg.checks) csv += "," + c.label();
    csv += "\n";
    for (const auto& s : snaps) {
      csv += fmt::format("{:.17g}", s.t);
      for (const auto& col : columns) {
        const auto it = col.find(s.t);
        csv += it == col.end() ? std::string(",") : fmt::format(",{:.17g}", it->second);
      }
      csv += "\n";
    }
    write_file(dir / "norms.csv", csv);

    const RunStats& st = result.stats;
    const auto oracle = heat_oracle_error(cfg.solver, snaps);
    ojson m;
    m["name"] = cfg.name;
    m["config_hash"] = config_hash(cfg.source);
    m["tool_version"] = tool_version();
    m["start_wall_time"] = start;
    m["end_wall_time"] = wall_time();
    m["run"] = {{"steps", st.steps},
                {"snapshots", snaps.size()},
                {"cells", cfg.solver.grid.cells},
                {"mass_initial", st.mass_initial},
                {"mass_final", st.mass_final},
                {"boundary_flux_integral", st.boundary_flux_integral},
                {"conservation_error", st.conservation_error},
                {"max_overshoot", st.max_overshoot},
                {"far_field_gap", st.far_field_gap},
                {"kernel", std::string(kernels::isa_name(st.isa))}};
    m["heat_oracle_max_error"] = oracle ? ojson(*oracle) : ojson(nullptr);
    m["verdicts"] = verdicts;
    m["inequality_checks"] = inequalities;
    write_file(dir / "manifest.json", m.dump(2) + "\n");

    fmt::print(out, "{}: {} steps, {} snapshots in {}\n", cfg.name, st.steps, snaps.size(), dir.string());
    fmt::print(out, "conservation error {:.3e}, max overshoot {:.3e}\n", st.conservation_error, st.max_overshoot);
    if (oracle) fmt::print(out, "heat oracle max error {:.3e}\n", *oracle);
    return kExitOk;
  });
}

int cmd_decay(const DecayOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opt.config.has_value() == opt.series.has_value())
      throw std::invalid_argument("pass exactly one of a config file or --series");

    std::vector<std::pair<TheoremCheck, Series>> lines;
    fs::path dir;
    if (opt.config) {
      const ExperimentConfig cfg = load_config(*opt.config);
      dir = resolve(cfg.output);
      std::vector<TheoremCheck> checks;
      for (const auto& c : opt.checks) checks.push_back(TheoremCheck::parse(c));
      if (checks.empty()) checks = cfg.checks;
      if (checks.empty()) throw std::invalid_argument("no check lines in the config or on the command line");
      std::vector<GridSolution> snaps = opt.reuse_snapshots
                                            ? load_snapshots(dir, cfg.setup.u_minus, cfg.setup.u_plus)
                                            : solve(cfg.solver).snapshots;
      for (const auto& c : checks) lines.emplace_back(c, norm_series(c, snaps, cfg.setup));
    } else {
      dir = resolve(opt.out);
      std::ifstream in(*opt.series);
      if (!in) throw std::invalid_argument("cannot read series file " + opt.series->string());
      std::string header;
      std::getline(in, header);
      std::vector<std::string> names;
      {
        std::stringstream hs(header);
        std::string item;
        while (std::getline(hs, item, ',')) names.push_back(item);
      }
      if (names.size() < 2 || names[0] != "t") throw std::invalid_argument("series header must be t,<label>...");
      std::vector<TheoremCheck> checks;
      for (std::size_t k = 1; k < names.size(); ++k) {
        try {
          checks.push_back(TheoremCheck::parse(names[k]));
        } catch (const std::invalid_argument&) {
          if (opt.checks.size() == 1) checks.push_back(TheoremCheck::parse(opt.checks[0]));
          else if (opt.checks.size() == names.size() - 1) checks.push_back(TheoremCheck::parse(opt.checks[k - 1]));
          else throw std::invalid_argument("column '" + names[k] + "' is not a check line; pass --check");
        }
      }
      std::vector<Series> series(checks.size());
      std::string line;
      std::size_t row = 1;
      while (std::getline(in, line)) {
        ++row;
        if (line.empty()) continue;
        std::stringstream ls(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (cells.size() != names.size()) throw std::invalid_argument(fmt::format("row {} has wrong column count", row));
        const double t = std::stod(cells[0]);
        for (std::size_t k = 1; k < cells.size(); ++k)
          if (!cells[k].empty()) series[k - 1].push_back({t, std::stod(cells[k])});
      }
      for (std::size_t k = 0; k < checks.size(); ++k) lines.emplace_back(checks[k], std::move(series[k]));
    }

    std::vector<DecayReport> reports;
    bool short_data = false;
    fmt::print(out, "{:<24} {:>9} {:>12} {:>8}\n", "norm", "fitted", "theoretical", "verdict");
    for (auto& [check, series] : lines) {
      try {
        DecayReport r = theorem_check(check, series);
        write_file(dir / fmt::format("decay_{}.json", file_label(r.norm_label)), r.to_json().dump(2) + "\n");
        const char* verdict = !r.pass ? "report" : *r.pass ? "PASS" : "FAIL";
        fmt::print(out, "{:<24} {:>9} {:>12} {:>8}\n", r.norm_label, fmt_exp(r.fitted_exponent),
                   fmt_exp(r.theoretical_exponent), verdict);
        reports.push_back(std::move(r));
      } catch (const DataError& e) {
        short_data = true;
        fmt::print(out, "{:<24} {:>9} {:>12} {:>8}\n", check.label(), "-", "-", "NO DATA");
        fmt::print(err, "insufficient data for {}: {}\n", check.label(), e.what());
      }
    }
    if (!reports.empty())
      write_file(dir / "decay.svg", render_svg("decay of deviation norms", "1 + t", "norm", report_curves(reports), true));
    return short_data ? kExitInsufficientData : kExitOk;
  });
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!(opt.q > 0.5)) throw std::domain_error(fmt::format("q = {:g} is not admissible; need q > 1/2", opt.q));
    const ConvexFlux flux = flux_by_name(opt.flux);
    std::vector<double> rs;
    for (const auto& s : opt.r_values) {
      if (s == "inf") {
        rs.push_back(kInfinityNorm);
        continue;
      }
      double r = 0.0;
      const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), r);
      if (ec != std::errc() || p != s.data() + s.size() || r < 1.0)
        throw std::invalid_argument("--r values must be numbers >= 1 or 'inf'");
      rs.push_back(r);
    }
    bool all = true;
    const double wm = flux.prime(opt.u_minus), wp = flux.prime(opt.u_plus);
    const auto times = log_spaced(opt.t_lo, opt.t_hi, opt.times);
    fmt::print(out, "speed profile w, q = {:g}, w- = {:g}, w+ = {:g}\n", opt.q, wm, wp);
    for (const auto& part : speed_profile_suite(opt.q, wm, wp, times)) {
      fmt::print(out, "  {:<5} {:<34} {}\n", part.pass ? "PASS" : "FAIL", part.name, part.detail);
      all &= part.pass;
    }
    fmt::print(out, "state profile U^r envelopes over t in [{:g}, {:g}]\n", opt.t_lo, opt.t_hi);
    fmt::print(out, "  {:<5} {:<18} {:>9} {:>9}\n", "", "norm", "fitted", "bound");
    for (double r : rs) {
      for (const auto& row : verify_profile_envelopes(flux, opt.q, opt.u_minus, opt.u_plus, times, r)) {
        fmt::print(out, "  {:<5} {:<18} {:>9} {:>9}\n", row.pass ? "PASS" : "FAIL", row.label,
                   fmt_exp(row.fitted_exponent), fmt_exp(row.theoretical_exponent));
        all &= row.pass;
      }
    }
    fmt::print(out, "{}\n", all ? "all checks passed" : "some checks failed");
    return all ? kExitOk : 1;
  });
}

}  // namespace visclab
