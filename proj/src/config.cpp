#include "visclab/config.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "visclab/errors.hpp"
#include "visclab/lemma_checks.hpp"

namespace visclab {
namespace {

struct RawValue {
  std::string text;
  std::size_t line;
};

using Table = std::map<std::string, RawValue>;  // "section.key" -> value

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Drops a trailing comment that is not inside a string.
std::string_view strip_comment(std::string_view s) {
  bool quoted = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"') quoted = !quoted;
    if (s[i] == '#' && !quoted) return s.substr(0, i);
  }
  return s;
}

const std::map<std::string, std::set<std::string>, std::less<>> kSchema{
    {"", {"name", "seed", "output"}},
    {"flux", {"kind"}},
    {"viscosity", {"kind", "p", "mu"}},
    {"state", {"u_minus", "u_plus"}},
    {"initial",
     {"kind", "profile", "q", "mu", "speed", "bump_amplitude", "bump_center", "bump_width", "noise_bumps",
      "noise_amplitude", "noise_range"}},
    {"grid", {"cells", "margin", "x_left", "x_right"}},
    {"time",
     {"t_start", "t_end", "snapshots", "first_snapshot", "times", "cfl_advection", "cfl_diffusion", "dt_override"}},
    {"scheme", {"reconstruction"}},
    {"checks", {"lines"}},
};

Table tokenize(std::string_view text) {
  Table table;
  std::string section;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const std::string_view line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("unterminated section header", line_no);
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (!kSchema.count(section) || section.empty()) throw ConfigError("unknown section [" + section + "]", line_no);
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError("expected key = value", line_no);
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("missing key before '='", line_no);
    if (value.empty()) throw ConfigError("missing value for '" + key + "'", line_no);
    if (!kSchema.at(section).count(key))
      throw ConfigError(fmt::format("unknown key '{}' in {}", key, section.empty() ? "top level" : "[" + section + "]"),
                        line_no);
    const std::string full = section.empty() ? key : section + "." + key;
    if (table.count(full)) throw ConfigError("duplicate key '" + full + "'", line_no);
    table.emplace(full, RawValue{std::string(value), line_no});
  }
  return table;
}

class Reader {
 public:
  explicit Reader(Table t) : t_(std::move(t)) {}

  bool has(const std::string& key) const { return t_.count(key) != 0; }
  std::size_t line(const std::string& key) const { return has(key) ? t_.at(key).line : 0; }

  double number(const std::string& key, double fallback) const {
    return has(key) ? parse_number(t_.at(key), key) : fallback;
  }
  std::optional<double> maybe_number(const std::string& key) const {
    if (!has(key)) return std::nullopt;
    return parse_number(t_.at(key), key);
  }
  std::size_t count(const std::string& key, std::size_t fallback) const {
    if (!has(key)) return fallback;
    const double v = parse_number(t_.at(key), key);
    if (v < 0.0 || v != std::floor(v) || v > 1e9)
      throw ConfigError(fmt::format("'{}' must be a nonnegative integer", key), line(key));
    return static_cast<std::size_t>(v);
  }
  std::string string(const std::string& key, const std::string& fallback) const {
    return has(key) ? parse_string(t_.at(key).text, key, t_.at(key).line) : fallback;
  }
  std::vector<std::string> string_list(const std::string& key) const {
    std::vector<std::string> out;
    if (!has(key)) return out;
    for (const auto& item : list_items(key)) out.push_back(parse_string(item, key, line(key)));
    return out;
  }
  std::vector<double> number_list(const std::string& key) const {
    std::vector<double> out;
    if (!has(key)) return out;
    for (const auto& item : list_items(key)) out.push_back(parse_number(RawValue{item, line(key)}, key));
    return out;
  }

 private:
  static double parse_number(const RawValue& v, const std::string& key) {
    double x = 0.0;
    const char* b = v.text.data();
    const char* e = b + v.text.size();
    if (b != e && *b == '+') ++b;
    const auto [ptr, ec] = std::from_chars(b, e, x);
    if (ec != std::errc() || ptr != e || !std::isfinite(x))
      throw ConfigError(fmt::format("'{}' expects a number, got {}", key, v.text), v.line);
    return x;
  }
  static std::string parse_string(std::string_view s, const std::string& key, std::size_t line) {
    s = trim(s);
    if (s.size() < 2 || s.front() != '"' || s.back() != '"')
      throw ConfigError(fmt::format("'{}' expects a quoted string, got {}", key, s), line);
    return std::string(s.substr(1, s.size() - 2));
  }
  std::vector<std::string> list_items(const std::string& key) const {
    const auto& v = t_.at(key);
    std::string_view s = trim(v.text);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
      throw ConfigError(fmt::format("'{}' expects a list [ ... ]", key), v.line);
    s = trim(s.substr(1, s.size() - 2));
    std::vector<std::string> items;
    if (s.empty()) return items;
    std::size_t start = 0;
    bool quoted = false;
    for (std::size_t i = 0; i <= s.size(); ++i) {
      if (i < s.size() && s[i] == '"') quoted = !quoted;
      if (i == s.size() || (s[i] == ',' && !quoted)) {
        const auto item = trim(s.substr(start, i - start));
        if (item.empty()) throw ConfigError(fmt::format("empty item in list '{}'", key), v.line);
        items.emplace_back(item);
        start = i + 1;
      }
    }
    return items;
  }

  Table t_;
};

bool filesystem_safe(const std::string& s) {
  if (s.empty() || s == "." || s == "..") return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.'; });
}

// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

template <class F>
auto guarded(const Reader& r, const std::string& key, F&& f) {
  try {
    return f();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(e.what(), r.line(key));
  }
}

}  // namespace

std::vector<double> snapshot_schedule(double t_start, double t_end, double first, std::size_t count) {
  if (t_end <= t_start) return {t_end};
  const double lo = std::max(first, t_start);
  if (count == 0 || t_end <= lo) return {t_end};
  if (!(lo > 0.0)) return {t_end};
  return log_spaced(lo, t_end, count);
}

ExperimentConfig parse_config(std::string_view text) {
  const Reader r(tokenize(text));
  ExperimentConfig c;
  c.source = std::string(text);

  c.name = r.string("name", "");
  if (!filesystem_safe(c.name)) throw ConfigError("'name' is required and must use only [A-Za-z0-9_.-]", r.line("name"));
  c.output = r.string("output", c.name);
  {
    const double seed = r.number("seed", 0.0);
    if (seed < 0.0 || seed != std::floor(seed)) throw ConfigError("'seed' must be a nonnegative integer", r.line("seed"));
    c.seed = static_cast<std::uint64_t>(seed);
  }

  const std::string flux = r.string("flux.kind", "burgers");
  if (flux == "zero") c.setup.flux = ConvexFlux::zero();
  else if (flux == "burgers") c.setup.flux = ConvexFlux::burgers();
  else if (flux == "exponential") c.setup.flux = ConvexFlux::exponential();
  else throw ConfigError("flux kind must be zero, burgers or exponential", r.line("flux.kind"));

  const std::string law = r.string("viscosity.kind", "regularized");
  const double p = r.number("viscosity.p", 0.5);
  const double mu = r.number("viscosity.mu", 1.0);
  guarded(r, "viscosity.kind", [&] {
    if (law == "regularized") c.setup.law = ViscosityLaw::regularized_power(p, mu);
    else if (law == "ostwald") c.setup.law = ViscosityLaw::ostwald_de_waele(p, mu);
    else if (law == "linear") c.setup.law = ViscosityLaw::linear(mu);
    else throw ConfigError("viscosity kind must be regularized, ostwald or linear", r.line("viscosity.kind"));
    return 0;
  });

  c.setup.u_minus = r.number("state.u_minus", 0.0);
  c.setup.u_plus = r.number("state.u_plus", c.setup.u_minus);
  if (!(c.setup.u_minus <= c.setup.u_plus)) throw ConfigError("u_minus must not exceed u_plus", r.line("state.u_plus"));

  SolverConfig& s = c.solver;
  s.flux = c.setup.flux;
  s.law = c.setup.law;

  Bump bump{r.number("initial.bump_amplitude", 0.0), r.number("initial.bump_center", 0.0),
            r.number("initial.bump_width", 1.0)};
  if (!(bump.width > 0.0)) throw ConfigError("bump_width must be positive", r.line("initial.bump_width"));
  const std::string init = r.string("initial.kind", "constant");
  guarded(r, "initial.kind", [&] {
    if (init == "constant") {
      if (c.setup.u_minus != c.setup.u_plus)
        throw ConfigError("constant initial data needs u_minus = u_plus", r.line("initial.kind"));
      s.initial = InitialData::constant_plus_bump(c.setup.u_minus, bump);
    } else if (init == "mollified") {
      s.initial = InitialData::mollified_riemann(c.setup.u_minus, c.setup.u_plus, r.number("initial.q", 1.0), bump);
    } else if (init == "profile") {
      const std::string prof = r.string("initial.profile", "smoothed");
      const double q = r.number("initial.q", 1.0);
      if (prof == "smoothed")
        s.initial = InitialData::profile_plus_bump(WaveProfile::smoothed(c.setup.flux, q, c.setup.u_minus, c.setup.u_plus), bump);
      else if (prof == "rarefaction")
        s.initial = InitialData::profile_plus_bump(WaveProfile::rarefaction(c.setup.flux, c.setup.u_minus, c.setup.u_plus), bump);
      else if (prof == "contact")
        s.initial = InitialData::profile_plus_bump(
            WaveProfile::contact(c.setup.u_minus, c.setup.u_plus, r.number("initial.mu", c.setup.law.sigma_prime(0.0)),
                                 r.number("initial.speed", 0.0)),
            bump);
      else
        throw ConfigError("profile must be smoothed, rarefaction or contact", r.line("initial.profile"));
    } else {
      throw ConfigError("initial kind must be profile, mollified or constant", r.line("initial.kind"));
    }
    return 0;
  });

  const std::size_t noise = r.count("initial.noise_bumps", 0);
  if (noise) {
    const double amp = r.number("initial.noise_amplitude", 0.1);
    const double range = r.number("initial.noise_range", 10.0);
    std::mt19937_64 rng(c.seed);
    for (std::size_t i = 0; i < noise; ++i) {
      const double a = amp * (2.0 * unit(rng) - 1.0);
      const double x = range * (2.0 * unit(rng) - 1.0);
      s.initial.extra_bumps.push_back({a, x, bump.width});
    }
  }

  s.grid.cells = r.count("grid.cells", s.grid.cells);
  s.grid.margin = r.number("grid.margin", s.grid.margin);
  s.grid.x_left = r.maybe_number("grid.x_left");
  s.grid.x_right = r.maybe_number("grid.x_right");

  s.t_start = r.number("time.t_start", 0.0);
  s.t_end = r.number("time.t_end", 0.0);
  s.cfl_advection = r.number("time.cfl_advection", s.cfl_advection);
  s.cfl_diffusion = r.number("time.cfl_diffusion", s.cfl_diffusion);
  s.dt_override = r.maybe_number("time.dt_override");
  if (r.has("time.times")) {
    s.snapshot_times = r.number_list("time.times");
  } else {
    s.snapshot_times = snapshot_schedule(s.t_start, s.t_end, r.number("time.first_snapshot", 1.0),
                                         r.count("time.snapshots", kDefaultSnapshotCount));
  }

  const std::string rec = r.string("scheme.reconstruction", "minmod");
  if (rec == "minmod") s.reconstruction = kernels::Reconstruction::Minmod;
  else if (rec == "constant") s.reconstruction = kernels::Reconstruction::PiecewiseConstant;
  else throw ConfigError("reconstruction must be minmod or constant", r.line("scheme.reconstruction"));

  for (const auto& line : r.string_list("checks.lines")) {
    guarded(r, "checks.lines", [&] {
      c.checks.push_back(TheoremCheck::parse(line));
      return 0;
    });
  }

  // Cross-field consistency has no single line to point at.
  s.validate();
  domain_for(s);
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string config_hash(std::string_view text) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr))
    throw std::runtime_error("SHA-256 digest failed");
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) hex += fmt::format("{:02x}", digest[i]);
  return hex;
}

}  // namespace visclab
