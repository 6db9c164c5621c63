#include "ns1d/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "ns1d/errors.hpp"

namespace ns1d {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string fmt_list(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k > 0) out += ',';
    out += fmt(xs[k]);
  }
  return out;
}

/// Raw parsed document plus consumption tracking, so unknown keys surface as
/// errors with their full path instead of being silently ignored.
class Document {
public:
  explicit Document(const std::string& text) {
    static const std::set<std::string> kSections = {"grid", "fluid", "force", "initial",
                                                    "run"};
    // full key vocabulary per section (union over variants); checked upfront
    // so a typo is reported as the typo, not as its missing-key symptom
    static const std::map<std::string, std::set<std::string>> kKnownKeys = {
        {"grid", {"n"}},
        {"fluid",
         {"gamma", "A", "viscosity", "mu", "mu_bar", "slope", "coeff", "theta", "mu_lower",
          "rho_points", "mu_points"}},
        {"force", {"type", "value", "coeffs", "amplitude", "frequency", "phase", "x_points",
                   "f_points"}},
        {"initial",
         {"rho0", "rho0_value", "rho0_a", "rho0_b", "rho0_offset", "rho0_amplitude",
          "rho0_frequency", "rho0_phase", "rho0_x_points", "rho0_values", "u0",
          "u0_amplitude", "u0_mode", "u0_x_points", "u0_values", "normalize_mass"}},
        {"run",
         {"scenario", "t_end", "sample_every", "cfl", "dt_max", "vacuum_floor",
          "stationary_tol", "fit_window_start", "fit_window_end", "output_dir"}},
    };
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      std::string t = trim(line);
      if (t.empty() || t[0] == '#' || t[0] == ';') continue;
      if (t.front() == '[') {
        if (t.back() != ']') {
          throw ConfigError("line " + std::to_string(lineno) + ": malformed section header");
        }
        section = trim(t.substr(1, t.size() - 2));
        if (!kSections.count(section)) {
          throw ConfigError("line " + std::to_string(lineno) + ": unknown section [" +
                            section + "]");
        }
        continue;
      }
      std::size_t eq = t.find('=');
      if (eq == std::string::npos) {
        throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
      }
      if (section.empty()) {
        throw ConfigError("line " + std::to_string(lineno) + ": key outside any section");
      }
      std::string key = trim(t.substr(0, eq));
      std::string value = trim(t.substr(eq + 1));
      if (key.empty()) {
        throw ConfigError("line " + std::to_string(lineno) + ": empty key");
      }
      if (!kKnownKeys.at(section).count(key)) {
        throw ConfigError("[" + section + "] " + key + ": unknown key");
      }
      if (!entries_[section].emplace(key, value).second) {
        throw ConfigError("[" + section + "] " + key + ": duplicate key");
      }
    }
  }

  bool has(const std::string& section, const std::string& key) const {
    auto s = entries_.find(section);
    return s != entries_.end() && s->second.count(key) > 0;
  }

  std::string take(const std::string& section, const std::string& key) {
    auto s = entries_.find(section);
    if (s == entries_.end() || !s->second.count(key)) {
      throw ConfigError("[" + section + "] " + key + ": required key missing");
    }
    consumed_[section].insert(key);
    return s->second.at(key);
  }

  std::string take_or(const std::string& section, const std::string& key,
                      const std::string& fallback) {
    if (!has(section, key)) return fallback;
    return take(section, key);
  }

  void finish() const {
    for (const auto& [section, kv] : entries_) {
      auto c = consumed_.find(section);
      for (const auto& [key, value] : kv) {
        if (c == consumed_.end() || !c->second.count(key)) {
          throw ConfigError("[" + section + "] " + key +
                            ": key not applicable to the selected variant");
        }
      }
    }
  }

private:
  std::map<std::string, std::map<std::string, std::string>> entries_;
  std::map<std::string, std::set<std::string>> consumed_;
};

double to_double(const std::string& path, const std::string& value) {
  try {
    std::size_t used = 0;
    double x = std::stod(value, &used);
    if (used != value.size() || !std::isfinite(x)) throw std::invalid_argument("");
    return x;
  } catch (const std::exception&) {
    throw ConfigError(path + ": expected a finite number, got '" + value + "'");
  }
}

int to_int(const std::string& path, const std::string& value) {
  try {
    std::size_t used = 0;
    long x = std::stol(value, &used);
    if (used != value.size()) throw std::invalid_argument("");
    return static_cast<int>(x);
  } catch (const std::exception&) {
    throw ConfigError(path + ": expected an integer, got '" + value + "'");
  }
}

bool to_bool(const std::string& path, const std::string& value) {
  std::string v = value;
  std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  if (v == "true" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "no" || v == "0") return false;
  throw ConfigError(path + ": expected a boolean, got '" + value + "'");
}

std::vector<double> to_list(const std::string& path, const std::string& value) {
  std::vector<double> out;
  std::string item;
  std::istringstream in(value);
  while (std::getline(in, item, ',')) {
    out.push_back(to_double(path, trim(item)));
  }
  if (out.empty()) throw ConfigError(path + ": expected a comma-separated list");
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Config specs -> model objects
// ---------------------------------------------------------------------------

ViscosityLaw ViscositySpec::build() const {
  switch (kind) {
    case ViscosityLaw::Kind::Constant:
      return ViscosityLaw::constant(mu);
    case ViscosityLaw::Kind::Affine:
      return ViscosityLaw::affine(mu_bar, slope);
    case ViscosityLaw::Kind::Power:
      return ViscosityLaw::power(mu_bar, coeff, theta);
    case ViscosityLaw::Kind::Table:
      return ViscosityLaw::table(rho_points, mu_points, mu_lower);
  }
  return ViscosityLaw::constant(mu);
}

ForceField ForceSpec::build() const {
  switch (kind) {
    case ForceField::Kind::Zero:
      return ForceField::zero();
    case ForceField::Kind::Constant:
      return ForceField::constant(value);
    case ForceField::Kind::Polynomial:
      return ForceField::polynomial(coeffs);
    case ForceField::Kind::Sinusoid:
      return ForceField::sinusoid(amplitude, frequency, phase);
    case ForceField::Kind::Table:
      return ForceField::table(x_points, f_points);
  }
  return ForceField::zero();
}

FluidParams RunConfig::make_fluid_params() const { return {gamma, A, viscosity.build()}; }

ForceField RunConfig::make_force() const { return force.build(); }

SolverConfig RunConfig::make_solver_config() const {
  SolverConfig sc;
  sc.cfl = cfl;
  sc.dt_max = dt_max;
  sc.vacuum_floor = vacuum_floor;
  return sc;
}

std::pair<double, double> RunConfig::effective_fit_window() const {
  if (fit_window) return *fit_window;
  return {0.5 * t_end, t_end};
}

namespace {

double pl_eval(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
  if (x <= xs.front()) return ys.front();
  if (x >= xs.back()) return ys.back();
  auto it = std::upper_bound(xs.begin(), xs.end(), x);
  std::size_t k = static_cast<std::size_t>(it - xs.begin());
  double t = (x - xs[k - 1]) / (xs[k] - xs[k - 1]);
  return ys[k - 1] + t * (ys[k] - ys[k - 1]);
}

}  // namespace

InitialData RunConfig::make_initial_data(const StationaryDensity* stationary) const {
  InitialData data;
  data.normalize_mass = normalize_mass;

  const double two_pi = 2.0 * std::numbers::pi;
  switch (rho0.kind) {
    case Rho0Kind::Uniform: {
      double v = rho0.value;
      data.rho0 = [v](double) { return v; };
      break;
    }
    case Rho0Kind::Linear: {
      double a = rho0.a, b = rho0.b;
      data.rho0 = [a, b](double x) { return a + b * x; };
      break;
    }
    case Rho0Kind::Sin: {
      double off = rho0.offset, amp = rho0.amplitude, fr = rho0.frequency, ph = rho0.phase;
      data.rho0 = [=](double x) { return off + amp * std::sin(two_pi * fr * x + ph); };
      break;
    }
    case Rho0Kind::StationarySin: {
      if (stationary == nullptr) {
        throw ConfigError("[initial] rho0: 'stationary_sin' needs a solvable steady "
                          "profile, but the existence condition fails for this config");
      }
      // capture the closed form by value so the profile object may go away
      StationaryDensity st = *stationary;
      ForceField f = make_force();
      FluidParams fp = make_fluid_params();
      double amp = rho0.amplitude, fr = rho0.frequency, ph = rho0.phase;
      data.rho0 = [=](double x) {
        return st.eval(x, f, fp) + amp * std::sin(two_pi * fr * x + ph);
      };
      break;
    }
    case Rho0Kind::Table: {
      auto xs = rho0.x_points;
      auto ys = rho0.values;
      data.rho0 = [xs, ys](double x) { return pl_eval(xs, ys, x); };
      break;
    }
  }

  switch (u0.kind) {
    case U0Kind::Zero:
      data.u0 = [](double) { return 0.0; };
      break;
    case U0Kind::SinPi: {
      double amp = u0.amplitude;
      double k = std::numbers::pi * u0.mode;
      data.u0 = [amp, k](double x) { return amp * std::sin(k * x); };
      break;
    }
    case U0Kind::Parabola: {
      double amp = u0.amplitude;
      data.u0 = [amp](double x) { return amp * x * (1.0 - x); };
      break;
    }
    case U0Kind::Table: {
      auto xs = u0.x_points;
      auto ys = u0.values;
      data.u0 = [xs, ys](double x) { return pl_eval(xs, ys, x); };
      break;
    }
  }
  return data;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

RunConfig parse_config(const std::string& text) {
  Document doc(text);
  RunConfig cfg;

  // [grid]
  cfg.n = to_int("[grid] n", doc.take("grid", "n"));
  if (cfg.n < 4) throw ConfigError("[grid] n: must be at least 4");

  // [fluid]
  cfg.gamma = to_double("[fluid] gamma", doc.take("fluid", "gamma"));
  if (!(cfg.gamma > 1.0)) throw ConfigError("[fluid] gamma: gamma must exceed 1");
  cfg.A = to_double("[fluid] A", doc.take_or("fluid", "A", "1"));
  if (!(cfg.A > 0.0)) throw ConfigError("[fluid] A: must be positive");

  std::string visc = doc.take("fluid", "viscosity");
  if (visc == "constant") {
    cfg.viscosity.kind = ViscosityLaw::Kind::Constant;
    cfg.viscosity.mu = to_double("[fluid] mu", doc.take("fluid", "mu"));
  } else if (visc == "affine") {
    cfg.viscosity.kind = ViscosityLaw::Kind::Affine;
    cfg.viscosity.mu_bar = to_double("[fluid] mu_bar", doc.take("fluid", "mu_bar"));
    cfg.viscosity.slope = to_double("[fluid] slope", doc.take("fluid", "slope"));
  } else if (visc == "power") {
    cfg.viscosity.kind = ViscosityLaw::Kind::Power;
    cfg.viscosity.mu_bar = to_double("[fluid] mu_bar", doc.take("fluid", "mu_bar"));
    cfg.viscosity.coeff = to_double("[fluid] coeff", doc.take("fluid", "coeff"));
    cfg.viscosity.theta = to_double("[fluid] theta", doc.take("fluid", "theta"));
  } else if (visc == "table") {
    cfg.viscosity.kind = ViscosityLaw::Kind::Table;
    cfg.viscosity.rho_points = to_list("[fluid] rho_points", doc.take("fluid", "rho_points"));
    cfg.viscosity.mu_points = to_list("[fluid] mu_points", doc.take("fluid", "mu_points"));
    cfg.viscosity.mu_lower = to_double("[fluid] mu_lower", doc.take("fluid", "mu_lower"));
  } else {
    throw ConfigError("[fluid] viscosity: unknown law '" + visc +
                      "' (expected constant|affine|power|table)");
  }

  // [force]
  std::string ftype = doc.take("force", "type");
  if (ftype == "zero") {
    cfg.force.kind = ForceField::Kind::Zero;
  } else if (ftype == "constant") {
    cfg.force.kind = ForceField::Kind::Constant;
    cfg.force.value = to_double("[force] value", doc.take("force", "value"));
  } else if (ftype == "poly") {
    cfg.force.kind = ForceField::Kind::Polynomial;
    cfg.force.coeffs = to_list("[force] coeffs", doc.take("force", "coeffs"));
  } else if (ftype == "sin") {
    cfg.force.kind = ForceField::Kind::Sinusoid;
    cfg.force.amplitude = to_double("[force] amplitude", doc.take("force", "amplitude"));
    cfg.force.frequency = to_double("[force] frequency", doc.take("force", "frequency"));
    cfg.force.phase = to_double("[force] phase", doc.take_or("force", "phase", "0"));
  } else if (ftype == "table") {
    cfg.force.kind = ForceField::Kind::Table;
    cfg.force.x_points = to_list("[force] x_points", doc.take("force", "x_points"));
    cfg.force.f_points = to_list("[force] f_points", doc.take("force", "f_points"));
  } else {
    throw ConfigError("[force] type: unknown force '" + ftype +
                      "' (expected zero|constant|poly|sin|table)");
  }

  // [initial]
  std::string r0 = doc.take("initial", "rho0");
  if (r0 == "uniform") {
    cfg.rho0.kind = Rho0Kind::Uniform;
    cfg.rho0.value = to_double("[initial] rho0_value", doc.take("initial", "rho0_value"));
    if (cfg.rho0.value < 0.0) throw ConfigError("[initial] rho0_value: must be nonnegative");
  } else if (r0 == "linear") {
    cfg.rho0.kind = Rho0Kind::Linear;
    cfg.rho0.a = to_double("[initial] rho0_a", doc.take("initial", "rho0_a"));
    cfg.rho0.b = to_double("[initial] rho0_b", doc.take("initial", "rho0_b"));
  } else if (r0 == "sin") {
    cfg.rho0.kind = Rho0Kind::Sin;
    cfg.rho0.offset = to_double("[initial] rho0_offset", doc.take("initial", "rho0_offset"));
    cfg.rho0.amplitude =
        to_double("[initial] rho0_amplitude", doc.take("initial", "rho0_amplitude"));
    cfg.rho0.frequency =
        to_double("[initial] rho0_frequency", doc.take_or("initial", "rho0_frequency", "1"));
    cfg.rho0.phase = to_double("[initial] rho0_phase", doc.take_or("initial", "rho0_phase", "0"));
  } else if (r0 == "stationary_sin") {
    cfg.rho0.kind = Rho0Kind::StationarySin;
    cfg.rho0.amplitude =
        to_double("[initial] rho0_amplitude", doc.take("initial", "rho0_amplitude"));
    cfg.rho0.frequency =
        to_double("[initial] rho0_frequency", doc.take_or("initial", "rho0_frequency", "1"));
    cfg.rho0.phase = to_double("[initial] rho0_phase", doc.take_or("initial", "rho0_phase", "0"));
  } else if (r0 == "table") {
    cfg.rho0.kind = Rho0Kind::Table;
    cfg.rho0.x_points = to_list("[initial] rho0_x_points", doc.take("initial", "rho0_x_points"));
    cfg.rho0.values = to_list("[initial] rho0_values", doc.take("initial", "rho0_values"));
  } else {
    throw ConfigError("[initial] rho0: unknown profile '" + r0 +
                      "' (expected uniform|linear|sin|stationary_sin|table)");
  }

  std::string u0 = doc.take("initial", "u0");
  if (u0 == "zero") {
    cfg.u0.kind = U0Kind::Zero;
  } else if (u0 == "sinpi") {
    cfg.u0.kind = U0Kind::SinPi;
    cfg.u0.amplitude = to_double("[initial] u0_amplitude", doc.take("initial", "u0_amplitude"));
    cfg.u0.mode = to_int("[initial] u0_mode", doc.take_or("initial", "u0_mode", "1"));
    if (cfg.u0.mode < 1) throw ConfigError("[initial] u0_mode: must be a positive integer");
  } else if (u0 == "parabola") {
    cfg.u0.kind = U0Kind::Parabola;
    cfg.u0.amplitude = to_double("[initial] u0_amplitude", doc.take("initial", "u0_amplitude"));
  } else if (u0 == "table") {
    cfg.u0.kind = U0Kind::Table;
    cfg.u0.x_points = to_list("[initial] u0_x_points", doc.take("initial", "u0_x_points"));
    cfg.u0.values = to_list("[initial] u0_values", doc.take("initial", "u0_values"));
  } else {
    throw ConfigError("[initial] u0: unknown profile '" + u0 +
                      "' (expected zero|sinpi|parabola|table)");
  }
  cfg.normalize_mass =
      to_bool("[initial] normalize_mass", doc.take_or("initial", "normalize_mass", "true"));

  // [run]
  cfg.scenario = doc.take("run", "scenario");
  if (cfg.scenario.empty()) throw ConfigError("[run] scenario: must not be empty");
  cfg.t_end = to_double("[run] t_end", doc.take("run", "t_end"));
  if (cfg.t_end < 0.0) throw ConfigError("[run] t_end: must be nonnegative");
  cfg.sample_every = to_double("[run] sample_every", doc.take("run", "sample_every"));
  if (!(cfg.sample_every > 0.0)) throw ConfigError("[run] sample_every: must be positive");
  cfg.cfl = to_double("[run] cfl", doc.take_or("run", "cfl", "0.4"));
  if (!(cfg.cfl > 0.0 && cfg.cfl <= 1.0)) throw ConfigError("[run] cfl: must lie in (0,1]");
  cfg.dt_max = to_double("[run] dt_max", doc.take_or("run", "dt_max", "0.01"));
  if (!(cfg.dt_max > 0.0)) throw ConfigError("[run] dt_max: must be positive");
  cfg.vacuum_floor = to_double("[run] vacuum_floor", doc.take_or("run", "vacuum_floor", "0"));
  if (cfg.vacuum_floor < 0.0) throw ConfigError("[run] vacuum_floor: must be nonnegative");
  cfg.stationary_tol =
      to_double("[run] stationary_tol", doc.take_or("run", "stationary_tol", "1e-12"));
  if (!(cfg.stationary_tol > 0.0)) {
    throw ConfigError("[run] stationary_tol: must be positive");
  }
  bool has_w0 = doc.has("run", "fit_window_start");
  bool has_w1 = doc.has("run", "fit_window_end");
  if (has_w0 != has_w1) {
    throw ConfigError("[run] fit_window_start/fit_window_end: set both or neither");
  }
  if (has_w0) {
    double w0 = to_double("[run] fit_window_start", doc.take("run", "fit_window_start"));
    double w1 = to_double("[run] fit_window_end", doc.take("run", "fit_window_end"));
    if (!(w0 < w1)) {
      throw ConfigError("[run] fit_window_start: must be below fit_window_end");
    }
    cfg.fit_window = std::make_pair(w0, w1);
  }
  cfg.output_dir = doc.take_or("run", "output_dir", "out/" + cfg.scenario);

  doc.finish();

  // surface constitutive-law construction failures as config errors now,
  // not in the middle of a run
  try {
    cfg.make_fluid_params();
    cfg.make_force();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("constitutive laws: ") + e.what());
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

std::string serialize_config(const RunConfig& cfg) {
  std::ostringstream out;
  out << "[grid]\n";
  out << "n = " << cfg.n << "\n\n";

  out << "[fluid]\n";
  out << "gamma = " << fmt(cfg.gamma) << "\n";
  out << "A = " << fmt(cfg.A) << "\n";
  switch (cfg.viscosity.kind) {
    case ViscosityLaw::Kind::Constant:
      out << "viscosity = constant\n";
      out << "mu = " << fmt(cfg.viscosity.mu) << "\n";
      break;
    case ViscosityLaw::Kind::Affine:
      out << "viscosity = affine\n";
      out << "mu_bar = " << fmt(cfg.viscosity.mu_bar) << "\n";
      out << "slope = " << fmt(cfg.viscosity.slope) << "\n";
      break;
    case ViscosityLaw::Kind::Power:
      out << "viscosity = power\n";
      out << "mu_bar = " << fmt(cfg.viscosity.mu_bar) << "\n";
      out << "coeff = " << fmt(cfg.viscosity.coeff) << "\n";
      out << "theta = " << fmt(cfg.viscosity.theta) << "\n";
      break;
    case ViscosityLaw::Kind::Table:
      out << "viscosity = table\n";
      out << "rho_points = " << fmt_list(cfg.viscosity.rho_points) << "\n";
      out << "mu_points = " << fmt_list(cfg.viscosity.mu_points) << "\n";
      out << "mu_lower = " << fmt(cfg.viscosity.mu_lower) << "\n";
      break;
  }
  out << "\n[force]\n";
  switch (cfg.force.kind) {
    case ForceField::Kind::Zero:
      out << "type = zero\n";
      break;
    case ForceField::Kind::Constant:
      out << "type = constant\n";
      out << "value = " << fmt(cfg.force.value) << "\n";
      break;
    case ForceField::Kind::Polynomial:
      out << "type = poly\n";
      out << "coeffs = " << fmt_list(cfg.force.coeffs) << "\n";
      break;
    case ForceField::Kind::Sinusoid:
      out << "type = sin\n";
      out << "amplitude = " << fmt(cfg.force.amplitude) << "\n";
      out << "frequency = " << fmt(cfg.force.frequency) << "\n";
      out << "phase = " << fmt(cfg.force.phase) << "\n";
      break;
    case ForceField::Kind::Table:
      out << "type = table\n";
      out << "x_points = " << fmt_list(cfg.force.x_points) << "\n";
      out << "f_points = " << fmt_list(cfg.force.f_points) << "\n";
      break;
  }

  out << "\n[initial]\n";
  switch (cfg.rho0.kind) {
    case Rho0Kind::Uniform:
      out << "rho0 = uniform\n";
      out << "rho0_value = " << fmt(cfg.rho0.value) << "\n";
      break;
    case Rho0Kind::Linear:
      out << "rho0 = linear\n";
      out << "rho0_a = " << fmt(cfg.rho0.a) << "\n";
      out << "rho0_b = " << fmt(cfg.rho0.b) << "\n";
      break;
    case Rho0Kind::Sin:
      out << "rho0 = sin\n";
      out << "rho0_offset = " << fmt(cfg.rho0.offset) << "\n";
      out << "rho0_amplitude = " << fmt(cfg.rho0.amplitude) << "\n";
      out << "rho0_frequency = " << fmt(cfg.rho0.frequency) << "\n";
      out << "rho0_phase = " << fmt(cfg.rho0.phase) << "\n";
      break;
    case Rho0Kind::StationarySin:
      out << "rho0 = stationary_sin\n";
      out << "rho0_amplitude = " << fmt(cfg.rho0.amplitude) << "\n";
      out << "rho0_frequency = " << fmt(cfg.rho0.frequency) << "\n";
      out << "rho0_phase = " << fmt(cfg.rho0.phase) << "\n";
      break;
    case Rho0Kind::Table:
      out << "rho0 = table\n";
      out << "rho0_x_points = " << fmt_list(cfg.rho0.x_points) << "\n";
      out << "rho0_values = " << fmt_list(cfg.rho0.values) << "\n";
      break;
  }
  switch (cfg.u0.kind) {
    case U0Kind::Zero:
      out << "u0 = zero\n";
      break;
    case U0Kind::SinPi:
      out << "u0 = sinpi\n";
      out << "u0_amplitude = " << fmt(cfg.u0.amplitude) << "\n";
      out << "u0_mode = " << cfg.u0.mode << "\n";
      break;
    case U0Kind::Parabola:
      out << "u0 = parabola\n";
      out << "u0_amplitude = " << fmt(cfg.u0.amplitude) << "\n";
      break;
    case U0Kind::Table:
      out << "u0 = table\n";
      out << "u0_x_points = " << fmt_list(cfg.u0.x_points) << "\n";
      out << "u0_values = " << fmt_list(cfg.u0.values) << "\n";
      break;
  }
  out << "normalize_mass = " << (cfg.normalize_mass ? "true" : "false") << "\n";

  out << "\n[run]\n";
  out << "scenario = " << cfg.scenario << "\n";
  out << "t_end = " << fmt(cfg.t_end) << "\n";
  out << "sample_every = " << fmt(cfg.sample_every) << "\n";
  out << "cfl = " << fmt(cfg.cfl) << "\n";
  out << "dt_max = " << fmt(cfg.dt_max) << "\n";
  out << "vacuum_floor = " << fmt(cfg.vacuum_floor) << "\n";
  out << "stationary_tol = " << fmt(cfg.stationary_tol) << "\n";
  if (cfg.fit_window) {
    out << "fit_window_start = " << fmt(cfg.fit_window->first) << "\n";
    out << "fit_window_end = " << fmt(cfg.fit_window->second) << "\n";
  }
  out << "output_dir = " << cfg.output_dir << "\n";
  return out.str();
}

std::string config_hash(const RunConfig& cfg) {
  std::string s = serialize_config(cfg);
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace ns1d
