#include "gradplate/cli.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "gradplate/dispersion.hpp"
#include "gradplate/ellipticity.hpp"
#include "gradplate/fracture.hpp"
#include "gradplate/kinematics.hpp"
#include "gradplate/lattice.hpp"
#include "gradplate/material.hpp"
#include "gradplate/motion.hpp"
#include "gradplate/reduction.hpp"
#include "gradplate/report.hpp"
#include "gradplate/wavesim.hpp"

namespace gradplate {
namespace {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------- schema ---

enum class Kind { Text, Real, Natural, Choice, RealList, IntPair };

struct OptSpec {
  const char* key;
  Kind kind;
  const char* preset;   // nullptr: required
  const char* choices;  // Kind::Choice only, comma-separated
  const char* help;
};

struct CmdSpec {
  const char* name;
  const char* help;
  std::vector<OptSpec> opts;
};

const std::vector<CmdSpec>& command_table() {
  static const std::vector<CmdSpec> table = {
      {"material",
       "derived midsurface coefficients for a material file",
       {{"material", Kind::Text, nullptr, nullptr, "material file, key = value lines"},
        {"out", Kind::Text, nullptr, nullptr, "coefficient table (CSV)"},
        {"seed", Kind::Natural, "1", nullptr, "seed echoed in the report"}}},
      {"ellipticity",
       "acoustic-form samples and an ellipticity verdict at the flat state",
       {{"material", Kind::Text, nullptr, nullptr, "material file"},
        {"samples", Kind::Natural, "512", nullptr, "random (a, b) pairs to tabulate"},
        {"out", Kind::Text, nullptr, nullptr, "sample table (CSV)"},
        {"seed", Kind::Natural, "1", nullptr, "sampling seed"}}},
      {"dispersion",
       "phase-velocity branches against the classical limit",
       {{"material", Kind::Text, nullptr, nullptr, "material file"},
        {"k-max", Kind::Real, "200", nullptr, "largest wavenumber"},
        {"points", Kind::Natural, "256", nullptr, "rows in the sweep"},
        {"svg", Kind::Text, "", nullptr, "optional chart path (empty: none)"},
        {"out", Kind::Text, nullptr, nullptr, "sweep table (CSV)"},
        {"seed", Kind::Natural, "1", nullptr, "seed echoed in the report"}}},
      {"waves",
       "evolve one plane-wave branch on the periodic cell and dump the spectrum",
       {{"material", Kind::Text, nullptr, nullptr, "material file"},
        {"grid", Kind::Natural, "16", nullptr, "modes per axis, even and >= 8"},
        {"mode", Kind::IntPair, nullptr, nullptr, "integer wavevector k1,k2"},
        {"branch", Kind::Choice, "L", "L,T,N", "longitudinal, transverse or normal"},
        {"method", Kind::Choice, "exact", "exact,rk4", "propagator"},
        {"duration", Kind::Real, "1", nullptr, "evolution time"},
        {"out", Kind::Text, nullptr, nullptr, "spectral snapshot (CSV)"},
        {"seed", Kind::Natural, "1", nullptr, "seed echoed in the report"}}},
      {"lattice",
       "shear chain dispersion against its homogenized continuum",
       {{"N", Kind::Natural, "256", nullptr, "particle count, even and >= 8"},
        {"d", Kind::Real, "0.1", nullptr, "lattice spacing"},
        {"kd-max", Kind::Real, "0.2", nullptr, "largest kd in the sweep"},
        {"points", Kind::Natural, "64", nullptr, "rows in the sweep"},
        {"out", Kind::Text, nullptr, nullptr, "gap table (CSV)"},
        {"seed", Kind::Natural, "1", nullptr, "seed echoed in the report"}}},
      {"reduce",
       "through-thickness integrals versus the midsurface densities",
       {{"material", Kind::Text, nullptr, nullptr, "material file"},
        {"family", Kind::Choice, "mixed", "stretch,bend,mixed", "motion family"},
        {"h-list", Kind::RealList, "0.1,0.05,0.025,0.0125", nullptr,
         "thicknesses, comma-separated"},
        {"out", Kind::Text, nullptr, nullptr, "error table (CSV)"},
        {"seed", Kind::Natural, "1", nullptr, "seed echoed in the report"}}},
      {"fracture",
       "crack opening profile, half-plane field and solve report",
       {{"alpha", Kind::Real, "0.1", nullptr, "cohesive stiffness"},
        {"beta", Kind::Real, "0.001", nullptr, "gradient rigidity"},
        {"gamma", Kind::Real, "1", nullptr, "applied load"},
        {"N", Kind::Natural, "128", nullptr, "basis size"},
        {"out", Kind::Text, nullptr, nullptr, "output prefix"},
        {"seed", Kind::Natural, "1", nullptr, "seed echoed in the report"}}},
  };
  return table;
}

const CmdSpec* find_command(const std::string& name) {
  for (const CmdSpec& c : command_table())
    if (name == c.name) return &c;
  return nullptr;
}

std::string subcommand_list() {
  std::string s;
  for (const CmdSpec& c : command_table()) {
    if (!s.empty()) s += ", ";
    s += c.name;
  }
  return s;
}

// ------------------------------------------------------ value validation ---

double parse_real_text(const std::string& key, const std::string& text) {
  const char* c = text.c_str();
  char* end = nullptr;
  double v = std::strtod(c, &end);
  if (text.empty() || end != c + text.size() || !std::isfinite(v))
    throw UsageError("option --" + key + ": cannot parse '" + text + "' as a number");
  return v;
}

unsigned long long parse_natural_text(const std::string& key, const std::string& text) {
  bool digits = !text.empty() &&
                std::all_of(text.begin(), text.end(),
                            [](unsigned char ch) { return std::isdigit(ch); });
  if (!digits || text.size() > 18)
    throw UsageError("option --" + key + ": expected a non-negative integer, got '" + text +
                     "'");
  return std::strtoull(text.c_str(), nullptr, 10);
}

long parse_int_text(const std::string& key, const std::string& text) {
  const char* c = text.c_str();
  char* end = nullptr;
  long v = std::strtol(c, &end, 10);
  if (text.empty() || end != c + text.size())
    throw UsageError("option --" + key + ": cannot parse '" + text + "' as an integer");
  return v;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else
      cur += ch;
  }
  parts.push_back(cur);
  return parts;
}

std::string canonical_value(const OptSpec& opt, const std::string& text) {
  switch (opt.kind) {
    case Kind::Text:
      return text;
    case Kind::Real:
      return fmt_double(parse_real_text(opt.key, text));
    case Kind::Natural:
      return std::to_string(parse_natural_text(opt.key, text));
    case Kind::Choice: {
      for (const std::string& c : split_commas(opt.choices))
        if (text == c) return text;
      throw UsageError("option --" + std::string(opt.key) + ": '" + text +
                       "' is not one of {" + opt.choices + "}");
    }
    case Kind::RealList: {
      std::vector<std::string> parts = split_commas(text);
      std::string canon;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) canon += ',';
        canon += fmt_double(parse_real_text(opt.key, parts[i]));
      }
      return canon;
    }
    case Kind::IntPair: {
      std::vector<std::string> parts = split_commas(text);
      if (parts.size() != 2)
        throw UsageError("option --" + std::string(opt.key) + ": expected two integers 'i,j', got '" +
                         text + "'");
      return std::to_string(parse_int_text(opt.key, parts[0])) + ',' +
             std::to_string(parse_int_text(opt.key, parts[1]));
    }
  }
  throw std::logic_error("canonical_value: unhandled kind");
}

// ---------------------------------------------------------- config files ---

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

void read_config_file(const std::string& path,
                      std::vector<std::pair<std::string, std::string>>& pairs) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trimmed(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError("config file " + path + " line " + std::to_string(lineno) +
                       ": expected key = value");
    std::string key = trimmed(line.substr(0, eq));
    std::string val = trimmed(line.substr(eq + 1));
    if (key.empty())
      throw UsageError("config file " + path + " line " + std::to_string(lineno) +
                       ": empty key");
    pairs.emplace_back(key, val);
  }
}

// ------------------------------------------------------- config accessors ---

double real_param(const RunConfig& cfg, const char* key) {
  return std::strtod(cfg.params.at(key).c_str(), nullptr);
}

long natural_param(const RunConfig& cfg, const char* key) {
  return std::strtol(cfg.params.at(key).c_str(), nullptr, 10);
}

}  // namespace

RunConfig parse_config(const std::vector<std::string>& args, std::ostream* diag) {
  if (args.empty())
    throw UsageError("missing subcommand; expected one of " + subcommand_list());
  const CmdSpec* cmd = find_command(args[0]);
  if (!cmd)
    throw UsageError("unknown subcommand '" + args[0] + "'; expected one of " +
                     subcommand_list());

  // tokenize: --key=value or --key value; --config collects file paths
  std::vector<std::pair<std::string, std::string>> cli_pairs;
  std::vector<std::string> config_files;
  for (std::size_t i = 1; i < args.size(); ++i) {
    const std::string& tok = args[i];
    if (tok.size() < 3 || tok.compare(0, 2, "--") != 0)
      throw UsageError("unexpected argument '" + tok + "'");
    std::string name = tok.substr(2), value;
    std::size_t eq = name.find('=');
    if (eq != std::string::npos) {
      value = name.substr(eq + 1);
      name = name.substr(0, eq);
    } else {
      if (i + 1 >= args.size())
        throw UsageError("option --" + name + " expects a value");
      value = args[++i];
    }
    if (name == "config")
      config_files.push_back(value);
    else
      cli_pairs.emplace_back(name, value);
  }

  auto lookup = [&](const std::string& key, const char* where) -> const OptSpec& {
    for (const OptSpec& o : cmd->opts)
      if (key == o.key) return o;
    throw UsageError(std::string(where) + ": unknown key '" + key + "' for '" + cmd->name +
                     "'");
  };

  // config files first (lowest precedence), then command line; a key present
  // in both keeps the command-line value and warns once
  std::map<std::string, std::string> raw;
  std::map<std::string, bool> from_file;
  for (const std::string& f : config_files) {
    std::vector<std::pair<std::string, std::string>> pairs;
    read_config_file(f, pairs);
    for (auto& [k, v] : pairs) {
      lookup(k, ("config file " + f).c_str());
      raw[k] = v;
      from_file[k] = true;
    }
  }
  for (auto& [k, v] : cli_pairs) {
    lookup(k, "command line");
    if (from_file[k]) {
      if (diag)
        *diag << "warning: --" << k
              << " from the command line overrides the config file value\n";
      from_file[k] = false;
    }
    raw[k] = v;
  }

  RunConfig cfg;
  cfg.subcommand = cmd->name;
  for (const OptSpec& opt : cmd->opts) {
    auto it = raw.find(opt.key);
    std::string text;
    if (it != raw.end())
      text = it->second;
    else if (opt.preset)
      text = opt.preset;
    else
      throw UsageError("missing required option --" + std::string(opt.key) + " for '" +
                       cmd->name + "'");
    std::string canon = canonical_value(opt, text);
    if (std::string_view(opt.key) == "material")
      cfg.material = canon;
    else if (std::string_view(opt.key) == "out")
      cfg.out = canon;
    else if (std::string_view(opt.key) == "seed")
      cfg.seed = parse_natural_text(opt.key, canon);
    else
      cfg.params[opt.key] = canon;
  }
  return cfg;
}

std::map<std::string, std::string> config_echo(const RunConfig& cfg) {
  const CmdSpec* cmd = find_command(cfg.subcommand);
  if (!cmd) throw UsageError("unknown subcommand '" + cfg.subcommand + "'");
  std::map<std::string, std::string> echo = cfg.params;
  for (const OptSpec& opt : cmd->opts) {
    if (std::string_view(opt.key) == "material") echo["material"] = cfg.material;
    else if (std::string_view(opt.key) == "out") echo["out"] = cfg.out;
    else if (std::string_view(opt.key) == "seed") echo["seed"] = std::to_string(cfg.seed);
  }
  return echo;
}

std::vector<std::string> config_args(const std::string& subcommand,
                                     const std::map<std::string, std::string>& echo) {
  std::vector<std::string> args{subcommand};
  for (const auto& [k, v] : echo) args.push_back("--" + k + "=" + v);
  return args;
}

namespace {

// ------------------------------------------------------------- reporting ---

ordered_json base_summary(const RunConfig& cfg, const std::vector<std::string>& outputs) {
  ordered_json j;
  j["tool"] = "gradplate";
  j["version"] = kVersion;
  j["subcommand"] = cfg.subcommand;
  j["seed"] = cfg.seed;
  j["config"] = config_echo(cfg);
  j["outputs"] = outputs;
  return j;
}

std::string summary_path(const std::string& out) {
  std::string stem = out;
  if (stem.size() > 4 && stem.compare(stem.size() - 4, 4, ".csv") == 0)
    stem.erase(stem.size() - 4);
  return stem + "_summary.json";
}

void write_json(const std::string& path, const ordered_json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

// ------------------------------------------------------------- handlers ---

void cmd_material(const RunConfig& cfg, std::ostream& out) {
  DerivedCoeffs co = derive_coefficients(load_material(cfg.material));
  CsvWriter csv({"E", "nu", "rho_R", "h", "d", "lambda", "mu", "a", "b", "c", "ell_s2",
                 "ell_k2", "rho_s"});
  csv.row({co.E, co.nu, co.rho_R, co.h, co.d, co.lambda, co.mu, co.a, co.b, co.c, co.ell_s2,
           co.ell_k2, co.rho_s});
  std::string spath = summary_path(cfg.out);
  ordered_json j = base_summary(cfg, {cfg.out, spath});
  j["summary"] = ordered_json{{"lambda", co.lambda}, {"mu", co.mu},     {"a", co.a},
                              {"b", co.b},           {"c", co.c},       {"ell_s2", co.ell_s2},
                              {"ell_k2", co.ell_k2}, {"rho_s", co.rho_s}};
  csv.write_file(cfg.out);
  write_json(spath, j);
  out << "wrote " << cfg.out << "\nwrote " << spath << "\n";
}

void cmd_ellipticity(const RunConfig& cfg, std::ostream& out) {
  DerivedCoeffs co = derive_coefficients(load_material(cfg.material));
  SurfaceGeometry geo = strain_state(SurfaceMotion::identity(), 0.0, 0.0, 0.0).geo;
  long samples = natural_param(cfg, "samples");
  if (samples > 10'000'000) throw UsageError("option --samples: at most 1e7");

  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> nd;
  CsvWriter csv({"a1", "a2", "b1", "b2", "b3", "value"});
  for (long i = 0; i < samples; ++i) {
    V2 a;
    V3 b;
    double na = 0, nb = 0;
    do {
      a = {nd(rng), nd(rng)};
      na = std::sqrt(dot(a, a));
    } while (na < 1e-8);
    do {
      b = {nd(rng), nd(rng), nd(rng)};
      nb = std::sqrt(dot(b, b));
    } while (nb < 1e-8);
    a = (1.0 / na) * a;
    b = (1.0 / nb) * b;
    csv.row({a.x, a.y, b.x, b.y, b.z, acoustic_contraction(geo, co, a, b)});
  }

  EllipticityReport rep = classify_ellipticity(geo, co, static_cast<int>(samples), cfg.seed);
  std::string spath = summary_path(cfg.out);
  ordered_json j = base_summary(cfg, {cfg.out, spath});
  j["summary"] = ordered_json{{"classification", to_string(rep.cls)},
                              {"min_value", rep.min_value},
                              {"tangent_min", rep.tangent_min},
                              {"min_a", {rep.min_a.x, rep.min_a.y}},
                              {"min_b", {rep.min_b.x, rep.min_b.y, rep.min_b.z}},
                              {"samples", rep.samples}};
  csv.write_file(cfg.out);
  write_json(spath, j);
  out << to_string(rep.cls) << ": min contraction " << fmt_double(rep.min_value) << " over "
      << rep.samples << " samples (tangent min " << fmt_double(rep.tangent_min) << ", seed "
      << cfg.seed << ")\n";
  out << "wrote " << cfg.out << "\nwrote " << spath << "\n";
}

void cmd_dispersion(const RunConfig& cfg, std::ostream& out) {
  MaterialSpec ms = load_material(cfg.material);
  DerivedCoeffs co = derive_coefficients(ms);
  DerivedCoeffs cl = classical_limit(ms);
  double kmax = real_param(cfg, "k-max");
  long n = natural_param(cfg, "points");
  if (!(kmax > 0)) throw UsageError("option --k-max: must be positive");
  if (n < 1 || n > 10'000'000) throw UsageError("option --points: must be in [1, 1e7]");

  // rows are independent; indexed writes keep the result identical for any
  // worker count
  std::vector<std::array<double, 7>> rows(n);
  auto fill = [&](long lo, long hi) {
    for (long i = lo; i < hi; ++i) {
      double k = kmax * double(i + 1) / double(n);
      DispersionSample g = dispersion_point(co, k);
      DispersionSample c0 = dispersion_point(cl, k);
      rows[i] = {k, g.cL2, g.cT2, g.cN2, c0.cL2, c0.cT2, c0.cN2};
    }
  };
  int workers = worker_count(static_cast<int>(std::min<long>(n, 64)));
  if (workers <= 1) {
    fill(0, n);
  } else {
    std::vector<std::thread> pool;
    long chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      long lo = w * chunk, hi = std::min(n, lo + chunk);
      if (lo < hi) pool.emplace_back(fill, lo, hi);
    }
    for (std::thread& t : pool) t.join();
  }

  CsvWriter csv({"k", "cL2", "cT2", "cN2", "cL2_cl", "cT2_cl", "cN2_cl"});
  for (const auto& r : rows) csv.row(std::vector<double>(r.begin(), r.end()));

  double qt = co.nu / (1.0 - co.nu);
  qt *= qt;
  double cL2_limit = co.a * co.ell_s2 / (co.rho_s * (co.c * qt + co.ell_k2));

  std::vector<std::string> outputs{cfg.out};
  const std::string& svg = cfg.params.at("svg");
  if (!svg.empty()) outputs.push_back(svg);
  std::string spath = summary_path(cfg.out);
  outputs.push_back(spath);

  ordered_json j = base_summary(cfg, outputs);
  ordered_json cross;
  try {
    cross["normal_k2"] = normal_crossing_k2(co);
  } catch (const std::domain_error&) {
    cross["normal_k2"] = nullptr;
  }
  try {
    cross["longitudinal_k2"] = longitudinal_crossing_k2(co);
  } catch (const std::domain_error&) {
    cross["longitudinal_k2"] = nullptr;
  }
  j["summary"] = ordered_json{{"cL2_limit", cL2_limit}, {"crossings", cross}};

  csv.write_file(cfg.out);
  if (!svg.empty()) {
    auto take = [&](int col) {
      std::vector<std::pair<double, double>> pts(rows.size());
      for (std::size_t i = 0; i < rows.size(); ++i) pts[i] = {rows[i][0], rows[i][col]};
      return pts;
    };
    std::vector<SvgSeries> series{
        {"cL2", "#1f77b4", false, take(1)},      {"cT2", "#2ca02c", false, take(2)},
        {"cN2", "#d62728", false, take(3)},      {"cL2_cl", "#1f77b4", true, take(4)},
        {"cT2_cl", "#2ca02c", true, take(5)},    {"cN2_cl", "#d62728", true, take(6)}};
    write_text_file(svg, render_line_chart("dispersion branches", "k", "c^2", series));
  }
  write_json(spath, j);
  for (const std::string& p : outputs) out << "wrote " << p << "\n";
}

void cmd_waves(const RunConfig& cfg, std::ostream& out) {
  DerivedCoeffs co = derive_coefficients(load_material(cfg.material));
  long grid = natural_param(cfg, "grid");
  std::vector<std::string> mode = split_commas(cfg.params.at("mode"));
  int k1 = static_cast<int>(parse_int_text("mode", mode[0]));
  int k2 = static_cast<int>(parse_int_text("mode", mode[1]));
  if (k1 == 0 && k2 == 0) throw UsageError("option --mode: wavevector must be nonzero");
  const std::string& branch = cfg.params.at("branch");
  const std::string& method = cfg.params.at("method");
  double duration = real_param(cfg, "duration");
  if (!(duration > 0)) throw UsageError("option --duration: must be positive");

  WaveSimulation sim(co, static_cast<int>(grid));
  V3 basis[3];
  sim.frame_basis(k1, k2, basis);
  int bi = branch == "L" ? 0 : branch == "T" ? 1 : 2;
  for (int c = 0; c < 3; ++c)
    if (std::abs(basis[bi][c]) > 1e-15) sim.add_displacement(c, k1, k2, basis[bi][c], 0.0);

  double e0 = sim.energy();
  if (method == "exact") {
    sim.advance_exact(duration);
  } else {
    int nsub = std::max(1, static_cast<int>(std::ceil(duration * sim.max_frequency() / 0.5)));
    sim.advance_rk4(duration, nsub);
  }
  double e1 = sim.energy();

  CsvWriter csv({"k1", "k2", "component", "re", "im"});
  for (const SpectralMode& m : sim.modes()) {
    auto amp = sim.spectrum(m.k1, m.k2);
    for (int c = 0; c < 3; ++c)
      csv.row({double(m.k1), double(m.k2), double(c), amp[c].real(), amp[c].imag()});
  }

  double kn = std::sqrt(double(k1) * k1 + double(k2) * k2);
  DispersionSample dsp = dispersion_point(co, kn);
  double c2 = bi == 0 ? dsp.cL2 : bi == 1 ? dsp.cT2 : dsp.cN2;

  std::string spath = summary_path(cfg.out);
  ordered_json j = base_summary(cfg, {cfg.out, spath});
  j["summary"] = ordered_json{{"branch", branch},
                              {"mode", {k1, k2}},
                              {"c2_branch", c2},
                              {"omega", std::sqrt(c2) * kn},
                              {"energy_initial", e0},
                              {"energy_final", e1},
                              {"energy_drift", std::abs(e1 - e0)}};
  csv.write_file(cfg.out);
  write_json(spath, j);
  out << "wrote " << cfg.out << "\nwrote " << spath << "\n";
}

void cmd_lattice(const RunConfig& cfg, std::ostream& out) {
  ChainSpec spec;
  spec.N_p = static_cast<int>(natural_param(cfg, "N"));
  spec.d = real_param(cfg, "d");
  validate(spec);
  double kdmax = real_param(cfg, "kd-max");
  long pts = natural_param(cfg, "points");
  if (!(kdmax > 0)) throw UsageError("option --kd-max: must be positive");
  if (pts < 2 || pts > 1'000'000) throw UsageError("option --points: must be in [2, 1e6]");

  ShearCoeffs sc = shear_coeffs(spec);
  CsvWriter csv({"kd", "omega2_discrete", "omega2_continuum", "rel_gap"});
  std::vector<double> kd_grid(pts);
  for (long i = 0; i < pts; ++i) {
    double kd = kdmax * double(i + 1) / double(pts);
    kd_grid[i] = kd;
    double k = kd / spec.d;
    double wd = discrete_dispersion(spec, k);
    double wc = continuum_dispersion(sc, k);
    csv.row({kd, wd, wc, std::abs(wd - wc) / wd});
  }
  auto [ls2_hat, lk2_hat] = identify_lengths(spec, kd_grid);
  double target = spec.d * spec.d / 12.0;

  std::string spath = summary_path(cfg.out);
  ordered_json j = base_summary(cfg, {cfg.out, spath});
  j["summary"] = ordered_json{{"cT2", sc.cT2},
                              {"ell_s2", sc.ell_s2},
                              {"ell_k2", sc.ell_k2},
                              {"ell_s2_hat", ls2_hat},
                              {"ell_k2_hat", lk2_hat},
                              {"length_gap_hat", lk2_hat - ls2_hat},
                              {"length_gap_target", target}};
  csv.write_file(cfg.out);
  write_json(spath, j);
  out << "wrote " << cfg.out << "\nwrote " << spath << "\n";
}

void cmd_reduce(const RunConfig& cfg, std::ostream& out) {
  MaterialSpec ms = load_material(cfg.material);
  const std::string& fam_text = cfg.params.at("family");
  MotionFamily fam = fam_text == "stretch" ? MotionFamily::Stretch
                     : fam_text == "bend"  ? MotionFamily::Bend
                                           : MotionFamily::Mixed;
  std::vector<double> h_list;
  for (const std::string& p : split_commas(cfg.params.at("h-list")))
    h_list.push_back(std::strtod(p.c_str(), nullptr));

  ConvergenceReport rep = convergence_study(ms, fam, h_list);
  CsvWriter csv({"h", "W_err", "K_err"});
  for (std::size_t i = 0; i < rep.h.size(); ++i)
    csv.row({rep.h[i], rep.stored_err[i], rep.kinetic_err[i]});

  std::string spath = summary_path(cfg.out);
  ordered_json j = base_summary(cfg, {cfg.out, spath});
  j["summary"] =
      ordered_json{{"stored_slope", rep.stored_slope},
                   {"kinetic_slope",
                    std::isnan(rep.kinetic_slope) ? ordered_json(nullptr)
                                                  : ordered_json(rep.kinetic_slope)},
                   {"stored_monotone", rep.stored_monotone},
                   {"kinetic_monotone", rep.kinetic_monotone}};
  csv.write_file(cfg.out);
  write_json(spath, j);
  out << "wrote " << cfg.out << "\nwrote " << spath << "\n";
}

void cmd_fracture(const RunConfig& cfg, std::ostream& out) {
  CrackConfig cc;
  cc.alpha = real_param(cfg, "alpha");
  cc.beta = real_param(cfg, "beta");
  cc.gamma = real_param(cfg, "gamma");
  cc.N = static_cast<int>(natural_param(cfg, "N"));
  CrackProfile p = solve_crack(cc);

  std::string f_path = cfg.out + "_f.csv";
  std::string field_path = cfg.out + "_field.csv";
  std::string report_path = cfg.out + "_report.json";

  CsvWriter fcsv({"x", "f", "f1", "f2", "f3", "f4"});
  for (int i = 0; i <= 400; ++i) {
    double x = (i - 200) / 200.0;
    fcsv.row({x, p.eval(x, 0), p.eval(x, 1), p.eval(x, 2), p.eval(x, 3), p.eval(x, 4)});
  }

  CsvWriter field_csv({"x", "z", "v", "vx", "vz"});
  const double zs[] = {1e-3, 1e-2, 0.1, 0.3, 1.0};
  for (double z : zs)
    for (int i = -9; i <= 9; ++i) {
      double x = i / 10.0;
      FieldSample s = reconstruct_field(p, x, z);
      field_csv.row({x, z, s.v, s.vx, s.vz});
    }

  ordered_json j = base_summary(cfg, {f_path, field_path, report_path});
  j["summary"] = ordered_json{
      {"n_used", p.n_used},
      {"cond", p.cond},
      {"checkpoint_residual", p.residual},
      {"sup_norms",
       {p.sup_norm(0), p.sup_norm(1), p.sup_norm(2), p.sup_norm(3), p.sup_norm(4)}},
      {"tip_curvature", tip_diagnostics(p)},
      {"opening_center", p.eval(0.0)}};
  fcsv.write_file(f_path);
  field_csv.write_file(field_path);
  write_json(report_path, j);
  out << "wrote " << f_path << "\nwrote " << field_path << "\nwrote " << report_path << "\n";
}

void dispatch(const RunConfig& cfg, std::ostream& out) {
  if (cfg.subcommand == "material") cmd_material(cfg, out);
  else if (cfg.subcommand == "ellipticity") cmd_ellipticity(cfg, out);
  else if (cfg.subcommand == "dispersion") cmd_dispersion(cfg, out);
  else if (cfg.subcommand == "waves") cmd_waves(cfg, out);
  else if (cfg.subcommand == "lattice") cmd_lattice(cfg, out);
  else if (cfg.subcommand == "reduce") cmd_reduce(cfg, out);
  else cmd_fracture(cfg, out);
}

void print_help(std::ostream& os, const CmdSpec* cmd) {
  if (!cmd) {
    os << "usage: gradplate <subcommand> --key value [...]\n\nsubcommands:\n";
    for (const CmdSpec& c : command_table()) {
      os << "  " << c.name;
      for (std::size_t i = std::string(c.name).size(); i < 14; ++i) os << ' ';
      os << c.help << "\n";
    }
    os << "\n--key=value is also accepted.  --config FILE merges key = value lines\n"
          "at lower precedence than the command line.  GRADPLATE_THREADS caps the\n"
          "worker threads of data-parallel sweeps.\n";
  } else {
    os << "usage: gradplate " << cmd->name << " [options]\n  " << cmd->help
       << "\n\noptions:\n";
    for (const OptSpec& o : cmd->opts) {
      os << "  --" << o.key;
      if (o.kind == Kind::Choice) os << " {" << o.choices << "}";
      else os << " VALUE";
      if (!o.preset) os << "  (required)";
      else if (*o.preset) os << "  (default " << o.preset << ")";
      os << "\n      " << o.help << "\n";
    }
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& diag) {
  const CmdSpec* cmd = args.empty() ? nullptr : find_command(args[0]);
  for (const std::string& a : args)
    if (a == "--help" || a == "-h") {
      print_help(out, cmd);
      return 0;
    }
  try {
    RunConfig cfg = parse_config(args, &diag);
    dispatch(cfg, out);
    return 0;
  } catch (const UsageError& e) {
    diag << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    diag << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    diag << "error: " << e.what() << "\n";
    return 3;
  }
}

int run_cli(int argc, const char* const argv[]) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace gradplate
