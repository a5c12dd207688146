#include "gradplate/material.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gradplate {

Lame lame_from_engineering(double E, double nu) {
  if (!(E > 0.0)) throw std::domain_error("lame_from_engineering: E must be > 0");
  if (!(nu > 0.0 && nu < 0.5))
    throw std::domain_error("lame_from_engineering: nu must lie in (0, 1/2)");
  Lame l;
  l.lambda = E * nu / ((1.0 + nu) * (1.0 - 2.0 * nu));
  l.mu = E / (2.0 * (1.0 + nu));
  return l;
}

void engineering_from_lame(const Lame& lame, double& E, double& nu) {
  if (!(lame.lambda > 0.0 && lame.mu > 0.0))
    throw std::domain_error("engineering_from_lame: lambda and mu must be > 0");
  E = lame.mu * (3.0 * lame.lambda + 2.0 * lame.mu) / (lame.lambda + lame.mu);
  nu = lame.lambda / (2.0 * (lame.lambda + lame.mu));
}

DerivedCoeffs derive_coefficients(const MaterialSpec& spec) {
  Lame lame = lame_from_engineering(spec.E, spec.nu);
  if (!(spec.rho_R > 0.0)) throw std::domain_error("derive_coefficients: rho_R must be > 0");
  if (!(spec.h > 0.0)) throw std::domain_error("derive_coefficients: h must be > 0");
  if (!(spec.d >= 0.0)) throw std::domain_error("derive_coefficients: d must be >= 0");

  DerivedCoeffs co;
  co.lambda = lame.lambda;
  co.mu = lame.mu;
  co.E = spec.E;
  co.nu = spec.nu;
  co.rho_R = spec.rho_R;
  co.h = spec.h;
  co.d = spec.d;

  co.ell_s = spec.ell_s ? *spec.ell_s : spec.d / std::sqrt(12.0);
  co.ell_k = spec.ell_k ? *spec.ell_k : spec.d / std::sqrt(6.0);
  if (co.ell_s < 0.0 || co.ell_k < 0.0)
    throw std::domain_error("derive_coefficients: length scales must be >= 0");
  co.ell_s2 = co.ell_s * co.ell_s;
  co.ell_k2 = co.ell_k * co.ell_k;

  double stiff = spec.h * spec.E / (1.0 - spec.nu * spec.nu);
  co.a = stiff;
  co.b = stiff * (spec.h * spec.h / 24.0 + co.ell_s2);
  co.c = spec.h * spec.h / 12.0 + co.ell_k2;
  co.rho_s = spec.h * spec.rho_R;
  return co;
}

DerivedCoeffs classical_limit(const MaterialSpec& spec) {
  MaterialSpec s = spec;
  s.ell_s = 0.0;
  s.ell_k = 0.0;
  return derive_coefficients(s);
}

MaterialSpec parse_material(std::istream& in) {
  std::map<std::string, double> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("material file line " + std::to_string(lineno) +
                                  ": expected key = value");
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.empty() || val.empty())
      throw std::invalid_argument("material file line " + std::to_string(lineno) +
                                  ": empty key or value");
    if (kv.count(key))
      throw std::invalid_argument("material file: duplicate key '" + key + "'");
    std::size_t pos = 0;
    double x;
    try {
      x = std::stod(val, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("material file: key '" + key + "' has non-numeric value '" + val + "'");
    }
    if (pos != val.size())
      throw std::invalid_argument("material file: key '" + key + "' has trailing junk in value '" + val + "'");
    kv[key] = x;
  }

  MaterialSpec spec;
  bool seen[5] = {false, false, false, false, false};
  for (const auto& [key, x] : kv) {
    if (key == "E") { spec.E = x; seen[0] = true; }
    else if (key == "nu") { spec.nu = x; seen[1] = true; }
    else if (key == "rho_R") { spec.rho_R = x; seen[2] = true; }
    else if (key == "h") { spec.h = x; seen[3] = true; }
    else if (key == "d") { spec.d = x; seen[4] = true; }
    else if (key == "ell_s") spec.ell_s = x;
    else if (key == "ell_k") spec.ell_k = x;
    else throw std::invalid_argument("material file: unknown key '" + key + "'");
  }
  const char* names[5] = {"E", "nu", "rho_R", "h", "d"};
  for (int i = 0; i < 5; ++i)
    if (!seen[i]) throw std::invalid_argument(std::string("material file: missing key '") + names[i] + "'");
  return spec;
}

MaterialSpec parse_material_text(const std::string& text) {
  std::istringstream in(text);
  return parse_material(in);
}

MaterialSpec load_material(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open material file '" + path + "'");
  return parse_material(in);
}

}  // namespace gradplate
