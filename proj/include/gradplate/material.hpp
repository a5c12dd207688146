#ifndef GRADPLATE_MATERIAL_HPP
#define GRADPLATE_MATERIAL_HPP

#include <iosfwd>
#include <optional>
#include <string>

namespace gradplate {

// Bulk material plus plate geometry.  ell_s / ell_k are optional length
// overrides; when absent they default to the microstructure identification
// ell_s^2 = d^2/12, ell_k^2 = d^2/6.
struct MaterialSpec {
  double E = 1.0;      // Young's modulus, > 0
  double nu = 0.25;    // Poisson ratio, in (0, 1/2)
  double rho_R = 1.0;  // reference mass density, > 0
  double h = 0.1;      // plate thickness, > 0
  double d = 0.1;      // microstructure spacing, >= 0
  std::optional<double> ell_s;  // stored-energy length scale override
  std::optional<double> ell_k;  // kinetic length scale override
};

struct Lame {
  double lambda = 0.0;
  double mu = 0.0;
};

// lambda = E nu / ((1+nu)(1-2nu)), mu = E / (2(1+nu)).
// Throws std::domain_error unless E > 0 and 0 < nu < 1/2.
Lame lame_from_engineering(double E, double nu);

// Inverse map: E = mu(3 lambda + 2 mu)/(lambda + mu), nu = lambda/(2(lambda + mu)).
// Throws std::domain_error unless lambda > 0 and mu > 0.
void engineering_from_lame(const Lame& lame, double& E, double& nu);

// Coefficients of the midsurface energies:
//   a = h E/(1-nu^2)
//   b = h E/(1-nu^2) (h^2/24 + ell_s^2)
//   c = h^2/12 + ell_k^2
//   rho_s = h rho_R
struct DerivedCoeffs {
  double lambda = 0, mu = 0;
  double a = 0, b = 0, c = 0;
  double ell_s = 0, ell_k = 0;    // lengths
  double ell_s2 = 0, ell_k2 = 0;  // squared lengths
  double rho_s = 0;
  // carried along for thresholds, classical limits and thickness reduction
  double E = 0, nu = 0, rho_R = 0, h = 0, d = 0;
};

// Throws std::domain_error on invalid inputs (see MaterialSpec field ranges;
// negative length overrides are rejected).
DerivedCoeffs derive_coefficients(const MaterialSpec& spec);

// Same bulk material and thickness with both length scales set to zero;
// used for classical (Koiter / Hilgers-Pipkin) reference curves.
DerivedCoeffs classical_limit(const MaterialSpec& spec);

// key = value text, one key per line, '#' comments.
// Keys: E, nu, rho_R, h, d, ell_s (optional), ell_k (optional).
// Unknown or duplicate keys raise std::invalid_argument naming the key.
MaterialSpec parse_material(std::istream& in);
MaterialSpec parse_material_text(const std::string& text);
MaterialSpec load_material(const std::string& path);

}  // namespace gradplate

#endif
