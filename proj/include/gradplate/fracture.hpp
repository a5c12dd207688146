#ifndef GRADPLATE_FRACTURE_HPP
#define GRADPLATE_FRACTURE_HPP

#include <functional>
#include <vector>

// Crack opening profile f on (-1, 1) under a constant load gamma, from the
// integro-differential balance
//   beta f'''' - alpha f'' + H f' = gamma,   f(+-1) = f'(+-1) = 0,
// where H is the finite Hilbert transform.  The solver expands f in the
// clamped basis (1 - x^2)^2 T_k and collocates at Chebyshev points; the
// transform of each (polynomial) basis derivative is evaluated with a rule
// that is exact for its degree, so the only approximation is the expansion
// itself.

namespace gradplate {

// (1/pi) p.v. integral over (-1, 1) of g(s)/(x - s) ds for a callable g that
// is smooth in the interior (integrable endpoint singularities are fine).
// Subtracts g(x) analytically and integrates the remainder on panels graded
// geometrically toward both endpoints.  Throws std::invalid_argument when x
// is within 1e-12 of an endpoint.
double finite_hilbert(const std::function<double(double)>& g, double x,
                      int panel_order = 20);

// Transform of the derivative of the k-th clamped basis function,
//   (1/pi) p.v. integral of d/ds[(1 - s^2)^2 T_k(s)] / (x - s) ds,
// with the quadrature order chosen exact for every k < n_basis.  This is the
// building block of the collocation rows, exposed for cross-checks.
double crack_basis_hilbert(int k, int n_basis, double x);

struct CrackConfig {
  double alpha = 0.1;   // cohesive stiffness, > 0
  double beta = 1e-3;   // gradient rigidity, > 0
  double gamma = 1.0;   // applied load
  int N = 128;          // basis size, >= 16
};

struct CrackProfile {
  CrackConfig config;         // as requested
  int n_used = 0;             // basis size that met the residual target
  std::vector<double> coeff;  // coefficients against (1 - x^2)^2 T_k
  double residual = 0.0;      // max equation residual at 2 n_used checkpoints
  double cond = 1.0;          // SVD condition number of the collocation matrix

  // f and its derivatives up to f'''' (deriv in 0..4)
  double eval(double x, int deriv = 0) const;

  // max |f^(deriv)| over [lo, hi], dense sampling
  double sup_norm(int deriv, double lo = -1.0, double hi = 1.0) const;
};

// Collocation solve.  If the residual at the checkpoint nodes exceeds
// 1e-8 |gamma|, the basis is doubled once; a second failure throws
// std::runtime_error.  Config values are validated (positive stiffnesses,
// N >= 16).
CrackProfile solve_crack(const CrackConfig& cfg);

// Square-root opening gamma sqrt(1 - x^2): the exact solution of the
// alpha = beta = 0 limit under the sign convention used here (H applied to
// its derivative returns gamma).
double classical_reference(double gamma, double x);

struct FieldSample {
  double v = 0.0;   // harmonic extension of the opening
  double vx = 0.0;  // d/dx
  double vz = 0.0;  // d/dz
};

// Poisson half-plane extension v(x, z) of the opening profile and its first
// derivatives, z > 0 (z <= 0 throws).  The kernel peak at s = x is resolved
// by panels whose width doubles away from the peak starting at width z.
FieldSample reconstruct_field(const CrackProfile& f, double x, double z);

// max |f''| over 0.9 <= |x| <= 1: the curvature concentration at the tips.
double tip_diagnostics(const CrackProfile& f);

}  // namespace gradplate

#endif
