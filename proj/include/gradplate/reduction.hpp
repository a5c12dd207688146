#ifndef GRADPLATE_REDUCTION_HPP
#define GRADPLATE_REDUCTION_HPP

#include <vector>

#include "gradplate/linalg.hpp"
#include "gradplate/material.hpp"
#include "gradplate/motion.hpp"

// Through-thickness reconstruction of a plate motion,
//   chi(Y, Z, t) = y(Y, t) + Z d(Y, t) + (Z^2/2) g(Y, t),
// and the fiber integrals of the 3-D stored and kinetic densities that the
// midsurface energies approximate.  The director d stretches the normal so
// the transverse normal stress vanishes on the midsurface; the corrector g
// cancels the transverse stress gradient there.

namespace gradplate {

struct Director {
  double phi = 1.0;  // thickness stretch (positive root)
  V3 d{};            // phi * unit normal
};

// phi = sqrt(1 - 2 lambda/(lambda + 2 mu) tr E).  Throws std::domain_error
// when the radicand is <= 0 (the fiber collapses under in-plane compression)
// or the surface is degenerate at (Y1, Y2).
Director director(const Lame& lm, const SurfaceMotion& m, double Y1, double Y2,
                  double t);

struct Corrector {
  V3 g{};
  double cond = 1.0;  // spectral condition number of A_ij = M_{i3,j3}
};

// g = -A^{-1} M_{.3,.alpha} (d_alpha d), with M the second derivative of the
// quadratic Saint Venant density evaluated analytically at F = grad y + d @ e3
// and A its normal-normal block.  Throws std::domain_error when A is
// numerically singular.
Corrector corrector(const Lame& lm, const SurfaceMotion& m, double Y1,
                    double Y2, double t);

// Residuals of the identities the assembled ansatz satisfies on Z = 0:
//   E_{a3} = 0,
//   E_{33} = -lambda/(lambda+2mu) tr E,
//   d_Z E_{a3} = 0,
//   d_Z E_{33} = -lambda/(lambda+2mu) sum_a (d_a d) . y_{,a}.
// All four vanish to roundoff for any motion with phi > 0.
struct StrainResiduals {
  double Ea3[2] = {0, 0};
  double E33 = 0;
  double dZEa3[2] = {0, 0};
  double dZE33 = 0;
};
StrainResiduals strain_residuals(const Lame& lm, const SurfaceMotion& m,
                                 double Y1, double Y2, double t);

struct ThicknessIntegrals {
  double stored = 0.0;   // integral over Z in [-h/2, h/2] of the 3-D stored density
  double kinetic = 0.0;  // same for the kinetic density
  double cond = 1.0;     // corrector conditioning at this point
  bool quadrature_converged = true;  // doubling the rule changed nothing past 1e-12
};

// Fiber integrals by Gauss-Legendre.  The stored integrand is polynomial in Z
// of degree <= 8, so the default order is exact for it; the kinetic one is
// rational in Z and is checked by doubling the rule (the returned values come
// from the doubled rule).  quad_order must be >= 6.  h is the fiber length;
// callers normally pass co.h.
ThicknessIntegrals through_thickness(const DerivedCoeffs& co,
                                     const SurfaceMotion& m, double Y1,
                                     double Y2, double t, double h,
                                     int quad_order = 12);

enum class MotionFamily { Stretch, Bend, Mixed };

// Amplitude-h member of the convergence family: fixed O(1) shape fields with
// in-plane (static) and deflection (sin t) modes scaled by h.
SurfaceMotion family_motion(MotionFamily fam, double h);

struct ConvergenceReport {
  std::vector<double> h;
  std::vector<double> stored_err;   // mean |int W dZ - U| over the sample grid
  std::vector<double> kinetic_err;  // mean |int kappa dZ - K|
  double stored_slope = 0.0;        // log-log fit of stored_err against h
  double kinetic_slope = 0.0;       // NaN when the family is static in time
  bool stored_monotone = true;      // errors strictly decrease with h
  bool kinetic_monotone = true;
};

// Compares the midsurface densities with the fiber integrals on a fixed
// sample grid at t = 1, with d = h throughout (so both squared length scales
// shrink like h^2).  h_list needs at least two positive entries.
ConvergenceReport convergence_study(const MaterialSpec& base, MotionFamily fam,
                                    const std::vector<double>& h_list,
                                    int quad_order = 12);

}  // namespace gradplate

#endif
