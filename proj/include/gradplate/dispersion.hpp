#ifndef GRADPLATE_DISPERSION_HPP
#define GRADPLATE_DISPERSION_HPP

#include <vector>

#include "gradplate/linalg.hpp"
#include "gradplate/material.hpp"

namespace gradplate {

// Squared phase speeds (omega/k)^2 of the three plane-wave branches of the
// flat-state operator at wavenumber k >= 0:
//   longitudinal  cL^2 = (A/rho_s) (1 + ls^2 k^2) / (1 + (c qt + lk^2) k^2)
//   transverse    cT^2 = (A(1-nu)/2 rho_s) (1 + ls^2 k^2) / (1 + lk^2 k^2)
//   normal        cN^2 = (B/rho_s) k^2 / (1 + (c + lk^2) k^2)
// with qt = (nu/(1-nu))^2.  The classical curves are the same expressions
// with both internal lengths set to zero (see classical_limit).
struct DispersionSample {
  double k = 0.0;
  double cL2 = 0.0;
  double cT2 = 0.0;
  double cN2 = 0.0;
};

DispersionSample dispersion_point(const DerivedCoeffs& co, double k);

// Acoustic tensor for an in-plane wavevector (embedded in R^3): eigenpairs are
// (khat, cL^2), (khat_perp, cT^2), (e3, cN^2).  Throws for the zero vector.
M3 acoustic_tensor(const DerivedCoeffs& co, const V2& kv);

// k^2 at which a gradient branch crosses its classical counterpart.
// Normal:        k^2 = 12 ls^2 / (h^2 (lk^2 - ls^2))
// Longitudinal:  k^2 = (lk^2 (1 + qt) - ls^2) / (ls^2 qt h^2/12)
// Both reduce to 12/h^2 and (12/h^2)(2 + (1/nu - 1)^2) under the default
// identification lk^2 = 2 ls^2.  Throws std::domain_error when the curves do
// not cross at a positive k.
double normal_crossing_k2(const DerivedCoeffs& co);
double longitudinal_crossing_k2(const DerivedCoeffs& co);

// n samples on [kmin, kmax], linear or logarithmic spacing.
std::vector<DispersionSample> dispersion_sweep(const DerivedCoeffs& co, double kmin,
                                               double kmax, int n, bool logspace);

}  // namespace gradplate

#endif
