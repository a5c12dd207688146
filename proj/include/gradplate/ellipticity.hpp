#ifndef GRADPLATE_ELLIPTICITY_HPP
#define GRADPLATE_ELLIPTICITY_HPP

#include "gradplate/kinematics.hpp"
#include "gradplate/linalg.hpp"
#include "gradplate/material.hpp"

namespace gradplate {

// Quadratic form of the principal (highest-derivative) part of the stored
// energy on a plane-wave perturbation b * exp(i a . Y) at the given surface
// configuration:
//   Q(a, b) = (A/2) ls^2 [ (1-nu) |a|^4 sum_g (b . y,g)^2
//                          + (1+nu) |a|^2 (sum_g a_g (b . y,g))^2 ]
//             + B |a|^4 (b . n)^2
// with A, B the membrane and bending coefficients.  Q is homogeneous of
// degree 4 in a and degree 2 in b.
double acoustic_contraction(const SurfaceGeometry& geo, const DerivedCoeffs& co, const V2& a,
                            const V3& b);

enum class EllipticityClass { StronglyElliptic, LegendreHadamardOnly, Indefinite };

const char* to_string(EllipticityClass cls);

struct EllipticityReport {
  EllipticityClass cls = EllipticityClass::Indefinite;
  double min_value = 0.0;  // min of Q over the sampled unit pairs (a, b)
  V2 min_a{1, 0};
  V3 min_b{0, 0, 1};
  double tangent_min = 0.0;  // min of Q with b restricted to the tangent plane
  int samples = 0;
  unsigned long long seed = 0;
};

// Sweeps unit wavevectors and unit directions (a deterministic low-discrepancy
// sequence derived from the seed, plus axis-aligned, tangent and normal
// specials) and classifies the form:
//   min > 0   strongly elliptic (holds at any immersion when ls > 0),
//   min = 0   Legendre-Hadamard only (ls = 0: tangent directions degenerate),
//   min < 0   indefinite.
EllipticityReport classify_ellipticity(const SurfaceGeometry& geo, const DerivedCoeffs& co,
                                       int samples = 512, unsigned long long seed = 1);

}  // namespace gradplate

#endif
