#ifndef GRADPLATE_KINEMATICS_HPP
#define GRADPLATE_KINEMATICS_HPP

#include <vector>

#include "gradplate/linalg.hpp"
#include "gradplate/material.hpp"
#include "gradplate/motion.hpp"

namespace gradplate {

// First-order surface data at one (Y, t).
struct SurfaceGeometry {
  V3 tangent[2];        // y,1  y,2
  M2 metric;            // g_ab = y,a . y,b
  M2 metric_inv;
  double area = 0.0;    // |y,1 x y,2|
  V3 normal;            // unit
  double christoffel[2][2][2] = {};  // gamma^n_ab = g^nr (y,ab . y,r)
};

// Measures of strain and their rates; E uses the half-difference convention
// E_ab = (y,a . y,b - delta_ab)/2.
struct StrainState {
  M2 E;
  M2 dE[2];    // dE[c](a,b) = d_c E_ab
  M2 K;        // K_ab = n . y,ab
  M2 Et;       // d_t E
  V3 yt;       // d_t y
  V3 ytg[2];   // d_a d_t y
  V3 nt;       // d_t n
  SurfaceGeometry geo;
};

// Throws std::invalid_argument when the point is not an immersion
// (|y,1 x y,2| below a fixed tolerance).
StrainState strain_state(const SurfaceMotion& m, double Y1, double Y2, double t);

struct EnergyDensity {
  double stored = 0.0;
  double kinetic = 0.0;
};

// Midsurface energy densities
//   U = a/2 [nu (tr E)^2 + (1-nu)|E|^2
//            + ell_s^2 sum_c (nu (tr d_c E)^2 + (1-nu)|d_c E|^2)]
//     + b/2 [nu (tr K)^2 + (1-nu)|K|^2]
//   K = rho_s/2 [|d_t y|^2 + (nu/(1-nu))^2 c |tr d_t E|^2 + c |d_t n|^2
//                + ell_k^2 |grad d_t y|^2]
EnergyDensity energy_densities(const StrainState& st, const DerivedCoeffs& co);

// Stress vectors of the midsurface model; see stress_eval in the source for
// the index conventions.
struct StressVectors {
  V3 T[2];        // membrane + strain-gradient + bending tractions
  V3 M[2][2];     // double stress, symmetric in its indices
  V3 Pi[2];       // kinetic flux
};

StressVectors stress_vectors(const SurfaceMotion& m, const DerivedCoeffs& co, double Y1,
                             double Y2, double t);

// Divergence-form interior force d_a P^a with P^a = T^a - d_b M^ab + d_t Pi^a,
// evaluated exactly via jet propagation of the closed-form motion.
V3 stress_divergence(const SurfaceMotion& m, const DerivedCoeffs& co, double Y1, double Y2,
                     double t);

// Small-displacement operator applied to a direction field u (a displacement
// motion, zero base map): the linearization of d_a P^a at the flat rest state.
V3 linearized_divergence(const SurfaceMotion& u, const DerivedCoeffs& co, double Y1, double Y2,
                         double t);

// Richardson consistency check: slope of || d_a P^a(id + delta u) -
// delta L[u] || against delta over the given list (max norm over a sample
// grid).  Expected slope 2 for smooth direction fields.
double linearization_slope(const SurfaceMotion& u, const DerivedCoeffs& co,
                           const std::vector<double>& deltas, double t);

}  // namespace gradplate

#endif
