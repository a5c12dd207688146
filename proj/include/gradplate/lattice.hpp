#ifndef GRADPLATE_LATTICE_HPP
#define GRADPLATE_LATTICE_HPP

#include <utility>
#include <vector>

namespace gradplate {

// Periodic nearest-neighbor Hookean chain: N_p particles of mass M at
// spacing d, coupled by springs of constant k_d.  Its long-wave shear speed
// is c_T^2 = k_d d^2 / M.
struct ChainSpec {
  int N_p = 256;
  double d = 0.1;
  double M = 1.0;
  double k_d = 100.0;
};

// Throws std::invalid_argument unless N_p is even and >= 8 and d, M, k_d > 0.
void validate(const ChainSpec& spec);

double shear_speed2(const ChainSpec& spec);   // k_d d^2 / M
double chain_max_frequency(const ChainSpec& spec);  // 2 sqrt(k_d / M)

struct ChainState {
  std::vector<double> u;  // displacements
  std::vector<double> v;  // velocities
  double time = 0.0;
};

ChainState zero_state(const ChainSpec& spec);

// Velocity-Verlet integration of M u''_m = k_d (u_{m+1} + u_{m-1} - 2 u_m)
// with periodic indices.  Requires dt < 2/omega_max (the linear stability
// bound), else std::invalid_argument.  Symplectic: energy drift stays
// bounded, momentum is conserved to roundoff.
void step_verlet(const ChainSpec& spec, ChainState& state, double dt, int n_steps);

double chain_energy(const ChainSpec& spec, const ChainState& state);
double chain_momentum(const ChainSpec& spec, const ChainState& state);

// Plane-wave frequency of the discrete chain, omega^2 = (4 k_d/M) sin^2(kd/2).
double discrete_dispersion(const ChainSpec& spec, double k);

// One-dimensional shear coefficients of the gradient continuum.
struct ShearCoeffs {
  double cT2 = 0.0;
  double ell_s2 = 0.0;
  double ell_k2 = 0.0;
};

// The microstructure values matched to a chain of spacing d.
ShearCoeffs shear_coeffs(const ChainSpec& spec);

// omega^2 = cT2 k^2 (1 + ell_s2 k^2) / (1 + ell_k2 k^2).
double continuum_dispersion(const ShearCoeffs& co, double k);

// Length-scale identification from dispersion data (k_i, omega2_i).  The
// dispersion relation determines only the difference ell_k^2 - ell_s^2, so
// ell_s^2 is pinned to d^2/12 and the difference is fitted by linear least
// squares; returns (ell_s2_hat, ell_k2_hat).  Throws std::invalid_argument
// for fewer than 2 points or a grid with max k d < 0.01 (ill-conditioned).
std::pair<double, double> identify_lengths_from_data(
    double d, double cT2, const std::vector<std::pair<double, double>>& data);

// Same fit against the chain's own discrete dispersion sampled at the given
// kd values, each required to lie in (0, 0.3].
std::pair<double, double> identify_lengths(const ChainSpec& spec,
                                           const std::vector<double>& kd_grid);

}  // namespace gradplate

#endif
