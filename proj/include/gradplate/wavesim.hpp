#ifndef GRADPLATE_WAVESIM_HPP
#define GRADPLATE_WAVESIM_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "gradplate/linalg.hpp"
#include "gradplate/material.hpp"

namespace gradplate {

// Spectral simulator for the flat-state linear dynamics on the periodic cell
// [0, 2pi)^2.  Displacements are expanded over the integer wavevector lattice
// in FFT layout; for each k != 0 the 3x3 modal system diagonalizes in the
// frame (khat, khat_perp, e3), so every mode is an independent oscillator
//   m xdd = -kappa x + f
// with branch masses and stiffnesses
//   longitudinal  m = rho_s (1 + (c qt + lk^2) k^2),  kappa = A (1 + ls^2 k^2) k^2
//   transverse    m = rho_s (1 + lk^2 k^2),           kappa = A (1-nu)/2 (1 + ls^2 k^2) k^2
//   normal        m = rho_s (1 + (c + lk^2) k^2),     kappa = B k^4
// (qt = (nu/(1-nu))^2).  The k = 0 mode is force-free rigid translation in
// the cartesian frame.  Two propagators: the exact closed form per mode, and
// RK4 time stepping for cross-validation.

// Modal mass and stiffness matrices in cartesian components (u1, u2, w):
//   M = rho_s [(1 + lk^2 k^2) I2 + c qt k (x) k]  (+)  rho_s (1 + (c + lk^2) k^2)
//   K = A (1 + ls^2 k^2) [(1+nu)/2 k (x) k + (1-nu)/2 k^2 I2]  (+)  B k^4
// Generalized eigenvalues of (K, M) are omega^2 = c_X^2 k^2 per branch.
M3 modal_mass(const DerivedCoeffs& co, const V2& kv);
M3 modal_stiffness(const DerivedCoeffs& co, const V2& kv);

struct SpectralMode {
  int k1 = 0, k2 = 0;           // integer wavevector (FFT layout)
  std::complex<double> x[3]{};  // displacement amplitudes, oscillator frame
  std::complex<double> v[3]{};  // velocity amplitudes
  std::complex<double> f[3]{};  // constant force amplitudes
  double mass[3] = {0, 0, 0};
  double kappa[3] = {0, 0, 0};  // zero at k = 0
};

class WaveSimulation {
 public:
  // N modes per axis; N must be even and >= 8.  Wavevector components lie in
  // (-N/2, N/2].
  WaveSimulation(const DerivedCoeffs& co, int N);

  int size() const { return N_; }
  double time() const { return time_; }
  const DerivedCoeffs& coefficients() const { return co_; }

  // Real cosine contributions amp * cos(k1 Y1 + k2 Y2 + phase) on cartesian
  // component comp (0 = u1, 1 = u2, 2 = w), added to the displacement,
  // velocity, or standing force field.  Conjugate symmetry is maintained, so
  // the represented fields stay real.
  void add_displacement(int comp, int k1, int k2, double amp, double phase);
  void add_velocity(int comp, int k1, int k2, double amp, double phase);
  void add_force(int comp, int k1, int k2, double amp, double phase);

  // Largest modal frequency on the lattice.
  double max_frequency() const;

  // Advance by dt: exact per-mode propagator, or nsub RK4 substeps.  RK4
  // requires (dt/nsub) * max_frequency <= 1, else std::invalid_argument.
  void advance_exact(double dt);
  void advance_rk4(double dt, int nsub);

  // Mechanical energy of the represented field over the cell,
  //   sum_k (2pi)^2/2 (v* M v + x* K x),
  // by compensated summation; constant along exact trajectories when no
  // force is set.  energy_with_forcing subtracts the forcing potential
  // Re(f* x) per mode and is the conserved quantity of the driven system.
  double energy() const;
  double energy_with_forcing() const;

  // Linear momentum of the field (rho_s times the cell-average velocity,
  // i.e. the zero mode), conserved under free evolution.
  V3 momentum() const;

  // Real-space fields by direct summation (tests and dumps).  The complex
  // variant exposes the roundoff-level imaginary part.
  V3 displacement(double Y1, double Y2) const;
  V3 velocity(double Y1, double Y2) const;
  Vec3<std::complex<double>> displacement_complex(double Y1, double Y2) const;

  // Cartesian spectral displacement amplitude at one lattice site.
  Vec3<std::complex<double>> spectrum(int k1, int k2) const;

  const std::vector<SpectralMode>& modes() const { return modes_; }

  // Oscillator-frame basis vectors (cartesian, real) at a lattice site.
  void frame_basis(int k1, int k2, V3 basis[3]) const;

 private:
  DerivedCoeffs co_;
  int N_;
  double time_ = 0.0;
  std::vector<SpectralMode> modes_;

  SpectralMode& mode_at(int k1, int k2);
  const SpectralMode& mode_at(int k1, int k2) const;
  void add_spectral(int what, int comp, int k1, int k2, std::complex<double> amp);
};

// Seeds a unit plane wave of the given branch ('L', 'T', 'N') at integer
// wavevector (k1, k2) != 0, evolves it, and fits the oscillation frequency
// from the sampled modal amplitude; returns omega / |k|.  If init_dir is
// given it must lie along the branch eigendirection to within 1e-10 of its
// norm (std::invalid_argument otherwise: branch mixing).  grid = 0 picks the
// smallest lattice containing the wavevector; a positive value is used as-is.
double measure_phase_velocity(const DerivedCoeffs& co, int k1, int k2, char branch,
                              bool use_rk4 = false, const V3* init_dir = nullptr,
                              int grid = 0);

}  // namespace gradplate

#endif
