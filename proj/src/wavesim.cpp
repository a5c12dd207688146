#include "gradplate/wavesim.hpp"

#include <cmath>
#include <stdexcept>

#include "gradplate/numerics.hpp"

namespace gradplate {

namespace {
constexpr double kCell = 4.0 * M_PI * M_PI;  // area of [0, 2pi)^2

double qt_of(const DerivedCoeffs& co) {
  double r = co.nu / (1.0 - co.nu);
  return r * r;
}
}  // namespace

M3 modal_mass(const DerivedCoeffs& co, const V2& kv) {
  double k2 = kv.x * kv.x + kv.y * kv.y;
  double qt = qt_of(co);
  M3 M;
  double base = co.rho_s * (1.0 + co.ell_k2 * k2);
  M(0, 0) = base + co.rho_s * co.c * qt * kv.x * kv.x;
  M(0, 1) = co.rho_s * co.c * qt * kv.x * kv.y;
  M(1, 0) = M(0, 1);
  M(1, 1) = base + co.rho_s * co.c * qt * kv.y * kv.y;
  M(2, 2) = co.rho_s * (1.0 + (co.c + co.ell_k2) * k2);
  return M;
}

M3 modal_stiffness(const DerivedCoeffs& co, const V2& kv) {
  double k2 = kv.x * kv.x + kv.y * kv.y;
  double grad = co.a * (1.0 + co.ell_s2 * k2);
  M3 K;
  K(0, 0) = grad * (0.5 * (1.0 + co.nu) * kv.x * kv.x + 0.5 * (1.0 - co.nu) * k2);
  K(0, 1) = grad * 0.5 * (1.0 + co.nu) * kv.x * kv.y;
  K(1, 0) = K(0, 1);
  K(1, 1) = grad * (0.5 * (1.0 + co.nu) * kv.y * kv.y + 0.5 * (1.0 - co.nu) * k2);
  K(2, 2) = co.b * k2 * k2;
  return K;
}

WaveSimulation::WaveSimulation(const DerivedCoeffs& co, int N) : co_(co), N_(N) {
  if (N < 8 || N % 2 != 0)
    throw std::invalid_argument("WaveSimulation: grid size must be even and >= 8");
  modes_.resize(static_cast<std::size_t>(N) * N);
  double qt = qt_of(co_);
  for (int i1 = 0; i1 < N_; ++i1)
    for (int i2 = 0; i2 < N_; ++i2) {
      SpectralMode& md = modes_[static_cast<std::size_t>(i1) * N_ + i2];
      md.k1 = i1 <= N_ / 2 ? i1 : i1 - N_;
      md.k2 = i2 <= N_ / 2 ? i2 : i2 - N_;
      double k2 = static_cast<double>(md.k1) * md.k1 + static_cast<double>(md.k2) * md.k2;
      if (k2 == 0.0) {
        for (int j = 0; j < 3; ++j) {
          md.mass[j] = co_.rho_s;
          md.kappa[j] = 0.0;
        }
        continue;
      }
      double grad = co_.a * (1.0 + co_.ell_s2 * k2);
      md.mass[0] = co_.rho_s * (1.0 + (co_.c * qt + co_.ell_k2) * k2);
      md.kappa[0] = grad * k2;
      md.mass[1] = co_.rho_s * (1.0 + co_.ell_k2 * k2);
      md.kappa[1] = grad * 0.5 * (1.0 - co_.nu) * k2;
      md.mass[2] = co_.rho_s * (1.0 + (co_.c + co_.ell_k2) * k2);
      md.kappa[2] = co_.b * k2 * k2;
    }
}

SpectralMode& WaveSimulation::mode_at(int k1, int k2) {
  if (k1 <= -N_ / 2 || k1 > N_ / 2 || k2 <= -N_ / 2 || k2 > N_ / 2)
    throw std::invalid_argument("WaveSimulation: wavevector outside (-N/2, N/2]");
  int i1 = k1 >= 0 ? k1 : k1 + N_;
  int i2 = k2 >= 0 ? k2 : k2 + N_;
  return modes_[static_cast<std::size_t>(i1) * N_ + i2];
}

const SpectralMode& WaveSimulation::mode_at(int k1, int k2) const {
  return const_cast<WaveSimulation*>(this)->mode_at(k1, k2);
}

void WaveSimulation::frame_basis(int k1, int k2, V3 basis[3]) const {
  if (k1 == 0 && k2 == 0) {
    basis[0] = V3{1, 0, 0};
    basis[1] = V3{0, 1, 0};
    basis[2] = V3{0, 0, 1};
    return;
  }
  double k = std::sqrt(static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2);
  basis[0] = V3{k1 / k, k2 / k, 0.0};
  basis[1] = V3{-k2 / k, k1 / k, 0.0};
  basis[2] = V3{0, 0, 1};
}

void WaveSimulation::add_spectral(int what, int comp, int k1, int k2,
                                  std::complex<double> amp) {
  SpectralMode& md = mode_at(k1, k2);
  V3 basis[3];
  frame_basis(k1, k2, basis);
  for (int j = 0; j < 3; ++j) {
    std::complex<double> contrib = amp * basis[j][comp];
    if (what == 0)
      md.x[j] += contrib;
    else if (what == 1)
      md.v[j] += contrib;
    else
      md.f[j] += contrib;
  }
}

namespace {
int fold(int k, int N) { return k == N / 2 ? k : -k; }
}  // namespace

void WaveSimulation::add_displacement(int comp, int k1, int k2, double amp, double phase) {
  if (comp < 0 || comp > 2) throw std::invalid_argument("add_displacement: component in 0..2");
  std::complex<double> half = 0.5 * amp * std::complex<double>(std::cos(phase), std::sin(phase));
  add_spectral(0, comp, k1, k2, half);
  add_spectral(0, comp, fold(k1, N_), fold(k2, N_), std::conj(half));
}

void WaveSimulation::add_velocity(int comp, int k1, int k2, double amp, double phase) {
  if (comp < 0 || comp > 2) throw std::invalid_argument("add_velocity: component in 0..2");
  std::complex<double> half = 0.5 * amp * std::complex<double>(std::cos(phase), std::sin(phase));
  add_spectral(1, comp, k1, k2, half);
  add_spectral(1, comp, fold(k1, N_), fold(k2, N_), std::conj(half));
}

void WaveSimulation::add_force(int comp, int k1, int k2, double amp, double phase) {
  if (comp < 0 || comp > 2) throw std::invalid_argument("add_force: component in 0..2");
  std::complex<double> half = 0.5 * amp * std::complex<double>(std::cos(phase), std::sin(phase));
  add_spectral(2, comp, k1, k2, half);
  add_spectral(2, comp, fold(k1, N_), fold(k2, N_), std::conj(half));
}

double WaveSimulation::max_frequency() const {
  double w2 = 0.0;
  for (const SpectralMode& md : modes_)
    for (int j = 0; j < 3; ++j)
      if (md.kappa[j] > 0.0) w2 = std::max(w2, md.kappa[j] / md.mass[j]);
  return std::sqrt(w2);
}

void WaveSimulation::advance_exact(double dt) {
  for (SpectralMode& md : modes_) {
    for (int j = 0; j < 3; ++j) {
      if (md.kappa[j] > 0.0) {
        double w = std::sqrt(md.kappa[j] / md.mass[j]);
        std::complex<double> xp = md.f[j] / md.kappa[j];
        std::complex<double> dx = md.x[j] - xp;
        double cwt = std::cos(w * dt), swt = std::sin(w * dt);
        md.x[j] = xp + dx * cwt + (md.v[j] / w) * swt;
        md.v[j] = -w * dx * swt + md.v[j] * cwt;
      } else {
        std::complex<double> acc = md.f[j] / md.mass[j];
        md.x[j] += md.v[j] * dt + 0.5 * acc * dt * dt;
        md.v[j] += acc * dt;
      }
    }
  }
  time_ += dt;
}

void WaveSimulation::advance_rk4(double dt, int nsub) {
  if (nsub < 1) throw std::invalid_argument("advance_rk4: nsub must be >= 1");
  double h = dt / nsub;
  double wmax = max_frequency();
  if (h * wmax > 1.0 + 1e-12)
    throw std::invalid_argument("advance_rk4: step exceeds the stability bound 1/omega_max");
  for (SpectralMode& md : modes_) {
    for (int j = 0; j < 3; ++j) {
      std::complex<double> x = md.x[j], v = md.v[j];
      if (x == 0.0 && v == 0.0 && md.f[j] == 0.0) continue;
      double im = 1.0 / md.mass[j], ka = md.kappa[j];
      for (int s = 0; s < nsub; ++s) {
        std::complex<double> k1x = v;
        std::complex<double> k1v = (md.f[j] - ka * x) * im;
        std::complex<double> k2x = v + 0.5 * h * k1v;
        std::complex<double> k2v = (md.f[j] - ka * (x + 0.5 * h * k1x)) * im;
        std::complex<double> k3x = v + 0.5 * h * k2v;
        std::complex<double> k3v = (md.f[j] - ka * (x + 0.5 * h * k2x)) * im;
        std::complex<double> k4x = v + h * k3v;
        std::complex<double> k4v = (md.f[j] - ka * (x + h * k3x)) * im;
        x += (h / 6.0) * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
        v += (h / 6.0) * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
      }
      md.x[j] = x;
      md.v[j] = v;
    }
  }
  time_ += dt;
}

double WaveSimulation::energy() const {
  KahanSum s;
  for (const SpectralMode& md : modes_)
    for (int j = 0; j < 3; ++j)
      s.add(0.5 * kCell * (md.mass[j] * std::norm(md.v[j]) + md.kappa[j] * std::norm(md.x[j])));
  return s.value();
}

double WaveSimulation::energy_with_forcing() const {
  KahanSum s;
  for (const SpectralMode& md : modes_)
    for (int j = 0; j < 3; ++j) {
      s.add(0.5 * kCell * (md.mass[j] * std::norm(md.v[j]) + md.kappa[j] * std::norm(md.x[j])));
      s.add(-kCell * std::real(std::conj(md.f[j]) * md.x[j]));
    }
  return s.value();
}

V3 WaveSimulation::momentum() const {
  const SpectralMode& md = mode_at(0, 0);
  // cartesian frame at k = 0; amplitudes are real up to roundoff
  return V3{co_.rho_s * std::real(md.v[0]), co_.rho_s * std::real(md.v[1]),
            co_.rho_s * std::real(md.v[2])};
}

Vec3<std::complex<double>> WaveSimulation::displacement_complex(double Y1, double Y2) const {
  Vec3<std::complex<double>> out{};
  V3 basis[3];
  for (const SpectralMode& md : modes_) {
    double ph = md.k1 * Y1 + md.k2 * Y2;
    std::complex<double> e(std::cos(ph), std::sin(ph));
    frame_basis(md.k1, md.k2, basis);
    for (int j = 0; j < 3; ++j)
      for (int c = 0; c < 3; ++c) out[c] += md.x[j] * basis[j][c] * e;
  }
  return out;
}

V3 WaveSimulation::displacement(double Y1, double Y2) const {
  Vec3<std::complex<double>> z = displacement_complex(Y1, Y2);
  return V3{z.x.real(), z.y.real(), z.z.real()};
}

V3 WaveSimulation::velocity(double Y1, double Y2) const {
  Vec3<std::complex<double>> out{};
  V3 basis[3];
  for (const SpectralMode& md : modes_) {
    double ph = md.k1 * Y1 + md.k2 * Y2;
    std::complex<double> e(std::cos(ph), std::sin(ph));
    frame_basis(md.k1, md.k2, basis);
    for (int j = 0; j < 3; ++j)
      for (int c = 0; c < 3; ++c) out[c] += md.v[j] * basis[j][c] * e;
  }
  return V3{out.x.real(), out.y.real(), out.z.real()};
}

Vec3<std::complex<double>> WaveSimulation::spectrum(int k1, int k2) const {
  const SpectralMode& md = mode_at(k1, k2);
  V3 basis[3];
  frame_basis(k1, k2, basis);
  Vec3<std::complex<double>> out{};
  for (int j = 0; j < 3; ++j)
    for (int c = 0; c < 3; ++c) out[c] += md.x[j] * basis[j][c];
  return out;
}

double measure_phase_velocity(const DerivedCoeffs& co, int k1, int k2, char branch,
                              bool use_rk4, const V3* init_dir, int grid) {
  if (k1 == 0 && k2 == 0)
    throw std::invalid_argument("measure_phase_velocity: zero wavevector has no phase speed");
  int jb;
  switch (branch) {
    case 'L': jb = 0; break;
    case 'T': jb = 1; break;
    case 'N': jb = 2; break;
    default: throw std::invalid_argument("measure_phase_velocity: branch must be L, T or N");
  }
  int kmax = std::max(std::abs(k1), std::abs(k2));
  int N = grid > 0 ? grid : std::max(8, 2 * kmax + 2);
  if (N % 2 != 0) ++N;
  WaveSimulation sim(co, N);
  V3 basis[3];
  sim.frame_basis(k1, k2, basis);

  V3 dir = basis[jb];
  if (init_dir) {
    double nrm = norm(*init_dir);
    if (!(nrm > 0.0)) throw std::invalid_argument("measure_phase_velocity: zero direction");
    double along = dot(*init_dir, basis[jb]);
    V3 rest = *init_dir - along * basis[jb];
    if (norm(rest) > 1e-10 * nrm)
      throw std::invalid_argument(
          "measure_phase_velocity: initial data mixes branches at this wavevector");
    dir = (1.0 / nrm) * (*init_dir);
  }
  for (int c = 0; c < 3; ++c)
    if (dir[c] != 0.0) sim.add_displacement(c, k1, k2, dir[c], 0.0);

  // sampling window from the branch frequency; the measurement itself comes
  // from the evolved time series alone
  double k2sq = static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2;
  double qt = qt_of(co);
  double m, ka;
  double grad = co.a * (1.0 + co.ell_s2 * k2sq);
  if (jb == 0) {
    m = co.rho_s * (1.0 + (co.c * qt + co.ell_k2) * k2sq);
    ka = grad * k2sq;
  } else if (jb == 1) {
    m = co.rho_s * (1.0 + co.ell_k2 * k2sq);
    ka = grad * 0.5 * (1.0 - co.nu) * k2sq;
  } else {
    m = co.rho_s * (1.0 + (co.c + co.ell_k2) * k2sq);
    ka = co.b * k2sq * k2sq;
  }
  double w0 = std::sqrt(ka / m);
  double dts = (2.0 * M_PI / w0) / 24.0;
  int nsub = std::max(1, static_cast<int>(std::ceil(dts * sim.max_frequency() * 2.0)));
  const int nsamp = 256;
  std::vector<double> series;
  series.reserve(nsamp);
  for (int i = 0; i < nsamp; ++i) {
    Vec3<std::complex<double>> sp = sim.spectrum(k1, k2);
    std::complex<double> xb = 0.0;
    for (int c = 0; c < 3; ++c) xb += sp[c] * basis[jb][c];
    series.push_back(xb.real());
    if (use_rk4)
      sim.advance_rk4(dts, nsub);
    else
      sim.advance_exact(dts);
  }
  double w = fit_harmonic_frequency(series, dts);
  return w / std::sqrt(k2sq);
}

}  // namespace gradplate
