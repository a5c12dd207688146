#include "gradplate/lattice.hpp"

#include <cmath>
#include <stdexcept>

#include "gradplate/numerics.hpp"

namespace gradplate {

void validate(const ChainSpec& spec) {
  if (spec.N_p < 8 || spec.N_p % 2 != 0)
    throw std::invalid_argument("ChainSpec: particle count must be even and >= 8");
  if (!(spec.d > 0.0) || !(spec.M > 0.0) || !(spec.k_d > 0.0))
    throw std::invalid_argument("ChainSpec: d, M, k_d must be positive");
}

double shear_speed2(const ChainSpec& spec) { return spec.k_d * spec.d * spec.d / spec.M; }

double chain_max_frequency(const ChainSpec& spec) { return 2.0 * std::sqrt(spec.k_d / spec.M); }

ChainState zero_state(const ChainSpec& spec) {
  validate(spec);
  ChainState st;
  st.u.assign(spec.N_p, 0.0);
  st.v.assign(spec.N_p, 0.0);
  return st;
}

namespace {
void accelerations(const ChainSpec& spec, const std::vector<double>& u, std::vector<double>& a) {
  int n = spec.N_p;
  double s = spec.k_d / spec.M;
  for (int m = 0; m < n; ++m) {
    int mp = m + 1 == n ? 0 : m + 1;
    int mm = m == 0 ? n - 1 : m - 1;
    a[m] = s * (u[mp] + u[mm] - 2.0 * u[m]);
  }
}
}  // namespace

void step_verlet(const ChainSpec& spec, ChainState& state, double dt, int n_steps) {
  validate(spec);
  if (state.u.size() != static_cast<std::size_t>(spec.N_p) || state.v.size() != state.u.size())
    throw std::invalid_argument("step_verlet: state size does not match the chain");
  if (n_steps < 0) throw std::invalid_argument("step_verlet: negative step count");
  if (!(dt > 0.0) || dt >= 2.0 / chain_max_frequency(spec))
    throw std::invalid_argument("step_verlet: time step is outside the stability bound");

  std::vector<double> a(spec.N_p);
  accelerations(spec, state.u, a);
  for (int s = 0; s < n_steps; ++s) {
    for (int m = 0; m < spec.N_p; ++m) {
      state.v[m] += 0.5 * dt * a[m];
      state.u[m] += dt * state.v[m];
    }
    accelerations(spec, state.u, a);
    for (int m = 0; m < spec.N_p; ++m) state.v[m] += 0.5 * dt * a[m];
  }
  state.time += n_steps * dt;
}

double chain_energy(const ChainSpec& spec, const ChainState& state) {
  KahanSum s;
  int n = spec.N_p;
  for (int m = 0; m < n; ++m) {
    int mp = m + 1 == n ? 0 : m + 1;
    double stretch = state.u[mp] - state.u[m];
    s.add(0.5 * spec.M * state.v[m] * state.v[m]);
    s.add(0.5 * spec.k_d * stretch * stretch);
  }
  return s.value();
}

double chain_momentum(const ChainSpec& spec, const ChainState& state) {
  KahanSum s;
  for (double vm : state.v) s.add(spec.M * vm);
  return s.value();
}

double discrete_dispersion(const ChainSpec& spec, double k) {
  double sn = std::sin(0.5 * k * spec.d);
  return 4.0 * spec.k_d / spec.M * sn * sn;
}

ShearCoeffs shear_coeffs(const ChainSpec& spec) {
  return {shear_speed2(spec), spec.d * spec.d / 12.0, spec.d * spec.d / 6.0};
}

double continuum_dispersion(const ShearCoeffs& co, double k) {
  double k2 = k * k;
  return co.cT2 * k2 * (1.0 + co.ell_s2 * k2) / (1.0 + co.ell_k2 * k2);
}

std::pair<double, double> identify_lengths_from_data(
    double d, double cT2, const std::vector<std::pair<double, double>>& data) {
  if (!(d > 0.0) || !(cT2 > 0.0))
    throw std::invalid_argument("identify_lengths: d and cT2 must be positive");
  if (data.size() < 2)
    throw std::invalid_argument("identify_lengths: need at least 2 dispersion samples");
  double kd_max = 0.0;
  for (auto& p : data) {
    if (!(p.first > 0.0)) throw std::invalid_argument("identify_lengths: wavenumbers must be positive");
    kd_max = std::max(kd_max, p.first * d);
  }
  if (kd_max < 0.01)
    throw std::invalid_argument("identify_lengths: grid too narrow, fit is ill-conditioned");

  // model y = (1 + s k^2)/(1 + (s + D) k^2) with s = d^2/12 pinned; rearrange
  // to D * (y k^2) = (1 - y)(1 + s k^2), a linear least-squares problem in D
  double s = d * d / 12.0;
  double num = 0.0, den = 0.0;
  for (auto& p : data) {
    double k2 = p.first * p.first;
    double y = p.second / (cT2 * k2);
    num += y * k2 * (1.0 + s * k2) * (1.0 - y);
    den += y * y * k2 * k2;
  }
  if (!(den > 0.0)) throw std::invalid_argument("identify_lengths: degenerate data");
  double delta = num / den;
  return {s, s + delta};
}

std::pair<double, double> identify_lengths(const ChainSpec& spec,
                                           const std::vector<double>& kd_grid) {
  validate(spec);
  std::vector<std::pair<double, double>> data;
  data.reserve(kd_grid.size());
  for (double kd : kd_grid) {
    if (!(kd > 0.0) || kd > 0.3)
      throw std::invalid_argument("identify_lengths: kd samples must lie in (0, 0.3]");
    double k = kd / spec.d;
    data.emplace_back(k, discrete_dispersion(spec, k));
  }
  return identify_lengths_from_data(spec.d, shear_speed2(spec), data);
}

}  // namespace gradplate
