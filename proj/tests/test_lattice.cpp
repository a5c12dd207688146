#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gradplate/lattice.hpp"
#include "gradplate/numerics.hpp"

using namespace gradplate;
using doctest::Approx;

namespace {
ChainSpec default_chain() { return ChainSpec{256, 0.1, 1.0, 100.0}; }
}  // namespace

TEST_CASE("chain spec validation and derived scalars") {
  ChainSpec ok = default_chain();
  validate(ok);
  CHECK(shear_speed2(ok) == Approx(1.0).epsilon(1e-15));
  CHECK(chain_max_frequency(ok) == Approx(20.0).epsilon(1e-15));

  ChainSpec bad = ok;
  bad.N_p = 7;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad.N_p = 6;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = ok;
  bad.d = 0.0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = ok;
  bad.M = -1.0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = ok;
  bad.k_d = 0.0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);

  ChainState st = zero_state(ok);
  CHECK(st.u.size() == 256);
  CHECK(st.v.size() == 256);
  CHECK(chain_energy(ok, st) == 0.0);
  CHECK(chain_momentum(ok, st) == 0.0);
}

TEST_CASE("discrete and continuum dispersion closed forms") {
  ChainSpec spec = default_chain();

  // zone boundary and long-wave limit
  CHECK(discrete_dispersion(spec, M_PI / spec.d) == Approx(4.0 * spec.k_d / spec.M).epsilon(1e-14));
  double k_small = 1e-6;
  CHECK(discrete_dispersion(spec, k_small) / (k_small * k_small) ==
        Approx(shear_speed2(spec)).epsilon(1e-10));

  ShearCoeffs co = shear_coeffs(spec);
  CHECK(co.cT2 == Approx(1.0).epsilon(1e-15));
  CHECK(co.ell_s2 == Approx(spec.d * spec.d / 12.0).epsilon(1e-15));
  CHECK(co.ell_k2 == Approx(spec.d * spec.d / 6.0).epsilon(1e-15));
  CHECK(continuum_dispersion(co, k_small) / (k_small * k_small) ==
        Approx(co.cT2).epsilon(1e-10));

  // pinned ratios at kd = 0.1 (k = 1 for d = 0.1)
  double k = 0.1 / spec.d;
  double ratio_d = discrete_dispersion(spec, k) / (co.cT2 * k * k);
  double ratio_c = continuum_dispersion(co, k) / (co.cT2 * k * k);
  CHECK(ratio_d == Approx(0.99916694).epsilon(1e-8));
  CHECK(ratio_c == Approx(0.99916805).epsilon(1e-8));
}

TEST_CASE("dispersion gap is quartic in kd and small through kd = 0.2") {
  ChainSpec spec = default_chain();
  ShearCoeffs co = shear_coeffs(spec);

  std::vector<double> kds{0.05, 0.1, 0.2};
  std::vector<double> gaps;
  for (double kd : kds) {
    double k = kd / spec.d;
    double wd = discrete_dispersion(spec, k);
    double wc = continuum_dispersion(co, k);
    gaps.push_back(std::abs(wd - wc) / wd);
  }
  CHECK(gaps[1] == Approx(1.1e-6).epsilon(0.03));
  double slope = loglog_slope(kds, gaps);
  CHECK(std::abs(slope - 4.0) <= 0.1);

  // leading coefficient of the gap is (kd)^4 / 90
  CHECK(gaps[0] == Approx(std::pow(0.05, 4) / 90.0).epsilon(2e-3));

  double worst = 0.0;
  for (int i = 1; i <= 50; ++i) {
    double kd = 0.2 * i / 50.0;
    double k = kd / spec.d;
    double wd = discrete_dispersion(spec, k);
    double wc = continuum_dispersion(co, k);
    worst = std::max(worst, std::abs(wd - wc) / wd);
  }
  CHECK(worst <= 5e-5);
}

TEST_CASE("verlet: trivial states, stability guard, argument checks") {
  ChainSpec spec = default_chain();
  ChainState st = zero_state(spec);

  step_verlet(spec, st, 0.01, 100);
  CHECK(chain_energy(spec, st) == 0.0);
  CHECK(st.time == Approx(1.0).epsilon(1e-12));

  // uniform translation: forces vanish identically, velocities untouched
  ChainState tr = zero_state(spec);
  for (int m = 0; m < spec.N_p; ++m) {
    tr.u[m] = 0.7;
    tr.v[m] = 0.3;
  }
  step_verlet(spec, tr, 0.01, 50);
  for (int m = 0; m < spec.N_p; ++m) {
    CHECK(tr.v[m] == 0.3);
    CHECK(tr.u[m] == Approx(0.7 + 0.3 * 0.5).epsilon(1e-12));
  }

  double dt_unstable = 2.0 / chain_max_frequency(spec);
  CHECK_THROWS_AS(step_verlet(spec, st, dt_unstable, 1), std::invalid_argument);
  CHECK_THROWS_AS(step_verlet(spec, st, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(step_verlet(spec, st, 0.01, -1), std::invalid_argument);
  ChainState shortst;
  shortst.u.assign(8, 0.0);
  shortst.v.assign(8, 0.0);
  CHECK_THROWS_AS(step_verlet(spec, shortst, 0.01, 1), std::invalid_argument);
}

TEST_CASE("standing wave oscillates at the discrete dispersion frequency") {
  ChainSpec spec = default_chain();
  ChainState st = zero_state(spec);
  for (int m = 0; m < spec.N_p; ++m) st.u[m] = std::sin(2.0 * M_PI * m / spec.N_p);

  double k = 2.0 * M_PI / (spec.N_p * spec.d);
  double w = std::sqrt(discrete_dispersion(spec, k));
  double T = 2.0 * M_PI / w;

  double dt = 0.01;
  int per_sample = 10;
  int n_samples = static_cast<int>(20.0 * T / (dt * per_sample));
  std::vector<double> series;
  series.reserve(n_samples);
  for (int i = 0; i < n_samples; ++i) {
    series.push_back(st.u[spec.N_p / 4]);
    step_verlet(spec, st, dt, per_sample);
  }
  double w_fit = fit_harmonic_frequency(series, dt * per_sample);
  CHECK(w_fit == Approx(w).epsilon(1e-6));
}

TEST_CASE("verlet conserves energy and momentum over long runs") {
  ChainSpec spec = default_chain();
  ChainState st = zero_state(spec);
  for (int m = 0; m < spec.N_p; ++m) {
    st.u[m] = std::sin(2.0 * M_PI * m / spec.N_p);
    st.v[m] = 0.1 + 0.05 * std::cos(2.0 * M_PI * m / spec.N_p);
  }
  double E0 = chain_energy(spec, st);
  double p0 = chain_momentum(spec, st);
  REQUIRE(E0 > 0.0);

  double dt = 0.1 / chain_max_frequency(spec);
  step_verlet(spec, st, dt, 10000);

  CHECK(std::abs(chain_energy(spec, st) - E0) / E0 < 1e-6);
  CHECK(std::abs(chain_momentum(spec, st) - p0) < 1e-10 * spec.N_p);
}

TEST_CASE("length identification from dispersion data") {
  ChainSpec spec = default_chain();
  double s = spec.d * spec.d / 12.0;

  // synthetic continuum data reproduces the generating difference exactly
  ShearCoeffs co = shear_coeffs(spec);
  std::vector<std::pair<double, double>> synth;
  for (int i = 1; i <= 20; ++i) {
    double k = (0.2 * i / 20.0) / spec.d;
    synth.emplace_back(k, continuum_dispersion(co, k));
  }
  auto [ss, sk] = identify_lengths_from_data(spec.d, co.cT2, synth);
  CHECK(ss == Approx(s).epsilon(1e-15));
  CHECK(sk - ss == Approx(co.ell_k2 - co.ell_s2).epsilon(1e-10));

  // discrete data through kd = 0.2: difference within 1% of d^2/12
  std::vector<double> grid;
  for (int i = 1; i <= 20; ++i) grid.push_back(0.2 * i / 20.0);
  auto [ds, dk] = identify_lengths(spec, grid);
  CHECK(ds == Approx(s).epsilon(1e-15));
  CHECK(std::abs((dk - ds) - s) <= 0.01 * s);

  // halving d quarters the identified difference (same kd grid)
  ChainSpec half = spec;
  half.d = spec.d / 2.0;
  auto [hs, hk] = identify_lengths(half, grid);
  CHECK((dk - ds) / (hk - hs) == Approx(4.0).epsilon(1e-10));

  // ill-conditioning and domain guards
  CHECK_THROWS_AS(identify_lengths(spec, {0.1}), std::invalid_argument);
  CHECK_THROWS_AS(identify_lengths(spec, std::vector<double>{0.004, 0.008}),
                  std::invalid_argument);
  CHECK_THROWS_AS(identify_lengths(spec, {0.1, 0.31}), std::invalid_argument);
  CHECK_THROWS_AS(identify_lengths(spec, {-0.1, 0.2}), std::invalid_argument);
  CHECK_THROWS_AS(identify_lengths_from_data(0.0, 1.0, synth), std::invalid_argument);
  CHECK_THROWS_AS(identify_lengths_from_data(0.1, -1.0, synth), std::invalid_argument);
}
