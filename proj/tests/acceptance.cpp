// Release gate: each block re-derives one headline guarantee of the toolkit
// with independent oracles and prints a single PASS/FAIL line.  The exit code
// is the number of failed blocks, so the binary doubles as a ctest entry.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gradplate/dispersion.hpp"
#include "gradplate/ellipticity.hpp"
#include "gradplate/fracture.hpp"
#include "gradplate/kinematics.hpp"
#include "gradplate/lattice.hpp"
#include "gradplate/material.hpp"
#include "gradplate/motion.hpp"
#include "gradplate/reduction.hpp"
#include "gradplate/wavesim.hpp"

using namespace gradplate;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = static_cast<int>(x.size());
  for (int i = 0; i < n; ++i) {
    double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

const SpectralMode& find_mode(const WaveSimulation& sim, int k1, int k2) {
  for (const SpectralMode& m : sim.modes())
    if (m.k1 == k1 && m.k2 == k2) return m;
  throw std::logic_error("mode not on the lattice");
}

// dense-chain dispersion against its homogenized continuum: small gap,
// fourth-order closure, and the identified length split d^2/12
bool homogenization(std::string& detail) {
  Timer tm;
  ChainSpec spec;  // 256 particles, d = 0.1
  ShearCoeffs sc = shear_coeffs(spec);

  const int n = 24;
  std::vector<double> kd(n), gap(n);
  double max_gap = 0.0;
  for (int i = 0; i < n; ++i) {
    kd[i] = 0.2 * double(i + 1) / n;
    double k = kd[i] / spec.d;
    double wd = discrete_dispersion(spec, k);
    double wc = continuum_dispersion(sc, k);
    gap[i] = std::abs(wd - wc) / wd;
    max_gap = std::max(max_gap, gap[i]);
  }
  double slope = loglog_slope(kd, gap);

  auto [ls2_hat, lk2_hat] = identify_lengths(spec, kd);
  double target = spec.d * spec.d / 12.0;
  double split_err = std::abs((lk2_hat - ls2_hat) - target) / target;

  double el = tm.seconds();
  bool ok = max_gap <= 5e-5 && std::abs(slope - 4.0) <= 0.1 && split_err <= 0.01 && el < 10.0;
  detail = "max relative gap " + fmt(max_gap) + ", gap slope " + fmt(slope) +
           ", length split off by " + fmt(100 * split_err) + "% (" + fmt(el) + " s)";
  return ok;
}

// fiber integrals of the 3-D densities approach the midsurface energies at
// the advertised rates on the mixed stretch+bend family
bool thickness_reduction(std::string& detail) {
  Timer tm;
  MaterialSpec ms;
  ConvergenceReport rep =
      convergence_study(ms, MotionFamily::Mixed, {0.1, 0.05, 0.025, 0.0125});
  double el = tm.seconds();
  bool ok = rep.stored_slope >= 3.8 && rep.kinetic_slope >= 3.4 && rep.stored_monotone &&
            rep.kinetic_monotone && el < 30.0;
  detail = "stored slope " + fmt(rep.stored_slope) + ", kinetic slope " +
           fmt(rep.kinetic_slope) + " (" + fmt(el) + " s)";
  return ok;
}

// with the microstructure switched off the densities must equal the classical
// plate forms, written here directly in Lame moduli
bool classical_limits(std::string& detail) {
  Timer tm;
  std::mt19937_64 rng(408617ull);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  auto sym = [&] {
    M2 s;
    s(0, 0) = uni(rng);
    s(1, 1) = uni(rng);
    s(0, 1) = s(1, 0) = uni(rng);
    return s;
  };
  auto frob2 = [](const M2& s) {
    double r = 0.0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r += s(i, j) * s(i, j);
    return r;
  };

  double worst_stored = 0.0, worst_kinetic = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    MaterialSpec ms;
    ms.E = 0.5 + 1.25 * (uni(rng) + 1.0);
    ms.nu = 0.05 + 0.2 * (uni(rng) + 1.0);
    ms.rho_R = 0.5 + 0.75 * (uni(rng) + 1.0);
    ms.h = 0.05 + 0.125 * (uni(rng) + 1.0);
    ms.d = 0.0;
    DerivedCoeffs co = derive_coefficients(ms);
    Lame lm = lame_from_engineering(ms.E, ms.nu);

    StrainState st;
    st.E = sym();
    st.K = sym();
    st.Et = sym();
    for (int c = 0; c < 2; ++c) st.dE[c] = sym();
    for (int i = 0; i < 3; ++i) {
      st.yt[i] = uni(rng);
      st.nt[i] = uni(rng);
      st.ytg[0][i] = uni(rng);
      st.ytg[1][i] = uni(rng);
    }
    EnergyDensity en = energy_densities(st, co);

    double lmix = lm.lambda * lm.mu / (lm.lambda + 2.0 * lm.mu);
    double trE = st.E.trace(), trK = st.K.trace(), trEt = st.Et.trace();
    double koiter = ms.h * (lmix * trE * trE + lm.mu * frob2(st.E)) +
                    ms.h * ms.h * ms.h / 24.0 * (lmix * trK * trK + lm.mu * frob2(st.K));
    double r = lm.lambda / (lm.lambda + 2.0 * lm.mu);
    double khp = 0.5 * ms.h * ms.rho_R *
                 (dot(st.yt, st.yt) + ms.h * ms.h / 12.0 * r * r * trEt * trEt +
                  ms.h * ms.h / 12.0 * dot(st.nt, st.nt));

    worst_stored = std::max(worst_stored, std::abs(en.stored - koiter) / std::abs(koiter));
    worst_kinetic = std::max(worst_kinetic, std::abs(en.kinetic - khp) / std::abs(khp));
  }
  double el = tm.seconds();
  bool ok = worst_stored <= 1e-12 && worst_kinetic <= 1e-12;
  detail = "worst stored deviation " + fmt(worst_stored) + ", kinetic " + fmt(worst_kinetic) +
           " over 100 states (" + fmt(el) + " s)";
  return ok;
}

// the principal symbol is positive on random unit pairs when the stored
// length is on; switching it off leaves exactly the bending cone positive
bool ellipticity(std::string& detail) {
  Timer tm;
  DerivedCoeffs co_g = derive_coefficients(MaterialSpec{});
  MaterialSpec m0;
  m0.ell_s = 0.0;
  DerivedCoeffs co_0 = derive_coefficients(m0);

  SurfaceGeometry flat = strain_state(SurfaceMotion::identity(), 0.0, 0.0, 0.0).geo;
  SurfaceMotion bent;
  bent.modes.push_back({0, 1.0, 0.0, 0.06, 0.3, TimeLaw{}});
  bent.modes.push_back({1, 2.0, 1.0, 0.04, 1.1, TimeLaw{}});
  bent.modes.push_back({2, 1.0, 1.0, 0.08, 0.0, TimeLaw{}});
  SurfaceGeometry curved = strain_state(bent, 1.3, 2.1, 0.0).geo;

  std::mt19937_64 rng(0x9e3779b9ull);
  std::normal_distribution<double> nd;
  double min_pos = 1e300, max_tan = 0.0, min_norm = 1e300;
  const int samples = 10000;
  for (int i = 0; i < samples; ++i) {
    const SurfaceGeometry& geo = (i % 2) ? curved : flat;
    V2 a{nd(rng), nd(rng)};
    double na = std::sqrt(dot(a, a));
    if (na < 1e-8) {
      --i;
      continue;
    }
    a = (1.0 / na) * a;
    V3 b{nd(rng), nd(rng), nd(rng)};
    b = (1.0 / std::sqrt(dot(b, b))) * b;
    min_pos = std::min(min_pos, acoustic_contraction(geo, co_g, a, b));

    V3 bt = nd(rng) * geo.tangent[0] + nd(rng) * geo.tangent[1];
    double nt = std::sqrt(dot(bt, bt));
    if (nt > 1e-8) {
      bt = (1.0 / nt) * bt;
      max_tan = std::max(max_tan, std::abs(acoustic_contraction(geo, co_0, a, bt)));
    }
    min_norm = std::min(min_norm, acoustic_contraction(geo, co_0, a, geo.normal));
  }
  double el = tm.seconds();
  bool ok = min_pos > 0.0 && max_tan <= 1e-12 && min_norm > 0.0 && el < 5.0;
  detail = "min contraction " + fmt(min_pos) + "; zero-length tangent max " + fmt(max_tan) +
           ", normal min " + fmt(min_norm) + " (" + fmt(el) + " s)";
  return ok;
}

// acoustic tensor eigenvalues against the branch formulas, the long- and
// short-wave behaviour of the longitudinal branch, and the branch crossings
bool dispersion(std::string& detail) {
  Timer tm;
  MaterialSpec ms;
  DerivedCoeffs co = derive_coefficients(ms);
  DerivedCoeffs cl = classical_limit(ms);

  std::mt19937_64 rng(52103ull);
  std::uniform_real_distribution<double> uni(-60.0, 60.0);
  double worst_eig = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    V2 kv{uni(rng), uni(rng)};
    double k = std::sqrt(dot(kv, kv));
    if (k < 0.5) {
      --trial;
      continue;
    }
    M3 A = acoustic_tensor(co, kv);
    Eigen::Matrix3d M;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) M(i, j) = A(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(M);
    DispersionSample s = dispersion_point(co, k);
    std::vector<double> ref{s.cL2, s.cT2, s.cN2};
    std::sort(ref.begin(), ref.end());
    for (int i = 0; i < 3; ++i)
      worst_eig = std::max(worst_eig, std::abs(es.eigenvalues()[i] - ref[i]) / ref[i]);
  }

  // longitudinal branch: monotone approach to the short-wave limit
  double limit_est = dispersion_point(co, 1e8).cL2;
  double limit_err = std::abs(limit_est - 16.0 / 35.0) / (16.0 / 35.0);
  bool monotone = true, classical_falls = true;
  double prev = 1e300, prev_cl = 1e300, last_dev = 0.0, last_cl = 0.0;
  for (int i = 0; i <= 40; ++i) {
    double k = std::pow(10.0, 4.0 * i / 40.0);
    double dev = dispersion_point(co, k).cL2 - limit_est;
    if (!(dev > 0.0) || !(dev < prev)) monotone = false;
    prev = dev;
    last_dev = dev;
    double ccl = dispersion_point(cl, k).cL2;
    if (!(ccl < prev_cl)) classical_falls = false;
    prev_cl = ccl;
    last_cl = ccl;
  }

  double kN2 = 12.0 / (ms.h * ms.h);
  double q = 1.0 / ms.nu - 1.0;
  double kL2 = kN2 * (2.0 + q * q);
  double cross_err = std::max(std::abs(normal_crossing_k2(co) - kN2) / kN2,
                              std::abs(longitudinal_crossing_k2(co) - kL2) / kL2);

  double el = tm.seconds();
  bool ok = worst_eig <= 1e-14 && limit_err <= 1e-12 && monotone && last_dev < 1e-3 &&
            classical_falls && last_cl < 1e-3 && cross_err <= 1e-9;
  detail = "eigenvalue deviation " + fmt(worst_eig) + ", limit off by " + fmt(limit_err) +
           ", crossing off by " + fmt(cross_err) + " (" + fmt(el) + " s)";
  return ok;
}

// spectral propagator: measured speeds on the lattice, energy conservation
// over a thousand periods, and fourth-order time stepping
bool wave_simulation(std::string& detail) {
  Timer tm;
  DerivedCoeffs co = derive_coefficients(MaterialSpec{});

  DispersionSample s5 = dispersion_point(co, 5.0);
  double worst_speed = 0.0;
  const double c2s[3] = {s5.cL2, s5.cT2, s5.cN2};
  const char branches[3] = {'L', 'T', 'N'};
  for (int b = 0; b < 3; ++b) {
    double c = measure_phase_velocity(co, 3, 4, branches[b], false, nullptr, 64);
    worst_speed = std::max(worst_speed, std::abs(c - std::sqrt(c2s[b])) / std::sqrt(c2s[b]));
  }

  WaveSimulation sim(co, 64);
  sim.add_displacement(2, 1, 0, 0.5, 0.0);
  sim.add_velocity(2, 1, 0, 0.02, 1.1);
  sim.add_displacement(0, 2, 3, 0.3, 0.4);
  double E0 = sim.energy();
  const SpectralMode& md = find_mode(sim, 1, 0);
  double T = 2.0 * M_PI / std::sqrt(md.kappa[2] / md.mass[2]);
  for (int i = 0; i < 2000; ++i) sim.advance_exact(T / 2.0);
  double drift = std::abs(sim.energy() - E0) / E0;

  // non-integer period count so the leading phase error is not stationary
  double Tr;
  std::complex<double> ref[3];
  {
    WaveSimulation sr(co, 64);
    sr.add_displacement(0, 1, 0, 0.6, 0.2);
    const SpectralMode& m1 = find_mode(sr, 1, 0);
    Tr = 2.37 * 2.0 * M_PI / std::sqrt(m1.kappa[0] / m1.mass[0]);
    sr.advance_exact(Tr);
    auto got = sr.spectrum(1, 0);
    for (int c = 0; c < 3; ++c) ref[c] = got[c];
  }
  std::vector<double> hs, errs;
  for (int nsub : {512, 1024, 2048, 4096}) {
    WaveSimulation sr(co, 64);
    sr.add_displacement(0, 1, 0, 0.6, 0.2);
    sr.advance_rk4(Tr, nsub);
    auto got = sr.spectrum(1, 0);
    double e = 0.0;
    for (int c = 0; c < 3; ++c) e += std::abs(got[c] - ref[c]);
    hs.push_back(Tr / nsub);
    errs.push_back(e);
  }
  double slope = loglog_slope(hs, errs);

  double el = tm.seconds();
  bool ok = worst_speed <= 1e-10 && drift < 1e-10 && std::abs(slope - 4.0) <= 0.2 && el < 20.0;
  detail = "speed deviation " + fmt(worst_speed) + ", energy drift " + fmt(drift) +
           ", rk4 slope " + fmt(slope) + " (" + fmt(el) + " s)";
  return ok;
}

// the interior force linearizes to second order around the flat rest state
// for three independent direction fields
bool linearization(std::string& detail) {
  Timer tm;
  DerivedCoeffs co = derive_coefficients(MaterialSpec{});
  const std::vector<double> deltas{1e-2, 5e-3, 2.5e-3, 1.25e-3};

  SurfaceMotion u1 = SurfaceMotion::displacement();
  u1.modes.push_back({0, 1.0, 1.0, 1.0, 0.2, TimeLaw::parse("cos:1.1")});
  u1.modes.push_back({1, 2.0, 0.0, 0.7, 0.9, TimeLaw{}});
  u1.modes.push_back({2, 1.0, 2.0, 1.0, 0.0, TimeLaw::parse("sin:0.8")});

  SurfaceMotion u2 = SurfaceMotion::displacement();
  u2.modes.push_back({2, 1.0, 0.0, 1.0, 0.3, TimeLaw{}});
  u2.modes.push_back({2, 0.0, 1.0, 0.8, 1.7, TimeLaw::parse("cos:0.6")});

  SurfaceMotion u3 = SurfaceMotion::displacement();
  u3.modes.push_back({0, 1.0, 2.0, 0.9, 0.0, TimeLaw::parse("sin:1.3")});
  u3.modes.push_back({1, 1.0, 1.0, 1.1, 0.5, TimeLaw{}});

  double s1 = linearization_slope(u1, co, deltas, 0.7);
  double s2 = linearization_slope(u2, co, deltas, 0.3);
  double s3 = linearization_slope(u3, co, deltas, 1.1);

  double el = tm.seconds();
  bool ok = std::abs(s1 - 2.0) <= 0.1 && std::abs(s2 - 2.0) <= 0.1 &&
            std::abs(s3 - 2.0) <= 0.1;
  detail = "slopes " + fmt(s1) + ", " + fmt(s2) + ", " + fmt(s3) + " (" + fmt(el) + " s)";
  return ok;
}

// crack solver: transform identities, the square-root limit profile,
// basis-doubling stability, load linearity and tip sharpening
bool fracture(std::string& detail) {
  Timer tm;

  double worst_id = 0.0;
  for (double x : {-0.95, -0.6, -0.2, 0.1, 0.5, 0.9}) {
    auto g1 = [](double s) { return std::sqrt((1.0 - s) * (1.0 + s)); };
    auto g2 = [](double) { return 1.0; };
    auto g3 = [](double s) { return -s / std::sqrt((1.0 - s) * (1.0 + s)); };
    worst_id = std::max(worst_id, std::abs(finite_hilbert(g1, x) - x));
    worst_id = std::max(
        worst_id, std::abs(finite_hilbert(g2, x) - std::log((1.0 + x) / (1.0 - x)) / M_PI));
    worst_id = std::max(worst_id, std::abs(finite_hilbert(g3, x) - 1.0));
  }

  // the transform of the classical opening slope recovers the load; the
  // analytic slope is pinned to the library profile at an interior point
  double gamma_cl = 1.7;
  auto fp_cl = [&](double s) { return -gamma_cl * s / std::sqrt((1.0 - s) * (1.0 + s)); };
  double fd = (classical_reference(gamma_cl, 0.3 + 5e-7) -
               classical_reference(gamma_cl, 0.3 - 5e-7)) /
              1e-6;
  bool slope_consistent = std::abs(fd - fp_cl(0.3)) < 1e-6;
  double worst_cl = 0.0;
  for (double x : {-0.8, -0.3, 0.2, 0.7})
    worst_cl = std::max(worst_cl, std::abs(finite_hilbert(fp_cl, x) - gamma_cl));

  CrackConfig base;  // alpha 0.1, beta 1e-3, gamma 1, N 128
  CrackProfile p1 = solve_crack(base);
  CrackConfig dbl = base;
  dbl.N = 256;
  CrackProfile p2 = solve_crack(dbl);

  double dmax = 0.0;
  for (int i = 0; i <= 500; ++i) {
    double x = -1.0 + 2.0 * i / 500.0;
    dmax = std::max(dmax, std::abs(p1.eval(x) - p2.eval(x)));
  }

  bool norms_ok = true;
  double worst_norm_shift = 0.0;
  for (int d = 0; d <= 4; ++d) {
    double n1 = p1.sup_norm(d), n2 = p2.sup_norm(d);
    if (!std::isfinite(n1) || !std::isfinite(n2)) norms_ok = false;
    worst_norm_shift = std::max(worst_norm_shift, std::abs(n1 - n2) / n2);
  }

  CrackConfig scaled = base;
  scaled.gamma = 2.0;
  CrackProfile ps = solve_crack(scaled);
  double lin_err = 0.0;
  for (int i = 0; i <= 500; ++i) {
    double x = -1.0 + 2.0 * i / 500.0;
    lin_err = std::max(lin_err, std::abs(ps.eval(x) - 2.0 * p1.eval(x)));
  }
  lin_err /= ps.sup_norm(0);

  bool tips_rise = true;
  double prev_tip = 0.0;
  for (double beta : {1e-2, 5e-3, 2.5e-3, 1.25e-3}) {
    CrackConfig c = base;
    c.beta = beta;
    double tip = tip_diagnostics(solve_crack(c));
    if (!(tip > prev_tip)) tips_rise = false;
    prev_tip = tip;
  }

  double el = tm.seconds();
  bool ok = worst_id <= 1e-8 && slope_consistent && worst_cl <= 1e-8 * gamma_cl &&
            dmax < 1e-8 && norms_ok && worst_norm_shift <= 1e-3 && lin_err <= 1e-13 &&
            tips_rise && el < 60.0;
  detail = "identity error " + fmt(worst_id) + ", load recovery error " + fmt(worst_cl) +
           ", doubling shift " + fmt(dmax) + ", linearity " + fmt(lin_err) + " (" + fmt(el) +
           " s)";
  return ok;
}

}  // namespace

int main() {
  struct Block {
    const char* name;
    bool (*fn)(std::string&);
  };
  const Block blocks[] = {
      {"homogenization", homogenization},
      {"thickness reduction", thickness_reduction},
      {"classical limits", classical_limits},
      {"ellipticity", ellipticity},
      {"dispersion", dispersion},
      {"wave simulation", wave_simulation},
      {"linearization", linearization},
      {"fracture", fracture},
  };

  int failures = 0;
  for (const Block& b : blocks) {
    std::string detail;
    bool ok = false;
    try {
      ok = b.fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %s: %s\n", ok ? "PASS" : "FAIL", b.name, detail.c_str());
    if (!ok) ++failures;
  }
  std::printf("%d/8 criteria passed\n", 8 - failures);
  return failures;
}
