#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "gradplate/kinematics.hpp"
#include "gradplate/material.hpp"
#include "gradplate/motion.hpp"
#include "gradplate/reduction.hpp"

using namespace gradplate;
using doctest::Approx;

namespace {

Lame default_lame() { return lame_from_engineering(1.0, 0.25); }  // lambda = mu = 0.4

// Small random motion that keeps the surface embedded and the thickness
// stretch well defined.
SurfaceMotion random_motion(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::uniform_int_distribution<int> comp(0, 2);
  std::uniform_int_distribution<int> wave(-2, 2);
  SurfaceMotion m = SurfaceMotion::identity();
  for (int q = 0; q < 3; ++q) {
    Mode mo;
    mo.comp = comp(rng);
    mo.m1 = wave(rng);
    mo.m2 = wave(rng);
    mo.amp = 0.03 * u01(rng);
    mo.phase = 6.28 * u01(rng);
    mo.law.p0 = 0.5 + 0.5 * u01(rng);
    mo.law.omega = 2.0 * u01(rng);
    mo.law.phase = 6.28 * u01(rng);
    m.modes.push_back(mo);
  }
  return m;
}

}  // namespace

TEST_CASE("director: rest, uniform stretch, isometric bend, collapse") {
  Lame lm = default_lame();

  Director rest = director(lm, SurfaceMotion::identity(), 0.3, 0.8, 0.0);
  CHECK(rest.phi == Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(rest.d.x) < 1e-15);
  CHECK(std::abs(rest.d.y) < 1e-15);
  CHECK(rest.d.z == Approx(1.0).epsilon(1e-15));

  // biaxial stretch with tr E = 0.02; phi = sqrt(1 - (2/3) 0.02)
  Director st = director(lm, SurfaceMotion::uniform_stretch(std::sqrt(1.02)), 1.0, 2.0, 0.0);
  CHECK(st.phi == Approx(0.993311).epsilon(1e-6));
  CHECK(st.d.z == Approx(st.phi).epsilon(1e-14));

  // bending a flat sheet onto a cylinder is isometric: phi stays 1
  Director bend = director(lm, SurfaceMotion::cylindrical_bend(10.0), 0.7, 1.3, 0.0);
  CHECK(bend.phi == Approx(1.0).epsilon(1e-13));
  CHECK(norm(bend.d) == Approx(1.0).epsilon(1e-13));

  // tr E = 1.6 pushes the radicand negative
  CHECK_THROWS_AS(director(lm, SurfaceMotion::uniform_stretch(std::sqrt(2.6)), 0.0, 0.0, 0.0),
                  std::domain_error);
}

TEST_CASE("corrector: flat states give g = 0, bent cylinder the normal push") {
  Lame lm = default_lame();

  Corrector rest = corrector(lm, SurfaceMotion::identity(), 0.2, 0.5, 0.0);
  CHECK(std::abs(rest.g.x) < 1e-15);
  CHECK(std::abs(rest.g.y) < 1e-15);
  CHECK(std::abs(rest.g.z) < 1e-15);
  // A at rest has eigenvalues (mu, mu, lambda + 2 mu)
  CHECK(rest.cond == Approx((lm.lambda + 2.0 * lm.mu) / lm.mu).epsilon(1e-12));

  Corrector st = corrector(lm, SurfaceMotion::uniform_stretch(std::sqrt(1.02)), 1.0, 2.0, 0.0);
  CHECK(norm(st.g) < 1e-15);

  // cylinder of radius R: g = lambda/((lambda+2mu) R) n, so |g| = 1/30 here
  double R = 10.0;
  Director dir = director(lm, SurfaceMotion::cylindrical_bend(R), 0.7, 1.3, 0.0);
  Corrector co = corrector(lm, SurfaceMotion::cylindrical_bend(R), 0.7, 1.3, 0.0);
  CHECK(norm(co.g) == Approx(lm.lambda / ((lm.lambda + 2.0 * lm.mu) * R)).epsilon(1e-12));
  CHECK(norm(cross(co.g, dir.d)) < 1e-14);
  CHECK(co.cond == Approx(3.0).epsilon(1e-10));
}

TEST_CASE("reconstruction strain identities hold to roundoff") {
  Lame lm = default_lame();

  // the four Z=0 identities are algebraic consequences of the director and
  // corrector choice, independent of the motion amplitude
  std::mt19937_64 rng(911820250817ull);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    SurfaceMotion m = random_motion(rng);
    double Y1 = 6.28 * u01(rng), Y2 = 6.28 * u01(rng), t = 2.0 * u01(rng);
    StrainResiduals r = strain_residuals(lm, m, Y1, Y2, t);
    for (int a = 0; a < 2; ++a) {
      CHECK(std::abs(r.Ea3[a]) < 1e-10);
      CHECK(std::abs(r.dZEa3[a]) < 1e-10);
    }
    CHECK(std::abs(r.E33) < 1e-10);
    CHECK(std::abs(r.dZE33) < 1e-10);
  }

  SurfaceMotion cyl = SurfaceMotion::cylindrical_bend(10.0);
  for (double Y1 : {0.3, 1.9, 4.4}) {
    StrainResiduals r = strain_residuals(lm, cyl, Y1, 2.2, 0.0);
    CHECK(std::abs(r.Ea3[0]) < 1e-12);
    CHECK(std::abs(r.Ea3[1]) < 1e-12);
    CHECK(std::abs(r.E33) < 1e-12);
    CHECK(std::abs(r.dZEa3[0]) < 1e-12);
    CHECK(std::abs(r.dZEa3[1]) < 1e-12);
    CHECK(std::abs(r.dZE33) < 1e-12);
  }
}

TEST_CASE("fiber integrals: exact special cases and argument checks") {
  DerivedCoeffs co = derive_coefficients(MaterialSpec{});

  ThicknessIntegrals rest =
      through_thickness(co, SurfaceMotion::identity(), 0.4, 1.1, 0.0, co.h);
  CHECK(std::abs(rest.stored) < 1e-18);
  CHECK(std::abs(rest.kinetic) < 1e-18);
  CHECK(rest.quadrature_converged);
  CHECK(rest.cond == Approx(3.0).epsilon(1e-12));

  // rigid placement: both densities vanish identically
  SurfaceMotion rigid = SurfaceMotion::identity().transformed(
      rotation({0.3, -1.0, 0.7}, 0.9), {0.2, -0.4, 1.1});
  ThicknessIntegrals ri = through_thickness(co, rigid, 2.0, 3.0, 0.5, co.h);
  CHECK(std::abs(ri.stored) < 1e-16);
  CHECK(std::abs(ri.kinetic) < 1e-18);
  CHECK(energy_densities(strain_state(rigid, 2.0, 3.0, 0.5), co).stored < 1e-18);

  // uniform in-plane translation: kinetic fiber integral is rho h V^2/2 and
  // the midsurface density agrees exactly
  SurfaceMotion trans = SurfaceMotion::identity();
  trans.modes.push_back({0, 0.0, 0.0, 0.5, 0.0, TimeLaw::parse("t")});
  ThicknessIntegrals tr = through_thickness(co, trans, 1.0, 2.0, 0.7, co.h);
  CHECK(tr.stored < 1e-18);
  CHECK(tr.kinetic == Approx(0.5 * co.rho_R * co.h * 0.25).epsilon(1e-14));
  EnergyDensity etr = energy_densities(strain_state(trans, 1.0, 2.0, 0.7), co);
  CHECK(std::abs(tr.kinetic - etr.kinetic) < 1e-16);

  // uniform biaxial stretch: the reconstructed strain is constant in Z and
  // the fiber density equals the plane-stress membrane density exactly
  SurfaceMotion ust = SurfaceMotion::uniform_stretch(std::sqrt(1.2));
  ThicknessIntegrals us = through_thickness(co, ust, 0.6, 1.7, 0.0, co.h);
  EnergyDensity eus = energy_densities(strain_state(ust, 0.6, 1.7, 0.0), co);
  CHECK(eus.stored > 1e-4);
  CHECK(std::abs(us.stored - eus.stored) < 1e-13 * eus.stored);
  CHECK(us.quadrature_converged);

  // an oscillating bend exercises the rational kinetic integrand
  SurfaceMotion osc = SurfaceMotion::identity();
  osc.modes.push_back({2, 1.0, 0.0, 0.05, 0.2, TimeLaw::parse("sin:1")});
  ThicknessIntegrals ob = through_thickness(co, osc, 0.9, 0.4, 1.0, co.h);
  CHECK(ob.quadrature_converged);
  CHECK(ob.stored > 0.0);
  CHECK(ob.kinetic > 0.0);

  CHECK_THROWS_AS(through_thickness(co, ust, 0.0, 0.0, 0.0, co.h, 5), std::invalid_argument);
  CHECK_THROWS_AS(through_thickness(co, ust, 0.0, 0.0, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("fiber integrals converge to the midsurface energies") {
  MaterialSpec base;  // E = 1, nu = 0.25, rho_R = 1
  std::vector<double> hs = {0.1, 0.05, 0.025, 0.0125};

  ConvergenceReport mixed = convergence_study(base, MotionFamily::Mixed, hs);
  CHECK(mixed.stored_slope >= 3.8);
  CHECK(mixed.stored_slope <= 6.0);
  CHECK(mixed.kinetic_slope >= 3.4);
  CHECK(mixed.kinetic_slope <= 6.0);
  CHECK(mixed.stored_monotone);
  CHECK(mixed.kinetic_monotone);

  // the smooth symmetric families converge at fifth order (the h^4 moment
  // cancels across the fiber); the bounds above are sanity rails, the
  // certified floors are 3.8 and 3.4

  // a family static in time has no kinetic error at all
  ConvergenceReport stretch = convergence_study(base, MotionFamily::Stretch, hs);
  CHECK(stretch.stored_slope >= 3.8);
  for (double ke : stretch.kinetic_err) CHECK(ke < 1e-18);
  CHECK(std::isnan(stretch.kinetic_slope));

  ConvergenceReport bend = convergence_study(base, MotionFamily::Bend, hs);
  CHECK(bend.stored_slope >= 3.8);
  CHECK(bend.kinetic_slope >= 3.4);

  CHECK_THROWS_AS(convergence_study(base, MotionFamily::Mixed, {0.1}), std::invalid_argument);
  CHECK_THROWS_AS(convergence_study(base, MotionFamily::Mixed, {0.1, -0.05}),
                  std::invalid_argument);
}

TEST_CASE("zero length scales reproduce the classical plate energies on the family") {
  MaterialSpec ms;
  ms.h = 0.05;
  ms.d = 0.0;
  DerivedCoeffs co = derive_coefficients(ms);
  double lmix = co.lambda * co.mu / (co.lambda + 2.0 * co.mu);
  double r = co.lambda / (co.lambda + 2.0 * co.mu);

  SurfaceMotion m = family_motion(MotionFamily::Mixed, 0.05);
  for (double Y1 : {0.4, 2.1}) {
    StrainState st = strain_state(m, Y1, 2.9, 1.0);
    EnergyDensity en = energy_densities(st, co);

    double trE = st.E.trace(), trK = st.K.trace(), trEt = st.Et.trace();
    double e2 = 0.0, k2 = 0.0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        e2 += st.E(i, j) * st.E(i, j);
        k2 += st.K(i, j) * st.K(i, j);
      }
    double koiter = ms.h * (lmix * trE * trE + co.mu * e2) +
                    std::pow(ms.h, 3) / 24.0 * (lmix * trK * trK + co.mu * k2);
    double khp = 0.5 * ms.h * co.rho_R *
                 (dot(st.yt, st.yt) + ms.h * ms.h / 12.0 * r * r * trEt * trEt +
                  ms.h * ms.h / 12.0 * dot(st.nt, st.nt));
    CHECK(en.stored == Approx(koiter).epsilon(1e-14));
    CHECK(en.kinetic == Approx(khp).epsilon(1e-14));
  }
}
