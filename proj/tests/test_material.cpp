#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <stdexcept>
#include <string>

#include "gradplate/material.hpp"

using namespace gradplate;
using doctest::Approx;

TEST_CASE("Lame moduli from engineering constants and back") {
  Lame lm = lame_from_engineering(1.0, 0.25);
  CHECK(lm.lambda == Approx(0.4).epsilon(1e-12));
  CHECK(lm.mu == Approx(0.4).epsilon(1e-12));

  double E = 0, nu = 0;
  engineering_from_lame(lm, E, nu);
  CHECK(E == Approx(1.0).epsilon(1e-12));
  CHECK(nu == Approx(0.25).epsilon(1e-12));

  Lame g = lame_from_engineering(2.3, 0.31);
  engineering_from_lame(g, E, nu);
  CHECK(E == Approx(2.3).epsilon(1e-12));
  CHECK(nu == Approx(0.31).epsilon(1e-12));

  // lambda -> 0 as nu -> 0; the boundary itself is outside the domain
  Lame s = lame_from_engineering(1.0, 1e-12);
  CHECK(s.lambda == Approx(1e-12).epsilon(1e-3));
  CHECK(s.mu == Approx(0.5).epsilon(1e-9));

  CHECK_THROWS_AS(lame_from_engineering(1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(lame_from_engineering(1.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(lame_from_engineering(0.0, 0.25), std::domain_error);
  CHECK_THROWS_AS(engineering_from_lame(Lame{-0.1, 0.4}, E, nu), std::domain_error);
  CHECK_THROWS_AS(engineering_from_lame(Lame{0.4, 0.0}, E, nu), std::domain_error);
}

TEST_CASE("derived coefficients at the reference material") {
  MaterialSpec sp;  // E=1, nu=0.25, rho_R=1, h=0.1, d=0.1
  DerivedCoeffs co = derive_coefficients(sp);
  CHECK(co.lambda == Approx(0.4).epsilon(1e-12));
  CHECK(co.mu == Approx(0.4).epsilon(1e-12));
  CHECK(co.a == Approx(16.0 / 150.0).epsilon(1e-12));
  CHECK(co.ell_s2 == Approx(1.0 / 1200.0).epsilon(1e-12));
  CHECK(co.ell_k2 == Approx(1.0 / 600.0).epsilon(1e-12));
  CHECK(co.b == Approx(1.0 / 7500.0).epsilon(1e-12));
  CHECK(co.c == Approx(2.5e-3).epsilon(1e-12));
  CHECK(co.rho_s == Approx(0.1).epsilon(1e-12));
}

TEST_CASE("zero spacing and explicit length overrides") {
  MaterialSpec sp;
  sp.d = 0.0;
  DerivedCoeffs co = derive_coefficients(sp);
  CHECK(co.ell_s == 0.0);
  CHECK(co.ell_k == 0.0);
  CHECK(co.b == Approx(4.4444444444e-5).epsilon(1e-9));
  CHECK(co.c == Approx(8.3333333333e-4).epsilon(1e-9));

  MaterialSpec ov;
  ov.ell_s = 0.02;
  ov.ell_k = 0.03;
  DerivedCoeffs cov = derive_coefficients(ov);
  CHECK(cov.ell_s2 == Approx(4e-4).epsilon(1e-12));
  CHECK(cov.ell_k2 == Approx(9e-4).epsilon(1e-12));
  CHECK(cov.b == Approx(8.7111111111e-5).epsilon(1e-9));
  CHECK(cov.c == Approx(1.7333333333e-3).epsilon(1e-9));

  // classical limit zeroes both lengths regardless of d or overrides
  DerivedCoeffs cl = classical_limit(ov);
  CHECK(cl.ell_s2 == 0.0);
  CHECK(cl.ell_k2 == 0.0);
  CHECK(cl.b == Approx(4.4444444444e-5).epsilon(1e-9));
  CHECK(cl.c == Approx(8.3333333333e-4).epsilon(1e-9));
  CHECK(cl.a == Approx(cov.a).epsilon(1e-12));
}

TEST_CASE("membrane coefficients agree with the Koiter form") {
  // (a/2) nu = h lambda mu / (lambda + 2 mu), (a/2)(1 - nu) = h mu
  for (double E : {1.0, 3.7}) {
    for (double nu : {0.1, 0.25, 0.4}) {
      MaterialSpec sp;
      sp.E = E;
      sp.nu = nu;
      DerivedCoeffs co = derive_coefficients(sp);
      CHECK(0.5 * co.a * nu ==
            Approx(sp.h * co.lambda * co.mu / (co.lambda + 2.0 * co.mu)).epsilon(1e-12));
      CHECK(0.5 * co.a * (1.0 - nu) == Approx(sp.h * co.mu).epsilon(1e-12));
    }
  }
}

TEST_CASE("input validation") {
  auto bad = [](auto mutate) {
    MaterialSpec sp;
    mutate(sp);
    CHECK_THROWS_AS(derive_coefficients(sp), std::domain_error);
  };
  bad([](MaterialSpec& s) { s.E = 0.0; });
  bad([](MaterialSpec& s) { s.E = -1.0; });
  bad([](MaterialSpec& s) { s.nu = 0.0; });
  bad([](MaterialSpec& s) { s.nu = 0.5; });
  bad([](MaterialSpec& s) { s.nu = -0.2; });
  bad([](MaterialSpec& s) { s.rho_R = 0.0; });
  bad([](MaterialSpec& s) { s.h = 0.0; });
  bad([](MaterialSpec& s) { s.d = -0.1; });
  bad([](MaterialSpec& s) { s.ell_s = -0.01; });
  bad([](MaterialSpec& s) { s.ell_k = -0.01; });
}

TEST_CASE("material text parsing") {
  MaterialSpec sp = parse_material_text(
      "# reference sample\n"
      "E = 2.0\n"
      "nu= 0.3\n"
      "rho_R =1.2\n"
      "h=0.05\n"
      "d = 0.02\n"
      "ell_s = 0.01\n");
  CHECK(sp.E == 2.0);
  CHECK(sp.nu == 0.3);
  CHECK(sp.rho_R == 1.2);
  CHECK(sp.h == 0.05);
  CHECK(sp.d == 0.02);
  REQUIRE(sp.ell_s.has_value());
  CHECK(*sp.ell_s == 0.01);
  CHECK(!sp.ell_k.has_value());

  CHECK_THROWS_AS(parse_material_text("E=1\nnu=0.25\nrho_R=1\nh=0.1\nd=0.1\nE=2\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_material_text("E=1\nnu=0.25\nrho_R=1\nh=0.1\nd=0.1\nbogus=1\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_material_text("E=1\nnu=0.25\nrho_R=1\nh=0.1\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_material_text("E = abc\nnu=0.25\nrho_R=1\nh=0.1\nd=0.1\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_material_text("E = 1.0x\nnu=0.25\nrho_R=1\nh=0.1\nd=0.1\n"),
                  std::invalid_argument);

  // error messages name the offending key
  try {
    parse_material_text("E=1\nnu=0.25\nrho_R=1\nh=0.1\nd=0.1\nbogus=1\n");
    CHECK(false);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("bogus") != std::string::npos);
  }
}

TEST_CASE("material file round trip") {
  const char* path = "test_material_roundtrip.tmp";
  {
    std::ofstream out(path);
    out << "E = 1.5\nnu = 0.2\nrho_R = 0.9\nh = 0.08\nd = 0.04\n";
  }
  MaterialSpec sp = load_material(path);
  CHECK(sp.E == 1.5);
  CHECK(sp.nu == 0.2);
  CHECK(sp.h == 0.08);
  CHECK_THROWS_AS(load_material("does_not_exist.mat"), std::invalid_argument);
}
