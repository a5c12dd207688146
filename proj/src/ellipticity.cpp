#include "gradplate/ellipticity.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gradplate/numerics.hpp"

namespace gradplate {

double acoustic_contraction(const SurfaceGeometry& geo, const DerivedCoeffs& co, const V2& a,
                            const V3& b) {
  double a2 = a.x * a.x + a.y * a.y;
  double c0 = dot(b, geo.tangent[0]);
  double c1 = dot(b, geo.tangent[1]);
  double cc = c0 * c0 + c1 * c1;
  double ac = a.x * c0 + a.y * c1;
  double bn = dot(b, geo.normal);
  return 0.5 * co.a * co.ell_s2 * ((1.0 - co.nu) * a2 * a2 * cc + (1.0 + co.nu) * a2 * ac * ac) +
         co.b * a2 * a2 * bn * bn;
}

const char* to_string(EllipticityClass cls) {
  switch (cls) {
    case EllipticityClass::StronglyElliptic: return "strongly_elliptic";
    case EllipticityClass::LegendreHadamardOnly: return "legendre_hadamard_only";
    default: return "indefinite";
  }
}

EllipticityReport classify_ellipticity(const SurfaceGeometry& geo, const DerivedCoeffs& co,
                                       int samples, unsigned long long seed) {
  if (samples < 0) throw std::invalid_argument("classify_ellipticity: samples must be >= 0");

  // orthonormal tangent frame
  V3 t1 = (1.0 / norm(geo.tangent[0])) * geo.tangent[0];
  V3 t2 = geo.tangent[1] - dot(geo.tangent[1], t1) * t1;
  t2 = (1.0 / norm(t2)) * t2;

  EllipticityReport rep;
  rep.samples = samples;
  rep.seed = seed;
  double best = std::numeric_limits<double>::infinity();
  double tbest = std::numeric_limits<double>::infinity();

  auto consider = [&](const V2& av, const V3& bv, bool tangent) {
    double q = acoustic_contraction(geo, co, av, bv);
    if (q < best) {
      best = q;
      rep.min_a = av;
      rep.min_b = bv;
    }
    if (tangent && q < tbest) tbest = q;
  };

  const double r2 = std::sqrt(0.5);
  const V2 aspec[4] = {{1, 0}, {0, 1}, {r2, r2}, {r2, -r2}};
  V3 bis = t1 + t2;
  bis = (1.0 / norm(bis)) * bis;
  const std::pair<V3, bool> bspec[] = {
      {t1, true},          {t2, true},          {bis, true}, {geo.normal, false},
      {V3{1, 0, 0}, false}, {V3{0, 1, 0}, false}, {V3{0, 0, 1}, false}};
  for (const V2& av : aspec)
    for (const auto& [bv, tangent] : bspec) consider(av, bv, tangent);

  for (int i = 0; i < samples; ++i) {
    double th = 2.0 * M_PI * golden_point(i, seed);
    V2 av{std::cos(th), std::sin(th)};
    double z = 2.0 * golden_point(i, seed + 7) - 1.0;
    double ph = 2.0 * M_PI * golden_point(i, seed + 13);
    double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    consider(av, V3{r * std::cos(ph), r * std::sin(ph), z}, false);
    double psi = 2.0 * M_PI * golden_point(i, seed + 23);
    consider(av, std::cos(psi) * t1 + std::sin(psi) * t2, true);
  }

  rep.min_value = best;
  rep.tangent_min = tbest;
  double tol = 1e-12 * (co.a * co.ell_s2 + co.b);
  if (best > tol)
    rep.cls = EllipticityClass::StronglyElliptic;
  else if (best >= -tol)
    rep.cls = EllipticityClass::LegendreHadamardOnly;
  else
    rep.cls = EllipticityClass::Indefinite;
  return rep;
}

}  // namespace gradplate
