#include "gradplate/reduction.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "gradplate/dual.hpp"
#include "gradplate/kinematics.hpp"
#include "gradplate/numerics.hpp"
#include "gradplate/quadrature.hpp"

namespace gradplate {

namespace {

using JV3 = Vec3<Jet>;

V3 value(const JV3& a) { return {a.x.v, a.y.v, a.z.v}; }
V3 grad(const JV3& a, int k) { return {a.x.g[k], a.y.g[k], a.z.g[k]}; }
V3 hess(const JV3& a, int i, int j) {
  return {a.x.hess(i, j), a.y.hess(i, j), a.z.hess(i, j)};
}

double frob2(const M3& a) {
  double s = 0.0;
  for (double e : a.m) s += e * e;
  return s;
}

// Director and corrector with full jets in (Y1, Y2, t).  d = phi n involves
// only first derivatives of the motion and g only second ones, so order-2
// jets of those ingredients carry every derivative the fiber integrand needs
// (in particular second surface gradients and mixed time rates of g).
struct AnsatzJets {
  JV3 y, y1[2], y2[2][2];
  Jet phi;
  JV3 d, dd[2];
  JV3 g;
  double cond = 1.0;
};

AnsatzJets assemble(const Lame& lm, const SurfaceMotion& m, double Y1,
                    double Y2, double t) {
  AnsatzJets A;
  A.y = motion_jet(m, Y1, Y2, t, 0, 0, 0);
  A.y1[0] = motion_jet(m, Y1, Y2, t, 1, 0, 0);
  A.y1[1] = motion_jet(m, Y1, Y2, t, 0, 1, 0);
  A.y2[0][0] = motion_jet(m, Y1, Y2, t, 2, 0, 0);
  A.y2[0][1] = motion_jet(m, Y1, Y2, t, 1, 1, 0);
  A.y2[1][0] = A.y2[0][1];
  A.y2[1][1] = motion_jet(m, Y1, Y2, t, 0, 2, 0);

  const double theta = lm.lambda / (lm.lambda + 2.0 * lm.mu);

  JV3 N = cross(A.y1[0], A.y1[1]);
  Jet n2 = dot(N, N);
  if (!(n2.v > 0.0))
    throw std::domain_error("reduction: degenerate surface (zero normal)");
  Jet nlen = sqrt(n2);
  JV3 n = inv(nlen) * N;

  Jet trE = 0.5 * (dot(A.y1[0], A.y1[0]) - 1.0) +
            0.5 * (dot(A.y1[1], A.y1[1]) - 1.0);
  Jet rad = 1.0 - 2.0 * theta * trE;
  if (!(rad.v > 0.0))
    throw std::domain_error(
        "reduction: in-plane stretch too large, the thickness fiber "
        "collapses (1 - 2 lambda/(lambda+2mu) tr E <= 0)");
  A.phi = sqrt(rad);
  A.d = A.phi * n;

  // d_a d = (d_a phi) n + phi (d_a n), with
  //   d_a phi = -theta tr(d_a E)/phi,
  //   d_a n   = d_a N/|N| - N (N . d_a N)/|N|^3.
  for (int a = 0; a < 2; ++a) {
    JV3 dN = cross(A.y2[a][0], A.y1[1]) + cross(A.y1[0], A.y2[a][1]);
    JV3 dn = inv(nlen) * dN - (dot(N, dN) * inv(nlen * n2)) * N;
    Jet dtrE = dot(A.y2[a][0], A.y1[0]) + dot(A.y2[a][1], A.y1[1]);
    Jet dphi = -theta * dtrE / A.phi;
    A.dd[a] = dphi * n + A.phi * dn;
  }

  // Corrector: with F = grad y + d @ e3 and S the second Piola stress of the
  // quadratic density, the mixed block of M = d^2 W_s/dF dF contracted with
  // d_a d is
  //   b_j = sum_a [ S_{3a} (d_a d)_j + lambda d_j (y_{,a} . d_a d)
  //                 + mu (y_{,a})_j (d . d_a d) ]
  // and the normal-normal block is A = S_33 I + (lambda + mu) d @ d
  // + mu F F^T.  The director choice makes S_33 and S_{3a} vanish, which is
  // what pins the Z-derivative strain identities.
  Jet E33 = 0.5 * (dot(A.d, A.d) - 1.0);
  Jet tr3 = trE + E33;
  Jet S33 = lm.lambda * tr3 + 2.0 * lm.mu * E33;

  JV3 b{};
  for (int a = 0; a < 2; ++a) {
    Jet S3a = lm.mu * dot(A.y1[a], A.d);
    b += S3a * A.dd[a];
    b += (lm.lambda * dot(A.y1[a], A.dd[a])) * A.d;
    b += (lm.mu * dot(A.d, A.dd[a])) * A.y1[a];
  }

  Mat3<Jet> Am;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Jet ffT = A.y1[0][i] * A.y1[0][j] + A.y1[1][i] * A.y1[1][j] +
                A.d[i] * A.d[j];
      Am(i, j) = lm.mu * ffT + (lm.lambda + lm.mu) * (A.d[i] * A.d[j]);
      if (i == j) Am(i, j) = Am(i, j) + S33;
    }

  Eigen::Matrix3d Av;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) Av(i, j) = Am(i, j).v;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(Av);
  double lmin = es.eigenvalues()(0), lmax = es.eigenvalues()(2);
  if (!(lmin > 1e-12 * std::max(lmax, 0.0)))
    throw std::domain_error("reduction: corrector system is singular");
  A.cond = lmax / lmin;

  A.g = -(inverse(Am) * b);
  return A;
}

}  // namespace

Director director(const Lame& lm, const SurfaceMotion& m, double Y1, double Y2,
                  double t) {
  AnsatzJets aj = assemble(lm, m, Y1, Y2, t);
  return {aj.phi.v, value(aj.d)};
}

Corrector corrector(const Lame& lm, const SurfaceMotion& m, double Y1,
                    double Y2, double t) {
  AnsatzJets aj = assemble(lm, m, Y1, Y2, t);
  return {value(aj.g), aj.cond};
}

StrainResiduals strain_residuals(const Lame& lm, const SurfaceMotion& m,
                                 double Y1, double Y2, double t) {
  AnsatzJets aj = assemble(lm, m, Y1, Y2, t);
  const double theta = lm.lambda / (lm.lambda + 2.0 * lm.mu);
  V3 y1v[2] = {value(aj.y1[0]), value(aj.y1[1])};
  V3 ddv[2] = {value(aj.dd[0]), value(aj.dd[1])};
  V3 dv = value(aj.d), gv = value(aj.g);
  double trE = 0.5 * (dot(y1v[0], y1v[0]) - 1.0) +
               0.5 * (dot(y1v[1], y1v[1]) - 1.0);

  StrainResiduals r;
  for (int a = 0; a < 2; ++a) {
    r.Ea3[a] = 0.5 * dot(y1v[a], dv);
    r.dZEa3[a] = 0.5 * (dot(ddv[a], dv) + dot(y1v[a], gv));
  }
  r.E33 = 0.5 * (dot(dv, dv) - 1.0) + theta * trE;
  r.dZE33 = dot(gv, dv) + theta * (dot(ddv[0], y1v[0]) + dot(ddv[1], y1v[1]));
  return r;
}

ThicknessIntegrals through_thickness(const DerivedCoeffs& co,
                                     const SurfaceMotion& m, double Y1,
                                     double Y2, double t, double h,
                                     int quad_order) {
  if (!(h > 0.0))
    throw std::invalid_argument("through_thickness: h must be positive");
  if (quad_order < 6)
    throw std::invalid_argument(
        "through_thickness: quadrature order must be at least 6");

  Lame lm{co.lambda, co.mu};
  AnsatzJets aj = assemble(lm, m, Y1, Y2, t);

  // plain-value tables; jet gradients and Hessians supply the surface and
  // time derivatives of d and g that the fiber gradient needs
  V3 dv = value(aj.d), gv = value(aj.g);
  V3 ytv = grad(aj.y, 2), dtv = grad(aj.d, 2), gtv = grad(aj.g, 2);
  V3 y1v[2], ddv[2], dgv[2], ytg[2], ddt[2], dgt[2];
  V3 y2v[2][2], dddv[2][2], dggv[2][2];
  for (int a = 0; a < 2; ++a) {
    y1v[a] = value(aj.y1[a]);
    ddv[a] = value(aj.dd[a]);
    dgv[a] = grad(aj.g, a);
    ytg[a] = grad(aj.y1[a], 2);
    ddt[a] = grad(aj.dd[a], 2);
    dgt[a] = hess(aj.g, a, 2);
    for (int c = 0; c < 2; ++c) {
      y2v[a][c] = value(aj.y2[a][c]);
      dddv[a][c] = grad(aj.dd[a], c);
      dggv[a][c] = hess(aj.g, a, c);
    }
  }

  auto grad_at = [&](double Z) {
    M3 F;
    for (int a = 0; a < 2; ++a)
      F.set_col(a, y1v[a] + Z * ddv[a] + (0.5 * Z * Z) * dgv[a]);
    F.set_col(2, dv + Z * gv);
    return F;
  };

  auto stored_at = [&](double Z) {
    M3 F = grad_at(Z);
    // dF[c] = derivative of F along Y_c (c = 0, 1) or along Z (c = 2)
    M3 dF[3];
    for (int c = 0; c < 2; ++c) {
      for (int a = 0; a < 2; ++a)
        dF[c].set_col(a, y2v[a][c] + Z * dddv[a][c] + (0.5 * Z * Z) * dggv[a][c]);
      dF[c].set_col(2, ddv[c] + Z * dgv[c]);
    }
    for (int a = 0; a < 2; ++a) dF[2].set_col(a, ddv[a] + Z * dgv[a]);
    dF[2].set_col(2, gv);

    M3 C = transpose(F) * F;
    double trE3 = 0.5 * (C.trace() - 3.0);
    double e2 = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double Eij = 0.5 * (C(i, j) - (i == j ? 1.0 : 0.0));
        e2 += Eij * Eij;
      }
    double W = 0.5 * lm.lambda * trE3 * trE3 + lm.mu * e2;
    for (int c = 0; c < 3; ++c) {
      M3 P = transpose(dF[c]) * F;
      double trdE = P.trace();
      double de2 = 0.0;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          double dEij = 0.5 * (P(i, j) + P(j, i));
          de2 += dEij * dEij;
        }
      W += co.ell_s2 * (0.5 * lm.lambda * trdE * trdE + lm.mu * de2);
    }
    return W;
  };

  auto kinetic_at = [&](double Z) {
    V3 vt = ytv + Z * dtv + (0.5 * Z * Z) * gtv;
    M3 Ft;
    for (int a = 0; a < 2; ++a)
      Ft.set_col(a, ytg[a] + Z * ddt[a] + (0.5 * Z * Z) * dgt[a]);
    Ft.set_col(2, dtv + Z * gtv);
    M3 L = Ft * inverse(grad_at(Z));
    return 0.5 * co.rho_R * (dot(vt, vt) + co.ell_k2 * frob2(L));
  };

  auto run = [&](int n) {
    return std::pair<double, double>(
        gauss_integrate(stored_at, -0.5 * h, 0.5 * h, n),
        gauss_integrate(kinetic_at, -0.5 * h, 0.5 * h, n));
  };
  auto [s1, k1] = run(quad_order);
  auto [s2, k2] = run(2 * quad_order);

  auto settled = [](double a, double b) {
    return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b));
  };
  ThicknessIntegrals out;
  out.stored = s2;
  out.kinetic = k2;
  out.cond = aj.cond;
  out.quadrature_converged = settled(s1, s2) && settled(k1, k2);
  return out;
}

SurfaceMotion family_motion(MotionFamily fam, double h) {
  SurfaceMotion m = SurfaceMotion::identity();
  TimeLaw stat;                            // constant 1
  TimeLaw osc = TimeLaw::parse("sin:1");
  if (fam != MotionFamily::Bend) {
    m.modes.push_back({0, 1.0, 0.0, 0.8 * h, 0.4, stat});
    m.modes.push_back({1, 1.0, 1.0, 0.5 * h, 1.0, stat});
  }
  if (fam != MotionFamily::Stretch) {
    m.modes.push_back({2, 1.0, 0.0, 0.7 * h, 0.2, osc});
    m.modes.push_back({2, 1.0, 1.0, 0.4 * h, 0.9, osc});
  }
  return m;
}

ConvergenceReport convergence_study(const MaterialSpec& base, MotionFamily fam,
                                    const std::vector<double>& h_list,
                                    int quad_order) {
  if (h_list.size() < 2)
    throw std::invalid_argument("convergence_study: need at least two thicknesses");
  for (double h : h_list)
    if (!(h > 0.0))
      throw std::invalid_argument("convergence_study: thicknesses must be positive");

  static const double Y1s[3] = {0.4, 2.1, 3.9};
  static const double Y2s[3] = {0.7, 2.9, 5.1};
  const double t = 1.0;

  ConvergenceReport rep;
  rep.h = h_list;
  for (double h : h_list) {
    MaterialSpec ms = base;
    ms.h = h;
    ms.d = h;
    ms.ell_s.reset();
    ms.ell_k.reset();
    DerivedCoeffs co = derive_coefficients(ms);
    SurfaceMotion mo = family_motion(fam, h);
    double se = 0.0, ke = 0.0;
    for (double Y1 : Y1s)
      for (double Y2 : Y2s) {
        ThicknessIntegrals ti = through_thickness(co, mo, Y1, Y2, t, h, quad_order);
        EnergyDensity en = energy_densities(strain_state(mo, Y1, Y2, t), co);
        se += std::abs(ti.stored - en.stored);
        ke += std::abs(ti.kinetic - en.kinetic);
      }
    rep.stored_err.push_back(se / 9.0);
    rep.kinetic_err.push_back(ke / 9.0);
  }

  auto all_positive = [](const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double e) { return e > 0.0; });
  };
  const double nan = std::numeric_limits<double>::quiet_NaN();
  rep.stored_slope = all_positive(rep.stored_err) ? loglog_slope(rep.h, rep.stored_err) : nan;
  rep.kinetic_slope = all_positive(rep.kinetic_err) ? loglog_slope(rep.h, rep.kinetic_err) : nan;

  // monotone along decreasing h, whatever order the caller listed
  std::vector<std::size_t> idx(h_list.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t i, std::size_t j) { return h_list[i] > h_list[j]; });
  for (std::size_t q = 1; q < idx.size(); ++q) {
    if (!(rep.stored_err[idx[q]] < rep.stored_err[idx[q - 1]]))
      rep.stored_monotone = false;
    if (!(rep.kinetic_err[idx[q]] < rep.kinetic_err[idx[q - 1]]))
      rep.kinetic_monotone = false;
  }
  return rep;
}

}  // namespace gradplate
