#include "gradplate/kinematics.hpp"

#include <cmath>
#include <stdexcept>

#include "gradplate/dual.hpp"
#include "gradplate/numerics.hpp"

namespace gradplate {

namespace {

template <class S>
S sqnorm(const Mat2<S>& m) {
  S s = m.m[0] * m.m[0];
  for (int i = 1; i < 4; ++i) s = s + m.m[i] * m.m[i];
  return s;
}

// Strain measures and stress vectors over a generic scalar.  Inputs are the
// motion derivatives at one (Y, t):
//   d1y[a]     = y,a          d2y[a][b] = y,ab        dtd1y[a] = d_t y,a
// Index convention: all raising with the flat delta except where the inverse
// surface metric appears explicitly.
template <class S>
struct StressEvalT {
  Vec3<S> T[2];
  Vec3<S> M[2][2];
  Vec3<S> Pi[2];
};

template <class S>
StressEvalT<S> stress_eval(const DerivedCoeffs& co, const Vec3<S> d1y[2],
                           const Vec3<S> d2y[2][2], const Vec3<S> dtd1y[2]) {
  const double nu = co.nu;
  const double qt = (nu / (1.0 - nu)) * (nu / (1.0 - nu));

  Mat2<S> g;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) g(a, b) = dot(d1y[a], d1y[b]);
  Mat2<S> gi = inverse(g);

  Vec3<S> N = cross(d1y[0], d1y[1]);
  using std::sqrt;
  S nn = sqrt(dot(N, N));
  Vec3<S> n = (1.0 / nn) * N;

  Mat2<S> E, K, Et;
  Mat2<S> dE[2];
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      E(a, b) = 0.5 * (g(a, b) - (a == b ? 1.0 : 0.0));
      K(a, b) = dot(n, d2y[a][b]);
      Et(a, b) = 0.5 * (dot(dtd1y[a], d1y[b]) + dot(d1y[a], dtd1y[b]));
      for (int c = 0; c < 2; ++c)
        dE[c](a, b) = 0.5 * (dot(d2y[a][c], d1y[b]) + dot(d1y[a], d2y[b][c]));
    }
  S trE = E.trace(), trK = K.trace(), trEt = Et.trace();
  S trdE[2] = {dE[0].trace(), dE[1].trace()};

  S chr[2][2][2];
  for (int c = 0; c < 2; ++c)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        chr[c][a][b] = gi(c, 0) * dot(d2y[a][b], d1y[0]) + gi(c, 1) * dot(d2y[a][b], d1y[1]);

  StressEvalT<S> out;
  for (int al = 0; al < 2; ++al) {
    Vec3<S> T{S(0.0), S(0.0), S(0.0)};
    for (int b = 0; b < 2; ++b) {
      S coef = co.a * ((al == b ? nu : 0.0) * trE + (1.0 - nu) * E(al, b));
      T += coef * d1y[b];
      for (int r = 0; r < 2; ++r) {
        S gcoef = co.a * co.ell_s2 *
                  ((al == b ? nu : 0.0) * trdE[r] + (1.0 - nu) * dE[r](al, b));
        T += gcoef * d2y[b][r];
      }
    }
    S bend = S(0.0);
    for (int b = 0; b < 2; ++b)
      for (int r = 0; r < 2; ++r)
        bend = bend + ((b == r ? nu : 0.0) * trK + (1.0 - nu) * K(b, r)) * chr[al][b][r];
    T -= (co.b * bend) * n;
    out.T[al] = T;

    for (int be = 0; be < 2; ++be) {
      Vec3<S> M{S(0.0), S(0.0), S(0.0)};
      for (int r = 0; r < 2; ++r) {
        S coef = 0.5 * co.a * co.ell_s2 *
                 (nu * ((al == r ? 1.0 : 0.0) * trdE[be] + (be == r ? 1.0 : 0.0) * trdE[al]) +
                  (1.0 - nu) * (dE[al](be, r) + dE[be](al, r)));
        M += coef * d1y[r];
      }
      M += (co.b * ((al == be ? nu : 0.0) * trK + (1.0 - nu) * K(al, be))) * n;
      out.M[al][be] = M;
    }

    Vec3<S> Pi = (co.rho_s * qt * co.c * trEt) * d1y[al];
    S nrate = gi(al, 0) * dot(n, dtd1y[0]) + gi(al, 1) * dot(n, dtd1y[1]);
    Pi += (co.rho_s * co.c * nrate) * n;
    Pi += (co.rho_s * co.ell_k2) * dtd1y[al];
    out.Pi[al] = Pi;
  }
  return out;
}

void motion_derivs(const SurfaceMotion& m, double Y1, double Y2, double t, V3 d1y[2],
                   V3 d2y[2][2], V3 dtd1y[2]) {
  d1y[0] = m.eval(Y1, Y2, t, 1, 0, 0);
  d1y[1] = m.eval(Y1, Y2, t, 0, 1, 0);
  d2y[0][0] = m.eval(Y1, Y2, t, 2, 0, 0);
  d2y[0][1] = d2y[1][0] = m.eval(Y1, Y2, t, 1, 1, 0);
  d2y[1][1] = m.eval(Y1, Y2, t, 0, 2, 0);
  dtd1y[0] = m.eval(Y1, Y2, t, 1, 0, 1);
  dtd1y[1] = m.eval(Y1, Y2, t, 0, 1, 1);
}

}  // namespace

StrainState strain_state(const SurfaceMotion& m, double Y1, double Y2, double t) {
  V3 d1y[2], d2y[2][2], dtd1y[2];
  motion_derivs(m, Y1, Y2, t, d1y, d2y, dtd1y);

  StrainState st;
  SurfaceGeometry& geo = st.geo;
  geo.tangent[0] = d1y[0];
  geo.tangent[1] = d1y[1];
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) geo.metric(a, b) = dot(d1y[a], d1y[b]);
  V3 N = cross(d1y[0], d1y[1]);
  geo.area = norm(N);
  if (!(geo.area > 1e-10))
    throw std::invalid_argument("strain_state: motion is not an immersion at this point");
  geo.metric_inv = inverse(geo.metric);
  geo.normal = (1.0 / geo.area) * N;
  for (int c = 0; c < 2; ++c)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        geo.christoffel[c][a][b] = geo.metric_inv(c, 0) * dot(d2y[a][b], d1y[0]) +
                                   geo.metric_inv(c, 1) * dot(d2y[a][b], d1y[1]);

  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      st.E(a, b) = 0.5 * (geo.metric(a, b) - (a == b ? 1.0 : 0.0));
      st.K(a, b) = dot(geo.normal, d2y[a][b]);
      st.Et(a, b) = 0.5 * (dot(dtd1y[a], d1y[b]) + dot(d1y[a], dtd1y[b]));
      for (int c = 0; c < 2; ++c)
        st.dE[c](a, b) = 0.5 * (dot(d2y[a][c], d1y[b]) + dot(d1y[a], d2y[b][c]));
    }

  st.yt = m.eval(Y1, Y2, t, 0, 0, 1);
  st.ytg[0] = dtd1y[0];
  st.ytg[1] = dtd1y[1];
  V3 Nt = cross(dtd1y[0], d1y[1]) + cross(d1y[0], dtd1y[1]);
  V3 proj = Nt - dot(geo.normal, Nt) * geo.normal;
  st.nt = (1.0 / geo.area) * proj;
  return st;
}

EnergyDensity energy_densities(const StrainState& st, const DerivedCoeffs& co) {
  const double nu = co.nu;
  const double qt = (nu / (1.0 - nu)) * (nu / (1.0 - nu));
  double trE = st.E.trace();
  double stored = nu * trE * trE + (1.0 - nu) * sqnorm(st.E);
  for (int c = 0; c < 2; ++c) {
    double trd = st.dE[c].trace();
    stored += co.ell_s2 * (nu * trd * trd + (1.0 - nu) * sqnorm(st.dE[c]));
  }
  stored *= 0.5 * co.a;
  double trK = st.K.trace();
  stored += 0.5 * co.b * (nu * trK * trK + (1.0 - nu) * sqnorm(st.K));

  double trEt = st.Et.trace();
  double kin = dot(st.yt, st.yt) + qt * co.c * trEt * trEt + co.c * dot(st.nt, st.nt) +
               co.ell_k2 * (dot(st.ytg[0], st.ytg[0]) + dot(st.ytg[1], st.ytg[1]));
  kin *= 0.5 * co.rho_s;
  return {stored, kin};
}

StressVectors stress_vectors(const SurfaceMotion& m, const DerivedCoeffs& co, double Y1,
                             double Y2, double t) {
  V3 d1y[2], d2y[2][2], dtd1y[2];
  motion_derivs(m, Y1, Y2, t, d1y, d2y, dtd1y);
  auto ev = stress_eval<double>(co, d1y, d2y, dtd1y);
  StressVectors out;
  for (int a = 0; a < 2; ++a) {
    out.T[a] = ev.T[a];
    out.Pi[a] = ev.Pi[a];
    for (int b = 0; b < 2; ++b) out.M[a][b] = ev.M[a][b];
  }
  return out;
}

V3 stress_divergence(const SurfaceMotion& m, const DerivedCoeffs& co, double Y1, double Y2,
                     double t) {
  Vec3<Jet> d1y[2], d2y[2][2], dtd1y[2];
  d1y[0] = motion_jet(m, Y1, Y2, t, 1, 0, 0);
  d1y[1] = motion_jet(m, Y1, Y2, t, 0, 1, 0);
  d2y[0][0] = motion_jet(m, Y1, Y2, t, 2, 0, 0);
  d2y[0][1] = d2y[1][0] = motion_jet(m, Y1, Y2, t, 1, 1, 0);
  d2y[1][1] = motion_jet(m, Y1, Y2, t, 0, 2, 0);
  dtd1y[0] = motion_jet(m, Y1, Y2, t, 1, 0, 1);
  dtd1y[1] = motion_jet(m, Y1, Y2, t, 0, 1, 1);

  auto ev = stress_eval<Jet>(co, d1y, d2y, dtd1y);
  V3 div{0, 0, 0};
  for (int i = 0; i < 3; ++i) {
    double s = 0.0;
    for (int a = 0; a < 2; ++a) {
      s += ev.T[a][i].g[a];                    // d_a T^a
      s += ev.Pi[a][i].hess(a, 2);             // d_a d_t Pi^a
      for (int b = 0; b < 2; ++b) s -= ev.M[a][b][i].hess(a, b);  // d_a d_b M^ab
    }
    div[i] = s;
  }
  return div;
}

V3 linearized_divergence(const SurfaceMotion& u, const DerivedCoeffs& co, double Y1, double Y2,
                         double t) {
  const double nu = co.nu;
  const double qt = (nu / (1.0 - nu)) * (nu / (1.0 - nu));
  auto D = [&](int i, int ax, int ay, int at) { return u.eval(Y1, Y2, t, ax, ay, at)[i]; };
  auto lap = [&](int i, int ax, int ay, int at) {
    return D(i, ax + 2, ay, at) + D(i, ax, ay + 2, at);
  };

  V3 lin{0, 0, 0};
  for (int be = 0; be < 2; ++be) {
    int bx = (be == 0) ? 1 : 0, by = 1 - bx;  // derivative d_be
    // F_be = (1+nu)/2 d_be(div u) + (1-nu)/2 lap u_be
    double dtheta = D(0, bx + 1, by, 0) + D(1, bx, by + 1, 0);
    double F = 0.5 * (1.0 + nu) * dtheta + 0.5 * (1.0 - nu) * lap(be, 0, 0, 0);
    double dtheta_lap = lap(0, bx + 1, by, 0) + lap(1, bx, by + 1, 0);
    double lapF = 0.5 * (1.0 + nu) * dtheta_lap +
                  0.5 * (1.0 - nu) * (D(be, 4, 0, 0) + 2.0 * D(be, 2, 2, 0) + D(be, 0, 4, 0));
    double inert = qt * co.c * (D(0, bx + 1, by, 2) + D(1, bx, by + 1, 2)) +
                   co.ell_k2 * lap(be, 0, 0, 2);
    lin[be] = co.a * (F - co.ell_s2 * lapF) + co.rho_s * inert;
  }
  double bilap_w = D(2, 4, 0, 0) + 2.0 * D(2, 2, 2, 0) + D(2, 0, 4, 0);
  lin[2] = -co.b * bilap_w + co.rho_s * (co.c + co.ell_k2) * lap(2, 0, 0, 2);
  return lin;
}

double linearization_slope(const SurfaceMotion& u, const DerivedCoeffs& co,
                           const std::vector<double>& deltas, double t) {
  if (deltas.size() < 2)
    throw std::invalid_argument("linearization_slope: need >= 2 decreasing deltas");
  for (std::size_t i = 1; i < deltas.size(); ++i)
    if (!(deltas[i] < deltas[i - 1]) || !(deltas[i] > 0.0))
      throw std::invalid_argument("linearization_slope: deltas must be positive and decreasing");

  const int gp = 5;
  std::vector<double> errs;
  for (double delta : deltas) {
    SurfaceMotion y = u;
    y.base[0][0] = 1.0; y.base[0][1] = 0.0;
    y.base[1][0] = 0.0; y.base[1][1] = 1.0;
    y.base[2][0] = 0.0; y.base[2][1] = 0.0;
    y.scale = u.scale * delta;
    double err = 0.0;
    for (int i = 0; i < gp; ++i)
      for (int j = 0; j < gp; ++j) {
        double Y1 = 0.37 + 2.0 * M_PI * i / gp;
        double Y2 = 0.73 + 2.0 * M_PI * j / gp;
        V3 nl = stress_divergence(y, co, Y1, Y2, t);
        V3 ln = linearized_divergence(u, co, Y1, Y2, t);
        for (int c = 0; c < 3; ++c) err = std::max(err, std::abs(nl[c] - delta * ln[c]));
      }
    errs.push_back(err);
  }
  return loglog_slope(deltas, errs);
}

}  // namespace gradplate
