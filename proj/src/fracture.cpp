#include "gradplate/fracture.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gradplate/quadrature.hpp"

namespace gradplate {

namespace {

constexpr double kPi = 3.14159265358979323846;

// T_k and derivatives up to order 4 for all k < n, from differentiating the
// three-term recurrence m times:
//   T^(m)_{k+1} = 2x T^(m)_k + 2m T^(m-1)_k - T^(m)_{k-1}.
// Stable on the whole interval, endpoints included.
struct ChebTable {
  std::vector<double> T[5];  // T[m][k]

  void fill(int n, double x) {
    for (int m = 0; m < 5; ++m) T[m].assign(n, 0.0);
    if (n > 0) T[0][0] = 1.0;
    if (n > 1) {
      T[0][1] = x;
      T[1][1] = 1.0;
    }
    for (int k = 1; k + 1 < n; ++k)
      for (int m = 0; m < 5; ++m) {
        double lower = (m > 0) ? 2.0 * m * T[m - 1][k] : 0.0;
        T[m][k + 1] = 2.0 * x * T[m][k] + lower - T[m][k - 1];
      }
  }
};

// (1 - x^2)^2 and derivatives; identically zero beyond order 4
void weight_derivs(double x, double w[5]) {
  double x2 = x * x;
  w[0] = (1.0 - x2) * (1.0 - x2);
  w[1] = -4.0 * x * (1.0 - x2);
  w[2] = 12.0 * x2 - 4.0;
  w[3] = 24.0 * x;
  w[4] = 24.0;
}

// m-th derivative of the clamped basis phi_k = w T_k for all k, by Leibniz
void basis_derivs(const ChebTable& tb, const double w[5], int m,
                  std::vector<double>& out) {
  static const int binom[5][5] = {{1, 0, 0, 0, 0},
                                  {1, 1, 0, 0, 0},
                                  {1, 2, 1, 0, 0},
                                  {1, 3, 3, 1, 0},
                                  {1, 4, 6, 4, 1}};
  int n = static_cast<int>(tb.T[0].size());
  out.assign(n, 0.0);
  for (int i = 0; i <= m; ++i) {
    double c = binom[m][i] * w[i];
    if (c == 0.0) continue;
    const std::vector<double>& Td = tb.T[m - i];
    for (int k = 0; k < n; ++k) out[k] += c * Td[k];
  }
}

// H[phi_k'](x) for all k < n at once.  phi_k' is a polynomial of degree
// k + 3, so after subtracting phi_k'(x) the quotient has degree k + 2 and a
// Gauss rule of order n/2 + 3 integrates it exactly on each side of x; the
// subtracted part contributes phi_k'(x) log((1+x)/(1-x)).
void hilbert_rows(int n, double x, std::vector<double>& acc) {
  const GaussRule& gr = gauss_legendre(n / 2 + 3);
  double w[5];
  ChebTable tb;

  weight_derivs(x, w);
  tb.fill(n, x);
  std::vector<double> dphix, dphis;
  basis_derivs(tb, w, 1, dphix);

  acc.assign(n, 0.0);
  for (int side = 0; side < 2; ++side) {
    double a = side == 0 ? -1.0 : x;
    double b = side == 0 ? x : 1.0;
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (std::size_t q = 0; q < gr.x.size(); ++q) {
      double s = mid + half * gr.x[q];
      double ww = half * gr.w[q] / (x - s);
      weight_derivs(s, w);
      tb.fill(n, s);
      basis_derivs(tb, w, 1, dphis);
      for (int k = 0; k < n; ++k) acc[k] += ww * (dphis[k] - dphix[k]);
    }
  }
  double lg = std::log((1.0 + x) / (1.0 - x));
  for (int k = 0; k < n; ++k) acc[k] = (acc[k] + dphix[k] * lg) / kPi;
}

}  // namespace

double finite_hilbert(const std::function<double(double)>& g, double x,
                      int panel_order) {
  if (!(std::abs(x) < 1.0 - 1e-12))
    throw std::invalid_argument(
        "finite_hilbert: evaluation point too close to an endpoint");
  if (panel_order < 4)
    throw std::invalid_argument("finite_hilbert: panel order too small");

  const GaussRule& gr = gauss_legendre(panel_order);
  double gx = g(x);
  double acc = 0.0;

  // each side [x, end] is covered by two dyadic ladders of panels meeting at
  // the half-span: one halving toward the endpoint, where g may have an
  // integrable singularity, and one halving toward x, where the subtracted
  // quotient is smooth but varies on a scale set by g, not by the span.
  // panel geometry is carried as the offset from the respective anchor
  // (half-span times 2^-m is an exact product) so deep panels keep full
  // relative precision.  both ladders stop at offset 1e-10, below which the
  // evaluation point itself quantizes; the endpoint sliver beyond that is
  // summed by geometric extrapolation of the per-level contributions, exact
  // in the limit for any algebraic behavior g ~ (1 -+ s)^(p-1) with p > 0,
  // while the sliver at x is one direct panel of the bounded quotient
  for (int side = 0; side < 2; ++side) {
    double end = (side == 0 ? -1.0 : 1.0);
    double span = end - x;
    double aspan = std::abs(span);
    double sgn = span < 0.0 ? -1.0 : 1.0;
    double A = 0.5 * aspan;

    if (A < 1e-10) {
      // evaluation point hugging the endpoint: one panel, degraded accuracy
      double mid = 0.5 * aspan, half = 0.5 * aspan;
      for (std::size_t q = 0; q < gr.x.size(); ++q) {
        double t = mid + half * gr.x[q];
        double s = x + sgn * t;
        if (s == x || std::abs(s) >= 1.0) continue;
        acc += half * gr.w[q] * (g(s) - gx) / (-sgn * t);
      }
      continue;
    }

    // ladder toward the endpoint: offsets off in [A 2^-m-1, A 2^-m]
    double ring[5] = {0.0, 0.0, 0.0, 0.0, 0.0};
    int levels = 0;
    for (int m = 0; m < 64; ++m) {
      double off_hi = A * std::pow(0.5, m + 1);
      if (off_hi < 4e-12) break;
      double mid = 1.5 * off_hi, half = 0.5 * off_hi;
      double c = 0.0;
      for (std::size_t q = 0; q < gr.x.size(); ++q) {
        double noff = mid + half * gr.x[q];
        double s = end - sgn * noff;
        if (s == x || std::abs(s) >= 1.0) continue;
        c += half * gr.w[q] * (g(s) - gx) / (sgn * noff - span);
      }
      acc += c;
      ring[levels % 5] = c;
      ++levels;
    }
    if (levels >= 6) {
      bool steady = true;
      for (int j = levels - 4; j <= levels - 1; ++j) {
        double rj = ring[j % 5] / ring[(j - 1) % 5];
        if (!(std::isfinite(rj) && rj > 0.0 && rj < 0.96)) steady = false;
      }
      if (steady) {
        double cl = ring[(levels - 1) % 5];
        double r = std::pow(cl / ring[(levels - 5) % 5], 0.25);
        acc += cl * r / (1.0 - r);
      }
    }

    // ladder toward x: offsets t in [A 2^-m-1, A 2^-m], then a closing panel
    // over [0, t_min] where the quotient is bounded
    double t_min = A;
    for (int m = 0; m < 64; ++m) {
      double t_hi = A * std::pow(0.5, m + 1);
      if (t_hi < 4e-12) break;
      double mid = 1.5 * t_hi, half = 0.5 * t_hi;
      double c = 0.0;
      for (std::size_t q = 0; q < gr.x.size(); ++q) {
        double t = mid + half * gr.x[q];
        double s = x + sgn * t;
        if (s == x || std::abs(s) >= 1.0) continue;
        c += half * gr.w[q] * (g(s) - gx) / (-sgn * t);
      }
      acc += c;
      t_min = t_hi;
    }
    {
      double mid = 0.5 * t_min, half = 0.5 * t_min;
      for (std::size_t q = 0; q < gr.x.size(); ++q) {
        double t = mid + half * gr.x[q];
        double s = x + sgn * t;
        if (s == x || std::abs(s) >= 1.0) continue;
        acc += half * gr.w[q] * (g(s) - gx) / (-sgn * t);
      }
    }
  }
  return (acc + gx * std::log((1.0 + x) / (1.0 - x))) / kPi;
}

double crack_basis_hilbert(int k, int n_basis, double x) {
  if (k < 0 || k >= n_basis)
    throw std::invalid_argument("crack_basis_hilbert: index out of range");
  std::vector<double> rows;
  hilbert_rows(n_basis, x, rows);
  return rows[k];
}

double CrackProfile::eval(double x, int deriv) const {
  if (deriv < 0 || deriv > 4)
    throw std::invalid_argument("CrackProfile::eval: derivative order in 0..4");
  int n = static_cast<int>(coeff.size());
  double w[5];
  weight_derivs(x, w);
  ChebTable tb;
  tb.fill(n, x);
  std::vector<double> d;
  basis_derivs(tb, w, deriv, d);
  double s = 0.0;
  for (int k = 0; k < n; ++k) s += coeff[k] * d[k];
  return s;
}

double CrackProfile::sup_norm(int deriv, double lo, double hi) const {
  const int M = 2000;
  double best = 0.0;
  for (int i = 0; i <= M; ++i)
    best = std::max(best, std::abs(eval(lo + (hi - lo) * i / M, deriv)));
  return best;
}

CrackProfile solve_crack(const CrackConfig& cfg) {
  if (!(cfg.alpha > 0.0))
    throw std::invalid_argument("solve_crack: alpha must be positive");
  if (!(cfg.beta > 0.0))
    throw std::invalid_argument("solve_crack: beta must be positive");
  if (cfg.N < 16)
    throw std::invalid_argument("solve_crack: need at least 16 basis functions");

  double w[5];
  ChebTable tb;
  std::vector<double> d2, d4, hrow;

  for (int attempt = 0; attempt < 2; ++attempt) {
    int n = cfg.N << attempt;

    Eigen::MatrixXd A(n, n);
    for (int j = 0; j < n; ++j) {
      double xj = std::cos(kPi * (2.0 * j + 1.0) / (2.0 * n));
      weight_derivs(xj, w);
      tb.fill(n, xj);
      basis_derivs(tb, w, 2, d2);
      basis_derivs(tb, w, 4, d4);
      hilbert_rows(n, xj, hrow);
      for (int k = 0; k < n; ++k)
        A(j, k) = cfg.beta * d4[k] - cfg.alpha * d2[k] + hrow[k];
    }

    Eigen::VectorXd rhs = Eigen::VectorXd::Constant(n, cfg.gamma);
    Eigen::VectorXd c = Eigen::PartialPivLU<Eigen::MatrixXd>(A).solve(rhs);

    Eigen::BDCSVD<Eigen::MatrixXd> svd(A);
    double smax = svd.singularValues()(0);
    double smin = svd.singularValues()(svd.singularValues().size() - 1);

    CrackProfile out;
    out.config = cfg;
    out.n_used = n;
    out.coeff.assign(c.data(), c.data() + n);
    out.cond = smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity();

    // convergence is judged on the discrete system: the collocation equations
    // must be solved to near roundoff and the coefficient spectrum must have
    // decayed into its tail, which is what makes the profile stable under
    // doubling.  the equation residual at fresh checkpoints is reported as a
    // diagnostic, not gated: the exact solution is C^4 but no smoother at the
    // tips, so the pointwise residual of any polynomial ansatz decays slowly
    // near x = +-1 even while f itself converges spectrally
    double sys = (A * c - rhs).cwiseAbs().maxCoeff();
    double cmax = 0.0, ctail = 0.0;
    for (int k = 0; k < n; ++k) cmax = std::max(cmax, std::abs(out.coeff[k]));
    for (int k = n - 8; k < n; ++k) ctail = std::max(ctail, std::abs(out.coeff[k]));

    // checkpoint residual at the first-kind nodes of order 2n; their angles
    // interleave the collocation angles, so no checkpoint is a solve node
    double res = 0.0;
    for (int i = 0; i < 2 * n; ++i) {
      double y = std::cos(kPi * (2.0 * i + 1.0) / (4.0 * n));
      weight_derivs(y, w);
      tb.fill(n, y);
      basis_derivs(tb, w, 2, d2);
      basis_derivs(tb, w, 4, d4);
      hilbert_rows(n, y, hrow);
      double r = -cfg.gamma;
      for (int k = 0; k < n; ++k)
        r += out.coeff[k] * (cfg.beta * d4[k] - cfg.alpha * d2[k] + hrow[k]);
      res = std::max(res, std::abs(r));
    }
    out.residual = res;

    if (sys <= 1e-8 * std::abs(cfg.gamma) && ctail <= 1e-10 * cmax) return out;
  }
  throw std::runtime_error(
      "solve_crack: basis doubling did not converge the coefficient spectrum");
}

double classical_reference(double gamma, double x) {
  return gamma * std::sqrt(std::max(0.0, 1.0 - x * x));
}

FieldSample reconstruct_field(const CrackProfile& f, double x, double z) {
  if (!(z > 0.0))
    throw std::invalid_argument("reconstruct_field: z must be positive");

  // panel edges double in width away from the kernel peak at s = x, starting
  // at the peak scale z, so the Lorentzian is resolved at every distance
  std::vector<double> edges;
  edges.push_back(-1.0);
  edges.push_back(1.0);
  if (x > -1.0 && x < 1.0) edges.push_back(x);
  for (int j = 0; j < 60; ++j) {
    double off = z * (std::pow(2.0, j + 1) - 1.0);
    if (x - off > -1.0) edges.push_back(x - off);
    if (x + off < 1.0) edges.push_back(x + off);
    if (off > 2.0) break;
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](double a, double b) { return b - a < 1e-15; }),
              edges.end());

  const GaussRule& gr = gauss_legendre(16);
  FieldSample out;
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    double mid = 0.5 * (edges[p] + edges[p + 1]);
    double half = 0.5 * (edges[p + 1] - edges[p]);
    for (std::size_t q = 0; q < gr.x.size(); ++q) {
      double s = mid + half * gr.x[q];
      double fv = f.eval(s, 0);
      double u = x - s, den = u * u + z * z;
      double ww = half * gr.w[q] * fv;
      out.v += ww * z / den;
      out.vx += ww * (-2.0 * z * u) / (den * den);
      out.vz += ww * (u * u - z * z) / (den * den);
    }
  }
  out.v /= kPi;
  out.vx /= kPi;
  out.vz /= kPi;
  return out;
}

double tip_diagnostics(const CrackProfile& f) {
  return std::max(f.sup_norm(2, 0.9, 1.0), f.sup_norm(2, -1.0, -0.9));
}

}  // namespace gradplate
