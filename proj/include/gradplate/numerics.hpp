#ifndef GRADPLATE_NUMERICS_HPP
#define GRADPLATE_NUMERICS_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace gradplate {

// Compensated (Kahan) accumulator for long reductions.
struct KahanSum {
  double s = 0.0, c = 0.0;
  void add(double x) {
    double y = x - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  double value() const { return s; }
};

// Least-squares slope of log(y) against log(x).  Used for Richardson /
// convergence-order fits.  Requires positive data.
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("loglog_slope: need >= 2 matching samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0))
      throw std::invalid_argument("loglog_slope: data must be positive");
    double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("loglog_slope: degenerate abscissae");
  return (n * sxy - sx * sy) / denom;
}

// Frequency of a sampled harmonic z_j = A cos(w t_j + p), t_j = j*dt, from the
// exact three-point identity z_{j+1} + z_{j-1} = 2 cos(w dt) z_j, solved in a
// least-squares sense over the whole window.  Requires 0 < w dt < pi.
inline double fit_harmonic_frequency(const std::vector<double>& z, double dt) {
  if (z.size() < 3) throw std::invalid_argument("fit_harmonic_frequency: need >= 3 samples");
  double num = 0.0, den = 0.0;
  for (std::size_t j = 1; j + 1 < z.size(); ++j) {
    num += (z[j + 1] + z[j - 1]) * z[j];
    den += 2.0 * z[j] * z[j];
  }
  if (den == 0.0) throw std::invalid_argument("fit_harmonic_frequency: zero signal");
  double r = num / den;
  if (!(r > -1.0 && r < 1.0))
    throw std::invalid_argument("fit_harmonic_frequency: sampling step incompatible with frequency");
  return std::acos(r) / dt;
}

// Golden-ratio low-discrepancy sequence on [0,1); the seed offsets the phase
// so distinct seeds give distinct deterministic sweeps.
inline double golden_point(std::size_t i, unsigned long long seed) {
  const double phi = 0.6180339887498948482;
  double u = (i + 1) * phi + seed * 0.7548776662466927;  // plastic-number offset per seed
  return u - std::floor(u);
}

}  // namespace gradplate

#endif
