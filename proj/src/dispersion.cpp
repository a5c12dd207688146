#include "gradplate/dispersion.hpp"

#include <cmath>
#include <stdexcept>

namespace gradplate {

DispersionSample dispersion_point(const DerivedCoeffs& co, double k) {
  if (!(k >= 0.0)) throw std::domain_error("dispersion_point: k must be >= 0");
  double qt = (co.nu / (1.0 - co.nu)) * (co.nu / (1.0 - co.nu));
  double k2 = k * k;
  double grad = 1.0 + co.ell_s2 * k2;
  DispersionSample s;
  s.k = k;
  s.cL2 = (co.a / co.rho_s) * grad / (1.0 + (co.c * qt + co.ell_k2) * k2);
  s.cT2 = (0.5 * co.a * (1.0 - co.nu) / co.rho_s) * grad / (1.0 + co.ell_k2 * k2);
  s.cN2 = (co.b / co.rho_s) * k2 / (1.0 + (co.c + co.ell_k2) * k2);
  return s;
}

M3 acoustic_tensor(const DerivedCoeffs& co, const V2& kv) {
  double k = norm(kv);
  if (!(k > 0.0)) throw std::invalid_argument("acoustic_tensor: zero wavevector");
  DispersionSample s = dispersion_point(co, k);
  V3 kh{kv.x / k, kv.y / k, 0.0};
  V3 kp{-kv.y / k, kv.x / k, 0.0};
  M3 A;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      A(i, j) = s.cL2 * kh[i] * kh[j] + s.cT2 * kp[i] * kp[j];
  A(2, 2) += s.cN2;
  return A;
}

double normal_crossing_k2(const DerivedCoeffs& co) {
  double diff = co.ell_k2 - co.ell_s2;
  if (!(co.ell_s2 > 0.0) || !(diff > 0.0))
    throw std::domain_error("normal_crossing_k2: branches do not cross at a positive k");
  return 12.0 * co.ell_s2 / (co.h * co.h * diff);
}

double longitudinal_crossing_k2(const DerivedCoeffs& co) {
  double qt = (co.nu / (1.0 - co.nu)) * (co.nu / (1.0 - co.nu));
  double num = co.ell_k2 * (1.0 + qt) - co.ell_s2;
  if (!(co.ell_s2 > 0.0) || !(num > 0.0))
    throw std::domain_error("longitudinal_crossing_k2: branches do not cross at a positive k");
  return num / (co.ell_s2 * qt * co.h * co.h / 12.0);
}

std::vector<DispersionSample> dispersion_sweep(const DerivedCoeffs& co, double kmin,
                                               double kmax, int n, bool logspace) {
  if (n < 2) throw std::invalid_argument("dispersion_sweep: need n >= 2");
  if (!(kmin >= 0.0) || !(kmax > kmin))
    throw std::invalid_argument("dispersion_sweep: need 0 <= kmin < kmax");
  if (logspace && !(kmin > 0.0))
    throw std::invalid_argument("dispersion_sweep: log spacing needs kmin > 0");
  std::vector<DispersionSample> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    double u = static_cast<double>(i) / (n - 1);
    double k = logspace ? kmin * std::pow(kmax / kmin, u) : kmin + (kmax - kmin) * u;
    out.push_back(dispersion_point(co, k));
  }
  return out;
}

}  // namespace gradplate
