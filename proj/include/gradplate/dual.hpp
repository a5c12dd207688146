#ifndef GRADPLATE_DUAL_HPP
#define GRADPLATE_DUAL_HPP

#include <array>
#include <cmath>

// Second-order Taylor jet in three variables (Y1, Y2, t).  Propagating jets
// through the strain/stress formulas yields exact first and second partial
// derivatives of any assembled quantity, which is how divergence-form terms
// and the thickness corrector gradients are evaluated without finite
// differences.

namespace gradplate {

struct Jet {
  double v = 0.0;                 // value
  std::array<double, 3> g{};      // gradient (d/dY1, d/dY2, d/dt)
  std::array<double, 6> h{};      // symmetric Hessian, packed upper triangle

  // packed index for (i,j), i<=j: (0,0)(0,1)(0,2)(1,1)(1,2)(2,2)
  static constexpr int hidx(int i, int j) {
    if (i > j) { int k = i; i = j; j = k; }
    constexpr int base[3] = {0, 3, 5};
    return base[i] + j - i;
  }
  double hess(int i, int j) const { return h[hidx(i, j)]; }

  Jet() = default;
  Jet(double value) : v(value) {}
  static Jet variable(double value, int index) {
    Jet j(value);
    j.g[index] = 1.0;
    return j;
  }
};

inline Jet operator+(const Jet& a, const Jet& b) {
  Jet r(a.v + b.v);
  for (int i = 0; i < 3; ++i) r.g[i] = a.g[i] + b.g[i];
  for (int i = 0; i < 6; ++i) r.h[i] = a.h[i] + b.h[i];
  return r;
}
inline Jet operator-(const Jet& a, const Jet& b) {
  Jet r(a.v - b.v);
  for (int i = 0; i < 3; ++i) r.g[i] = a.g[i] - b.g[i];
  for (int i = 0; i < 6; ++i) r.h[i] = a.h[i] - b.h[i];
  return r;
}
inline Jet operator-(const Jet& a) {
  Jet r(-a.v);
  for (int i = 0; i < 3; ++i) r.g[i] = -a.g[i];
  for (int i = 0; i < 6; ++i) r.h[i] = -a.h[i];
  return r;
}

inline Jet operator*(const Jet& a, const Jet& b) {
  Jet r(a.v * b.v);
  for (int i = 0; i < 3; ++i) r.g[i] = a.g[i] * b.v + a.v * b.g[i];
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      int k = Jet::hidx(i, j);
      r.h[k] = a.h[k] * b.v + a.g[i] * b.g[j] + a.g[j] * b.g[i] + a.v * b.h[k];
    }
  return r;
}

inline Jet inv(const Jet& b) {
  double iv = 1.0 / b.v;
  Jet r(iv);
  for (int i = 0; i < 3; ++i) r.g[i] = -b.g[i] * iv * iv;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      int k = Jet::hidx(i, j);
      r.h[k] = (2.0 * b.g[i] * b.g[j] * iv - b.h[k]) * iv * iv;
    }
  return r;
}

inline Jet operator/(const Jet& a, const Jet& b) { return a * inv(b); }

inline Jet operator+(const Jet& a, double s) { Jet r = a; r.v += s; return r; }
inline Jet operator+(double s, const Jet& a) { return a + s; }
inline Jet operator-(const Jet& a, double s) { Jet r = a; r.v -= s; return r; }
inline Jet operator-(double s, const Jet& a) { return (-a) + s; }
inline Jet operator*(const Jet& a, double s) {
  Jet r(a.v * s);
  for (int i = 0; i < 3; ++i) r.g[i] = a.g[i] * s;
  for (int i = 0; i < 6; ++i) r.h[i] = a.h[i] * s;
  return r;
}
inline Jet operator*(double s, const Jet& a) { return a * s; }
inline Jet operator/(const Jet& a, double s) { return a * (1.0 / s); }
inline Jet operator/(double s, const Jet& a) { return inv(a) * s; }

inline Jet sqrt(const Jet& a) {
  double s = std::sqrt(a.v);
  Jet r(s);
  double i1 = 0.5 / s;
  for (int i = 0; i < 3; ++i) r.g[i] = a.g[i] * i1;
  double i3 = -0.25 / (s * a.v);
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      int k = Jet::hidx(i, j);
      r.h[k] = a.h[k] * i1 + a.g[i] * a.g[j] * i3;
    }
  return r;
}

}  // namespace gradplate

#endif
