#ifndef GRADPLATE_LINALG_HPP
#define GRADPLATE_LINALG_HPP

#include <array>
#include <cmath>
#include <stdexcept>

// Small fixed-size vector/matrix types, templated on the scalar so the same
// formulas run on plain doubles and on Taylor jets (see dual.hpp).

namespace gradplate {

template <class S>
struct Vec2 {
  S x{}, y{};
  S& operator[](int i) { return i == 0 ? x : y; }
  const S& operator[](int i) const { return i == 0 ? x : y; }
};

template <class S>
struct Vec3 {
  S x{}, y{}, z{};
  S& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
  const S& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

template <class S> Vec2<S> operator+(const Vec2<S>& a, const Vec2<S>& b) { return {a.x + b.x, a.y + b.y}; }
template <class S> Vec2<S> operator-(const Vec2<S>& a, const Vec2<S>& b) { return {a.x - b.x, a.y - b.y}; }
template <class S, class T> auto operator*(const T& s, const Vec2<S>& a) -> Vec2<decltype(s * a.x)> { return {s * a.x, s * a.y}; }
template <class S> S dot(const Vec2<S>& a, const Vec2<S>& b) { return a.x * b.x + a.y * b.y; }

template <class S> Vec3<S> operator+(const Vec3<S>& a, const Vec3<S>& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
template <class S> Vec3<S> operator-(const Vec3<S>& a, const Vec3<S>& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
template <class S> Vec3<S> operator-(const Vec3<S>& a) { return {-a.x, -a.y, -a.z}; }
template <class S, class T> auto operator*(const T& s, const Vec3<S>& a) -> Vec3<decltype(s * a.x)> { return {s * a.x, s * a.y, s * a.z}; }
template <class S> Vec3<S>& operator+=(Vec3<S>& a, const Vec3<S>& b) { a.x = a.x + b.x; a.y = a.y + b.y; a.z = a.z + b.z; return a; }
template <class S> Vec3<S>& operator-=(Vec3<S>& a, const Vec3<S>& b) { a.x = a.x - b.x; a.y = a.y - b.y; a.z = a.z - b.z; return a; }
template <class S> S dot(const Vec3<S>& a, const Vec3<S>& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
template <class S> Vec3<S> cross(const Vec3<S>& a, const Vec3<S>& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

template <class S>
struct Mat2 {
  // row-major 2x2
  std::array<S, 4> m{};
  S& operator()(int i, int j) { return m[2 * i + j]; }
  const S& operator()(int i, int j) const { return m[2 * i + j]; }
  S trace() const { return m[0] + m[3]; }
  S det() const { return m[0] * m[3] - m[1] * m[2]; }
};

template <class S>
Mat2<S> inverse(const Mat2<S>& a) {
  S d = a.det();
  Mat2<S> r;
  r.m[0] = a.m[3] / d;
  r.m[1] = (-1.0) * a.m[1] / d;
  r.m[2] = (-1.0) * a.m[2] / d;
  r.m[3] = a.m[0] / d;
  return r;
}

template <class S>
struct Mat3 {
  // row-major 3x3
  std::array<S, 9> m{};
  S& operator()(int i, int j) { return m[3 * i + j]; }
  const S& operator()(int i, int j) const { return m[3 * i + j]; }
  S trace() const { return m[0] + m[4] + m[8]; }
  static Mat3 identity() {
    Mat3 r;
    r.m[0] = S(1.0); r.m[4] = S(1.0); r.m[8] = S(1.0);
    return r;
  }
  Vec3<S> col(int j) const { return {m[j], m[3 + j], m[6 + j]}; }
  Vec3<S> row(int i) const { return {m[3 * i], m[3 * i + 1], m[3 * i + 2]}; }
  void set_col(int j, const Vec3<S>& v) { m[j] = v.x; m[3 + j] = v.y; m[6 + j] = v.z; }
};

template <class S>
S det(const Mat3<S>& a) {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1))
       - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0))
       + a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

template <class S>
Mat3<S> inverse(const Mat3<S>& a) {
  Mat3<S> r;
  r(0, 0) = a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1);
  r(0, 1) = a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2);
  r(0, 2) = a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1);
  r(1, 0) = a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2);
  r(1, 1) = a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0);
  r(1, 2) = a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2);
  r(2, 0) = a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0);
  r(2, 1) = a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1);
  r(2, 2) = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  S d = det(a);
  for (auto& e : r.m) e = e / d;
  return r;
}

template <class S>
Vec3<S> operator*(const Mat3<S>& a, const Vec3<S>& v) {
  return {a(0, 0) * v.x + a(0, 1) * v.y + a(0, 2) * v.z,
          a(1, 0) * v.x + a(1, 1) * v.y + a(1, 2) * v.z,
          a(2, 0) * v.x + a(2, 1) * v.y + a(2, 2) * v.z};
}

template <class S>
Mat3<S> operator*(const Mat3<S>& a, const Mat3<S>& b) {
  Mat3<S> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      S s = a(i, 0) * b(0, j);
      s = s + a(i, 1) * b(1, j);
      s = s + a(i, 2) * b(2, j);
      r(i, j) = s;
    }
  return r;
}

template <class S>
Mat3<S> transpose(const Mat3<S>& a) {
  Mat3<S> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = a(j, i);
  return r;
}

using V2 = Vec2<double>;
using V3 = Vec3<double>;
using M2 = Mat2<double>;
using M3 = Mat3<double>;

inline double norm(const V3& v) { return std::sqrt(dot(v, v)); }
inline double norm(const V2& v) { return std::sqrt(dot(v, v)); }

// Rotation about a (not necessarily unit) axis by angle, Rodrigues form.
inline M3 rotation(const V3& axis, double angle) {
  double n = norm(axis);
  if (n == 0.0) throw std::invalid_argument("rotation: zero axis");
  V3 u = (1.0 / n) * axis;
  double c = std::cos(angle), s = std::sin(angle);
  M3 r;
  r(0, 0) = c + u.x * u.x * (1 - c);
  r(0, 1) = u.x * u.y * (1 - c) - u.z * s;
  r(0, 2) = u.x * u.z * (1 - c) + u.y * s;
  r(1, 0) = u.y * u.x * (1 - c) + u.z * s;
  r(1, 1) = c + u.y * u.y * (1 - c);
  r(1, 2) = u.y * u.z * (1 - c) - u.x * s;
  r(2, 0) = u.z * u.x * (1 - c) - u.y * s;
  r(2, 1) = u.z * u.y * (1 - c) + u.x * s;
  r(2, 2) = c + u.z * u.z * (1 - c);
  return r;
}

}  // namespace gradplate

#endif
